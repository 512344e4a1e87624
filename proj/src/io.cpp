#include "unitals/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace unitals {

void write_incidence(const ProjectivePlane& plane, std::ostream& out) {
    for (std::uint32_t l = 0; l < plane.num_lines(); ++l) {
        const auto& pts = plane.points_on(l);
        for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i];
        out << '\n';
    }
}

Json pencil_to_json(const PencilStructure& ps, const Certificate& cert) {
    Json sizes = Json::array();
    for (std::size_t j = 0; j < ps.lambda.size(); ++j) sizes.push_back({{"lambda", ps.lambda[j]}, {"size", ps.unitals[j].count()}});
    return {{"q", ps.q},
            {"Lambda", ps.lambda},
            {"P", ps.P.count()},
            {"L", ps.L.size()},
            {"p_inf", ps.p_inf},
            {"ell_inf", ps.ell_inf},
            {"unital_sizes", sizes},
            {"certificate", cert.to_json()}};
}

Json coloring_to_json(const PointColoring& pc) {
    Json map = Json::object();
    for (std::size_t p = 0; p < pc.color_of.size(); ++p)
        if (pc.color_of[p] >= 0) map[std::to_string(p)] = pc.color_of[p];
    return {{"seed", pc.seed}, {"c", pc.c}, {"m", pc.m}, {"colors", map}};
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

Graph read_edge_list(std::istream& in, std::size_t n) {
    Graph g(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint64_t a, b;
        if (!(ls >> a >> b) || a >= n || b >= n || a == b) throw std::runtime_error("malformed edge line: " + line);
        g.add_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    return g;
}

Json pattern_cliques_to_json(const PatternGraph& g, const PencilStructure* pencil) {
    Json cliques = Json::array();
    for (const auto& pc : g.cliques()) cliques.push_back({{"point", pc.point}, {"members", pc.members}});
    Json j = {{"color", g.color()}, {"vertices", g.num_vertices()}};
    if (pencil) j["line_ids"] = pencil->L;
    j["point_cliques"] = cliques;
    return j;
}

PatternGraph read_pattern(std::istream& edges, const Json& j) {
    const std::size_t n = j.at("vertices");
    std::vector<PointClique> cliques;
    for (const auto& c : j.at("point_cliques")) cliques.push_back({c.at("point"), c.at("members").get<std::vector<std::uint32_t>>()});
    PatternGraph g(j.at("color"), n, std::move(cliques));
    g.set_graph(read_edge_list(edges, n));
    return g;
}

Json sparse_to_json(const SparseGraph& sg) {
    Json edges = Json::array();
    for (auto [a, b] : sg.kept_edges()) edges.push_back({a, b});
    return {{"base_digest", pattern_digest(*sg.base)},
            {"color", sg.base->color()},
            {"seed", sg.params.seed},
            {"alpha", sg.params.alpha},
            {"k", sg.params.k},
            {"kept_edges", edges}};
}

void write_semisat(const SemisatColoring& sc, std::ostream& out) {
    const std::size_t n = sc.n();
    out << n << ' ' << sc.r << '\n';
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) out << u << ' ' << v << ' ' << sc.color(u, v) + 1 << '\n';
}

}  // namespace unitals
