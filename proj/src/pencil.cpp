#include "unitals/pencil.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace unitals {

std::uint32_t pencil_parameter(const ProjectivePlane& plane, std::uint32_t point) {
    const Field& f = plane.field();
    const Triple t = plane.point(point).coords;
    if (t.z == 0) throw GeometryError("point on ell_inf has no pencil parameter");
    const std::uint32_t a = UnitalForm{0}.evaluate(f, t);
    const std::uint32_t b = f.norm(t.z);
    return f.neg(f.mul(a, f.inv(b)));
}

PencilStructure build_pencil(std::shared_ptr<const ProjectivePlane> plane, std::optional<std::uint32_t> lambda_size) {
    const std::uint32_t q = plane->q();
    const std::uint32_t size = lambda_size.value_or(q / 2);
    if (size < 1 || size > q) throw GeometryError("lambda_size out of range");
    std::vector<std::uint32_t> lambda(size);
    for (std::uint32_t i = 0; i < size; ++i) lambda[i] = i;
    return build_pencil(std::move(plane), std::move(lambda));
}

PencilStructure build_pencil(std::shared_ptr<const ProjectivePlane> plane, std::vector<std::uint32_t> lambda) {
    const std::uint32_t q = plane->q();
    if (lambda.empty() || lambda.size() > q) throw GeometryError("lambda_size out of range");
    {
        auto sorted = lambda;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= q)
            throw GeometryError("Lambda must be distinct elements of GF(q)");
    }

    PencilStructure ps;
    ps.plane = plane;
    ps.q = q;
    ps.lambda = std::move(lambda);
    ps.p_inf = plane->point_id({0, 1, 0});
    ps.ell_inf = plane->line_id({0, 0, 1});

    const std::size_t np = plane->num_points();
    ps.block_of.assign(np, -1);
    ps.P = Bitset(np);
    for (std::size_t j = 0; j < ps.lambda.size(); ++j) {
        ps.unitals.push_back(unital_points(*plane, UnitalForm{ps.lambda[j]}));
        ps.unitals.back().for_each([&](std::size_t p) {
            if (p == ps.p_inf) return;
            if (ps.block_of[p] != -1) throw StructureViolation("unitals of the pencil overlap outside p_inf");
            ps.block_of[p] = static_cast<std::int32_t>(j);
            ps.P.set(p);
        });
    }

    ps.vertex_of.assign(plane->num_lines(), -1);
    for (std::uint32_t l = 0; l < plane->num_lines(); ++l) {
        bool common = true;
        for (const auto& u : ps.unitals)
            if (classify_line(*plane, l, u) != LineClass::Secant) {
                common = false;
                break;
            }
        if (common) {
            ps.vertex_of[l] = static_cast<std::int32_t>(ps.L.size());
            ps.L.push_back(l);
        }
    }

    const Certificate cert = verify_pencil(ps);
    for (const auto& c : cert.checks)
        if (!c.pass) throw StructureViolation("pencil invariant failed: " + c.name);
    return ps;
}

Certificate verify_pencil(const PencilStructure& ps) {
    Certificate cert;
    const std::uint64_t q = ps.q, q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
    const std::uint64_t m = ps.lambda.size();
    const ProjectivePlane& plane = *ps.plane;

    {
        bool ok = true;
        Json sizes = Json::array();
        for (std::size_t j = 0; j < ps.unitals.size(); ++j) {
            const auto n = ps.unitals[j].count();
            sizes.push_back({{"lambda", ps.lambda[j]}, {"size", n}});
            ok = ok && n == q3 + 1 && ps.unitals[j].test(ps.p_inf);
        }
        auto& rec = cert.add("unital_sizes", "|U_lambda| = q^3+1 and p_inf in U_lambda", ok);
        rec.tallies = {{"expected", q3 + 1}, {"per_lambda", sizes}};
    }
    {
        bool ok = true;
        auto& rec = cert.add("pairwise_intersection", "U_a ∩ U_b = {p_inf} for distinct a, b in Lambda", true);
        for (std::size_t a = 0; a < ps.unitals.size(); ++a)
            for (std::size_t b = a + 1; b < ps.unitals.size(); ++b) {
                Bitset both = ps.unitals[a];
                both &= ps.unitals[b];
                if (both.count() != 1 || !both.test(ps.p_inf)) {
                    ok = false;
                    rec.witnesses.push_back({{"lambda_a", ps.lambda[a]}, {"lambda_b", ps.lambda[b]}, {"common", both.count()}});
                }
            }
        rec.pass = ok;
    }
    {
        const auto np = ps.P.count();
        auto& rec = cert.add("point_set_size", "|P| = |Lambda| q^3", np == m * q3);
        rec.tallies = {{"P", np}, {"expected", m * q3}};
    }
    {
        const std::uint64_t expected = q4 - m * q3 + q2;
        auto& rec = cert.add("common_secant_count", "|L| = q^4 - |Lambda| q^3 + q^2", ps.L.size() == expected);
        rec.tallies = {{"L", ps.L.size()}, {"expected", expected}};
    }
    {
        bool ok = true;
        auto& rec = cert.add("common_secancy", "every line of L meets every U_lambda in q+1 points", true);
        for (auto l : ps.L)
            for (std::size_t j = 0; j < ps.unitals.size(); ++j)
                if (plane.line_bits(l).count_and(ps.unitals[j]) != q + 1) {
                    ok = false;
                    if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"line", l}, {"lambda", ps.lambda[j]}});
                }
        rec.pass = ok;
    }
    if (m == q / 2) {
        const std::uint64_t np = ps.P.count(), nl = ps.L.size();
        const bool p_ok = 2 * np + 2 * q3 >= q4 && 2 * np <= q4;
        const bool l_ok = 2 * nl >= q4 && nl <= q4;
        auto& rec = cert.add("size_windows", "q^4/2 - q^3 <= |P| <= q^4/2 and q^4/2 <= |L| <= q^4", p_ok && l_ok);
        rec.tallies = {{"P", np}, {"L", nl}, {"q4", q4}, {"q3", q3}};
    }
    return cert;
}

Certificate verify_point_partition(const ProjectivePlane& plane) {
    const std::uint32_t q = plane.q();
    const std::uint32_t p_inf = plane.point_id({0, 1, 0});
    const std::uint32_t ell_inf = plane.line_id({0, 0, 1});
    std::vector<Bitset> pencil;
    for (std::uint32_t lam = 0; lam < q; ++lam) pencil.push_back(unital_points(plane, UnitalForm{lam}));

    Certificate cert;
    auto& rec = cert.add("point_partition", "{U_lambda \\ p_inf : lambda in GF(q)} ∪ {ell_inf} partitions the points", true);
    std::size_t covered_once = 0;
    for (std::uint32_t p = 0; p < plane.num_points(); ++p) {
        std::size_t parts = plane.incident(p, ell_inf) ? 1 : 0;
        for (const auto& u : pencil) parts += (p != p_inf && u.test(p)) ? 1 : 0;
        if (parts == 1) {
            ++covered_once;
        } else {
            rec.pass = false;
            if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"point", p}, {"parts", parts}});
        }
    }
    rec.tallies = {{"points", plane.num_points()}, {"covered_exactly_once", covered_once}};
    return cert;
}

Certificate verify_tangency_partition(const ProjectivePlane& plane) {
    const std::uint32_t q = plane.q();
    const std::uint32_t p_inf = plane.point_id({0, 1, 0});
    std::vector<Bitset> pencil;
    for (std::uint32_t lam = 0; lam < q; ++lam) pencil.push_back(unital_points(plane, UnitalForm{lam}));

    Certificate cert;
    auto& rec = cert.add("tangency_partition", "every line off p_inf is tangent to one unital and secant to q-1", true);
    std::map<std::string, std::size_t> histogram;
    std::size_t checked = 0, excluded = 0;
    for (std::uint32_t l = 0; l < plane.num_lines(); ++l) {
        if (plane.incident(p_inf, l)) {
            ++excluded;
            continue;
        }
        ++checked;
        std::size_t t = 0, s = 0;
        for (const auto& u : pencil) (classify_line(plane, l, u) == LineClass::Tangent ? t : s)++;
        ++histogram["(" + std::to_string(t) + "," + std::to_string(s) + ")"];
        if (t != 1 || s != q - 1) {
            rec.pass = false;
            if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"line", l}, {"tangent", t}, {"secant", s}});
        }
    }
    Json hist = Json::object();
    for (const auto& [k, v] : histogram) hist[k] = v;
    rec.tallies = {{"lines_checked", checked}, {"lines_through_p_inf", excluded}, {"tally", hist}};
    return cert;
}

}  // namespace unitals
