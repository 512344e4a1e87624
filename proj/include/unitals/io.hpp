#pragma once

// Line-oriented text and JSON formats.
//
//   incidence     one line per projective line (by id): its sorted point ids
//   graph edges   one "u v" line per edge, u < v, lexicographic
//   cliques JSON  {color, vertices, line_ids, point_cliques: [{point, members}]}
//   semisat       "n r" header, then "u v color" per pair u < v, colors 1..r

#include <iosfwd>
#include <vector>

#include "unitals/certificate.hpp"
#include "unitals/coloring.hpp"
#include "unitals/pattern.hpp"
#include "unitals/pencil.hpp"
#include "unitals/semisat.hpp"
#include "unitals/sparsify.hpp"

namespace unitals {

void write_incidence(const ProjectivePlane& plane, std::ostream& out);

Json pencil_to_json(const PencilStructure& pencil, const Certificate& cert);
Json coloring_to_json(const PointColoring& coloring);

void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in, std::size_t num_vertices);

Json pattern_cliques_to_json(const PatternGraph& g, const PencilStructure* pencil);

// Rebuilds a pattern graph from its sidecar; the adjacency is taken from the
// edge list so a subsequent verify_pattern checks the two agree.
PatternGraph read_pattern(std::istream& edges, const Json& cliques);

Json sparse_to_json(const SparseGraph& sparse);

void write_semisat(const SemisatColoring& coloring, std::ostream& out);

}  // namespace unitals
