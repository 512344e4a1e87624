#pragma once

// The Lambda-restricted pencil of Hermitian unitals
//   U_lambda : X^{q+1} + Y Z^q + Y^q Z + lambda Z^{q+1} = 0,  lambda in Lambda,
// sharing the tangent line Z = 0 at p_inf = (0,1,0); the point set P (their
// union minus p_inf) and the common secants L.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "unitals/bitset.hpp"
#include "unitals/certificate.hpp"
#include "unitals/geometry.hpp"

namespace unitals {

struct PencilStructure {
    std::shared_ptr<const ProjectivePlane> plane;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> lambda;  // GF(q) codes, in the order given
    std::vector<Bitset> unitals;        // unitals[j] is U_{lambda[j]}
    std::uint32_t p_inf = 0;
    std::uint32_t ell_inf = 0;
    Bitset P;                                // over point ids
    std::vector<std::int32_t> block_of;      // point id -> index j with point in U_{lambda[j]} \ {p_inf}, else -1
    std::vector<std::uint32_t> L;            // common secants, ascending line id
    std::vector<std::int32_t> vertex_of;     // line id -> index in L, else -1

    std::size_t lambda_size() const { return lambda.size(); }
    std::size_t num_vertices() const { return L.size(); }
};

// The pencil parameter of a point off ell_inf: the unique lambda in GF(q)
// with the point on U_lambda. Throws for points on ell_inf.
std::uint32_t pencil_parameter(const ProjectivePlane& plane, std::uint32_t point);

// Lambda = first lambda_size elements of GF(q) (default floor(q/2)).
PencilStructure build_pencil(std::shared_ptr<const ProjectivePlane> plane, std::optional<std::uint32_t> lambda_size = {});

// Explicit, nonempty, duplicate-free Lambda.
PencilStructure build_pencil(std::shared_ptr<const ProjectivePlane> plane, std::vector<std::uint32_t> lambda);

// Structural invariants of a built pencil (sizes, disjointness, common-secant
// count, secancy of every L line, and the size windows when |Lambda| = floor(q/2)).
Certificate verify_pencil(const PencilStructure& pencil);

// Full pencil over GF(q): the sets U_lambda \ {p_inf} together with ell_inf
// partition the points of the plane.
Certificate verify_point_partition(const ProjectivePlane& plane);

// Full pencil over GF(q): every line not through p_inf is tangent to exactly
// one unital and secant to the other q-1.
Certificate verify_tangency_partition(const ProjectivePlane& plane);

}  // namespace unitals
