#pragma once

// PG(2, q^2) with dense point/line ids, Hermitian unitals, and AG(2, q).

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unitals/bitset.hpp"
#include "unitals/field.hpp"

namespace unitals {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Field codes of a homogeneous triple.
struct Triple {
    std::uint32_t x = 0, y = 0, z = 0;
    bool operator==(const Triple&) const = default;
};

struct ProjPoint {
    Triple coords;
    std::uint32_t id;
};

// coeffs (a, b, c) for the line aX + bY + cZ = 0.
struct ProjLine {
    Triple coeffs;
    std::uint32_t id;
};

class ProjectivePlane {
public:
    // PG(2, q^2) for prime q.
    explicit ProjectivePlane(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }

    std::size_t num_points() const { return points_.size(); }
    std::size_t num_lines() const { return lines_.size(); }

    ProjPoint point(std::uint32_t id) const { return {points_[id], id}; }
    ProjLine line(std::uint32_t id) const { return {lines_[id], id}; }

    // Scales so the first nonzero coordinate is 1; throws on (0,0,0).
    Triple normalize(Triple t) const;

    // Id of the normalized triple, after normalizing.
    std::uint32_t point_id(Triple t) const { return index_[pack(normalize(t))]; }
    std::uint32_t line_id(Triple t) const { return index_[pack(normalize(t))]; }

    const std::vector<std::uint32_t>& points_on(std::uint32_t line) const { return line_points_[line]; }
    const std::vector<std::uint32_t>& lines_through(std::uint32_t point) const { return point_lines_[point]; }
    const Bitset& line_bits(std::uint32_t line) const { return line_bits_[line]; }

    bool incident(std::uint32_t point, std::uint32_t line) const { return line_bits_[line].test(point); }

    // Intersection of two distinct lines / line through two distinct points.
    std::uint32_t meet(std::uint32_t l1, std::uint32_t l2) const;
    std::uint32_t join(std::uint32_t p1, std::uint32_t p2) const;

private:
    std::size_t pack(Triple t) const {
        const std::size_t Q = field_->order();
        return (static_cast<std::size_t>(t.x) * Q + t.y) * Q + t.z;
    }
    Triple cross(Triple a, Triple b) const;

    std::uint32_t q_;
    std::shared_ptr<const Field> field_;
    std::vector<Triple> points_;  // lines share the same normalized triples
    std::vector<Triple> lines_;
    std::vector<std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> line_points_;
    std::vector<std::vector<std::uint32_t>> point_lines_;
    std::vector<Bitset> line_bits_;
};

std::vector<ProjPoint> enumerate_points(const ProjectivePlane& plane);
std::vector<ProjLine> enumerate_lines(const ProjectivePlane& plane);

// X^{q+1} + Y Z^q + Y^q Z + lambda Z^{q+1}, lambda in GF(q).
struct UnitalForm {
    std::uint32_t lambda = 0;

    std::uint32_t evaluate(const Field& f, Triple t) const;
};

// The zero set of the form as a bitset over point ids.
Bitset unital_points(const ProjectivePlane& plane, UnitalForm form);

enum class LineClass { Tangent, Secant };

// Throws GeometryError("not a unital") if |line ∩ unital| is not 1 or q+1.
LineClass classify_line(const ProjectivePlane& plane, std::uint32_t line, const Bitset& unital);

struct ConcurrenceWitness {
    std::uint32_t point;
    std::size_t lines_through;  // how many of the secants pass through point
};

class StructureViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Given k >= 3 secants to a unital whose pairwise intersections lie on the
// unital, returns a unital point on at least k-1 of them. Precondition
// failures throw GeometryError; a missing witness throws StructureViolation.
ConcurrenceWitness fan_concurrence_check(const ProjectivePlane& plane, const std::vector<std::uint32_t>& secants,
                                         const Bitset& unital, std::size_t k);

// AG(2, q). Point (x, y) has id x*q + y. Parallel class m < q holds the lines
// y = m x + b (line b of the class); class q holds the verticals x = a.
class AffinePlane {
public:
    explicit AffinePlane(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    std::size_t num_points() const { return static_cast<std::size_t>(q_) * q_; }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t num_lines() const { return num_classes() * q_; }

    // classes()[c][j] is the sorted point list of line j in class c.
    const std::vector<std::vector<std::vector<std::uint32_t>>>& classes() const { return classes_; }

    struct LineRef {
        std::uint32_t parallel_class;
        std::uint32_t index;
    };
    LineRef line_through(std::uint32_t p1, std::uint32_t p2) const;
    // Line of class c containing point p.
    std::uint32_t line_index(std::uint32_t parallel_class, std::uint32_t p) const;

private:
    std::uint32_t q_;
    std::shared_ptr<const Field> field_;
    std::vector<std::vector<std::vector<std::uint32_t>>> classes_;
};

}  // namespace unitals
