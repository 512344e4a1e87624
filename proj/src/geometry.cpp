#include "unitals/geometry.hpp"

#include <algorithm>
#include <limits>

namespace unitals {

namespace {
constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();
}

ProjectivePlane::ProjectivePlane(std::uint32_t q) : q_(q), field_(Field::extension(q)) {
    const std::uint32_t Q = field_->order();
    // Normalized triples in lexicographic order: (0,0,1), (0,1,*), (1,*,*).
    points_.push_back({0, 0, 1});
    for (std::uint32_t z = 0; z < Q; ++z) points_.push_back({0, 1, z});
    for (std::uint32_t y = 0; y < Q; ++y)
        for (std::uint32_t z = 0; z < Q; ++z) points_.push_back({1, y, z});
    lines_ = points_;

    index_.assign(static_cast<std::size_t>(Q) * Q * Q, kNoId);
    for (std::uint32_t i = 0; i < points_.size(); ++i) index_[pack(points_[i])] = i;

    const Field& f = *field_;
    line_points_.resize(lines_.size());
    point_lines_.resize(points_.size());
    line_bits_.assign(lines_.size(), Bitset(points_.size()));
    for (std::uint32_t l = 0; l < lines_.size(); ++l) {
        const Triple c = lines_[l];
        for (std::uint32_t p = 0; p < points_.size(); ++p) {
            const Triple t = points_[p];
            const std::uint32_t dot = f.add(f.add(f.mul(c.x, t.x), f.mul(c.y, t.y)), f.mul(c.z, t.z));
            if (dot == 0) {
                line_points_[l].push_back(p);
                point_lines_[p].push_back(l);
                line_bits_[l].set(p);
            }
        }
    }
}

Triple ProjectivePlane::normalize(Triple t) const {
    const Field& f = *field_;
    std::uint32_t lead = t.x ? t.x : (t.y ? t.y : t.z);
    if (lead == 0) throw GeometryError("zero triple is not a projective point");
    if (lead == 1) return t;
    const std::uint32_t s = f.inv(lead);
    return {f.mul(t.x, s), f.mul(t.y, s), f.mul(t.z, s)};
}

Triple ProjectivePlane::cross(Triple a, Triple b) const {
    const Field& f = *field_;
    return {f.sub(f.mul(a.y, b.z), f.mul(a.z, b.y)), f.sub(f.mul(a.z, b.x), f.mul(a.x, b.z)),
            f.sub(f.mul(a.x, b.y), f.mul(a.y, b.x))};
}

std::uint32_t ProjectivePlane::meet(std::uint32_t l1, std::uint32_t l2) const {
    if (l1 == l2) throw GeometryError("meet of a line with itself");
    return point_id(cross(lines_[l1], lines_[l2]));
}

std::uint32_t ProjectivePlane::join(std::uint32_t p1, std::uint32_t p2) const {
    if (p1 == p2) throw GeometryError("join of a point with itself");
    return line_id(cross(points_[p1], points_[p2]));
}

std::vector<ProjPoint> enumerate_points(const ProjectivePlane& plane) {
    std::vector<ProjPoint> out;
    out.reserve(plane.num_points());
    for (std::uint32_t i = 0; i < plane.num_points(); ++i) out.push_back(plane.point(i));
    return out;
}

std::vector<ProjLine> enumerate_lines(const ProjectivePlane& plane) {
    std::vector<ProjLine> out;
    out.reserve(plane.num_lines());
    for (std::uint32_t i = 0; i < plane.num_lines(); ++i) out.push_back(plane.line(i));
    return out;
}

std::uint32_t UnitalForm::evaluate(const Field& f, Triple t) const {
    const std::uint32_t q = f.characteristic();
    const std::uint32_t zq = f.frobenius(t.z);
    std::uint32_t v = f.norm(t.x);
    v = f.add(v, f.mul(t.y, zq));
    v = f.add(v, f.mul(f.frobenius(t.y), t.z));
    v = f.add(v, f.mul(lambda % q, f.mul(t.z, zq)));
    return v;
}

Bitset unital_points(const ProjectivePlane& plane, UnitalForm form) {
    if (form.lambda >= plane.q()) throw GeometryError("lambda must lie in GF(q)");
    Bitset out(plane.num_points());
    for (std::uint32_t p = 0; p < plane.num_points(); ++p)
        if (form.evaluate(plane.field(), plane.point(p).coords) == 0) out.set(p);
    return out;
}

LineClass classify_line(const ProjectivePlane& plane, std::uint32_t line, const Bitset& unital) {
    const std::size_t meet = plane.line_bits(line).count_and(unital);
    if (meet == 1) return LineClass::Tangent;
    if (meet == plane.q() + 1) return LineClass::Secant;
    throw GeometryError("not a unital");
}

ConcurrenceWitness fan_concurrence_check(const ProjectivePlane& plane, const std::vector<std::uint32_t>& secants,
                                         const Bitset& unital, std::size_t k) {
    if (k < 3 || secants.size() < k) throw GeometryError("need at least k >= 3 secants");
    for (std::size_t i = 0; i < secants.size(); ++i) {
        if (classify_line(plane, secants[i], unital) != LineClass::Secant) throw GeometryError("input line is not a secant");
        for (std::size_t j = i + 1; j < secants.size(); ++j) {
            if (secants[i] == secants[j]) throw GeometryError("repeated secant");
            if (!unital.test(plane.meet(secants[i], secants[j])))
                throw GeometryError("not pairwise intersecting in U");
        }
    }
    ConcurrenceWitness best{0, 0};
    // Candidate points: pairwise intersections (any point on >= 2 of them is one).
    for (std::size_t i = 0; i < secants.size(); ++i)
        for (std::size_t j = i + 1; j < secants.size(); ++j) {
            const std::uint32_t p = plane.meet(secants[i], secants[j]);
            std::size_t through = 0;
            for (auto l : secants) through += plane.incident(p, l);
            if (through > best.lines_through) best = {p, through};
        }
    if (best.lines_through + 1 < k)
        throw StructureViolation("no unital point on k-1 of the secants");
    return best;
}

AffinePlane::AffinePlane(std::uint32_t q) : q_(q), field_(Field::prime(q)) {
    const Field& f = *field_;
    classes_.assign(q + 1, std::vector<std::vector<std::uint32_t>>(q));
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            const std::uint32_t p = x * q + y;
            for (std::uint32_t m = 0; m < q; ++m) classes_[m][f.sub(y, f.mul(m, x))].push_back(p);
            classes_[q][x].push_back(p);
        }
}

std::uint32_t AffinePlane::line_index(std::uint32_t parallel_class, std::uint32_t p) const {
    const std::uint32_t x = p / q_, y = p % q_;
    if (parallel_class == q_) return x;
    return field_->sub(y, field_->mul(parallel_class, x));
}

AffinePlane::LineRef AffinePlane::line_through(std::uint32_t p1, std::uint32_t p2) const {
    if (p1 == p2) throw GeometryError("line through a single point is not unique");
    const std::uint32_t x1 = p1 / q_, y1 = p1 % q_, x2 = p2 / q_, y2 = p2 % q_;
    if (x1 == x2) return {q_, x1};
    const Field& f = *field_;
    const std::uint32_t m = f.mul(f.sub(y2, y1), f.inv(f.sub(x2, x1)));
    return {m, f.sub(y1, f.mul(m, x1))};
}

}  // namespace unitals
