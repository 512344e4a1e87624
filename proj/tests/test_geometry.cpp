#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "unitals/geometry.hpp"

using namespace unitals;

namespace {

std::uint32_t dot(const Field& f, Triple a, Triple b) {
    return f.add(f.add(f.mul(a.x, b.x), f.mul(a.y, b.y)), f.mul(a.z, b.z));
}

// X^{q+1} + Y Z^q + Y^q Z + lambda Z^{q+1} by plain powering.
std::uint32_t hermitian(const Field& f, std::uint32_t q, std::uint32_t lambda, Triple t) {
    const std::uint32_t xq1 = f.pow(t.x, q + 1), yzq = f.mul(t.y, f.pow(t.z, q)), yqz = f.mul(f.pow(t.y, q), t.z);
    return f.add(f.add(xq1, yzq), f.add(yqz, f.mul(lambda, f.pow(t.z, q + 1))));
}

}  // namespace

TEST_CASE("point and line counts of PG(2, q^2)") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const ProjectivePlane plane(q);
        const std::size_t Q = std::size_t{q} * q;
        CHECK(plane.num_points() == Q * Q + Q + 1);
        CHECK(plane.num_lines() == Q * Q + Q + 1);
        for (std::uint32_t l = 0; l < plane.num_lines(); ++l) REQUIRE(plane.points_on(l).size() == Q + 1);
        for (std::uint32_t p = 0; p < plane.num_points(); ++p) REQUIRE(plane.lines_through(p).size() == Q + 1);
    }
    CHECK(enumerate_points(ProjectivePlane(2)).size() == 21);
    CHECK(enumerate_points(ProjectivePlane(3)).size() == 91);
    CHECK(enumerate_lines(ProjectivePlane(3)).size() == 91);
}

TEST_CASE("canonical enumeration order and normalization") {
    const ProjectivePlane plane(2);
    const auto pts = enumerate_points(plane);
    CHECK(pts[0].coords == Triple{0, 0, 1});
    CHECK(pts[1].coords == Triple{0, 1, 0});
    CHECK(pts[5].coords == Triple{1, 0, 0});
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Triple t = pts[i].coords;
        CHECK(pts[i].id == i);
        CHECK(plane.normalize(t) == t);
        CHECK(seen.insert({t.x, t.y, t.z}).second);
        if (i) {
            const Triple p = pts[i - 1].coords;
            CHECK(std::tie(p.x, p.y, p.z) < std::tie(t.x, t.y, t.z));
        }
    }
    const Field& f = plane.field();
    gen::cases(50, 1, [&](Rng& rng, std::size_t) {
        const auto p = static_cast<std::uint32_t>(rng.below(plane.num_points()));
        const auto s = static_cast<std::uint32_t>(1 + rng.below(f.order() - 1));
        Triple t = plane.point(p).coords;
        t = {f.mul(t.x, s), f.mul(t.y, s), f.mul(t.z, s)};
        CHECK(plane.point_id(t) == p);
    });
    CHECK_THROWS_AS(plane.normalize({0, 0, 0}), GeometryError);
}

TEST_CASE("incidence agrees with the dot product oracle and meet/join are consistent") {
    const ProjectivePlane plane(3);
    const Field& f = plane.field();
    for (std::uint32_t l = 0; l < plane.num_lines(); ++l)
        for (std::uint32_t p = 0; p < plane.num_points(); ++p)
            REQUIRE(plane.incident(p, l) == (dot(f, plane.point(p).coords, plane.line(l).coeffs) == 0));
    gen::cases(200, 2, [&](Rng& rng, std::size_t) {
        const auto a = static_cast<std::uint32_t>(rng.below(plane.num_lines()));
        auto b = static_cast<std::uint32_t>(rng.below(plane.num_lines()));
        if (a == b) b = (b + 1) % plane.num_lines();
        const std::uint32_t x = plane.meet(a, b);
        CHECK(plane.incident(x, a));
        CHECK(plane.incident(x, b));
        // two points of a determine it back
        const auto& on = plane.points_on(a);
        CHECK(plane.join(on[0], on[1]) == a);
    });
    CHECK_THROWS_AS(plane.meet(3, 3), GeometryError);
}

TEST_CASE("Hermitian unital sizes and line classification") {
    for (std::uint32_t q : {2u, 3u}) {
        const ProjectivePlane plane(q);
        const Field& f = plane.field();
        const std::uint32_t p_inf = plane.point_id({0, 1, 0});
        const std::uint32_t ell_inf = plane.line_id({0, 0, 1});
        for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
            CAPTURE(q);
            CAPTURE(lambda);
            const Bitset u = unital_points(plane, {lambda});
            for (std::uint32_t p = 0; p < plane.num_points(); ++p)
                REQUIRE(u.test(p) == (hermitian(f, q, lambda, plane.point(p).coords) == 0));
            CHECK(u.count() == q * q * q + 1);
            CHECK(u.test(p_inf));
            std::size_t tangents = 0, secants = 0;
            std::vector<int> tangents_at(plane.num_points(), 0);
            for (std::uint32_t l = 0; l < plane.num_lines(); ++l) {
                if (classify_line(plane, l, u) == LineClass::Tangent) {
                    ++tangents;
                    plane.line_bits(l).for_each([&](std::size_t p) {
                        if (u.test(p)) ++tangents_at[p];
                    });
                } else {
                    ++secants;
                }
            }
            CHECK(tangents == q * q * q + 1);
            CHECK(secants == q * q * q * q - q * q * q + q * q);
            u.for_each([&](std::size_t p) { CHECK(tangents_at[p] == 1); });
            CHECK(classify_line(plane, ell_inf, u) == LineClass::Tangent);
        }
    }
    CHECK(unital_points(ProjectivePlane(3), {0}).count() == 28);
    CHECK(unital_points(ProjectivePlane(2), {0}).count() == 9);
}

TEST_CASE("classify_line rejects a non-unital set") {
    const ProjectivePlane plane(2);
    Bitset bogus(plane.num_points());
    bogus.set(plane.points_on(0)[0]);
    bogus.set(plane.points_on(0)[1]);
    CHECK_THROWS_WITH(classify_line(plane, 0, bogus), "not a unital");
}

TEST_CASE("fan concurrence: concurrent triples and an exhaustive q=2 scan") {
    const ProjectivePlane plane(2);
    const Bitset u = unital_points(plane, {0});
    std::vector<std::uint32_t> sec;
    for (std::uint32_t l = 0; l < plane.num_lines(); ++l)
        if (classify_line(plane, l, u) == LineClass::Secant) sec.push_back(l);
    // three secants through one unital point
    const std::uint32_t x = static_cast<std::uint32_t>(u.first());
    std::vector<std::uint32_t> through;
    for (auto l : plane.lines_through(x))
        if (classify_line(plane, l, u) == LineClass::Secant) through.push_back(l);
    REQUIRE(through.size() >= 3);
    CHECK(fan_concurrence_check(plane, {through[0], through[1], through[2]}, u, 3).point == x);

    std::size_t triples = 0;
    for (std::size_t i = 0; i < sec.size(); ++i)
        for (std::size_t j = i + 1; j < sec.size(); ++j) {
            if (!u.test(plane.meet(sec[i], sec[j]))) continue;
            for (std::size_t k = j + 1; k < sec.size(); ++k) {
                if (!u.test(plane.meet(sec[i], sec[k])) || !u.test(plane.meet(sec[j], sec[k]))) continue;
                ++triples;
                const auto w = fan_concurrence_check(plane, {sec[i], sec[j], sec[k]}, u, 3);
                CHECK(u.test(w.point));
                CHECK(w.lines_through >= 2);
            }
        }
    CHECK(triples > 0);
    CHECK_THROWS_AS(fan_concurrence_check(plane, {sec[0], sec[1]}, u, 3), GeometryError);
    // a secant pair meeting off the unital violates the precondition
    for (std::size_t i = 1; i < sec.size(); ++i)
        if (!u.test(plane.meet(sec[0], sec[i]))) {
            const std::uint32_t third = sec[i + 1 < sec.size() ? i + 1 : 1];
            CHECK_THROWS_WITH(fan_concurrence_check(plane, {sec[0], sec[i], third}, u, 3),
                              "not pairwise intersecting in U");
            break;
        }
}

TEST_CASE("affine plane counts and parallel classes") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const AffinePlane ag(q);
        CHECK(ag.num_points() == q * q);
        CHECK(ag.num_lines() == q * q + q);
        CHECK(ag.num_classes() == q + 1);
        for (const auto& cls : ag.classes()) {
            std::vector<int> cover(q * q, 0);
            for (const auto& line : cls) {
                CHECK(line.size() == q);
                for (auto p : line) ++cover[p];
            }
            for (int c : cover) CHECK(c == 1);
        }
        // every pair of points on exactly one line
        for (std::uint32_t a = 0; a < q * q; ++a)
            for (std::uint32_t b = a + 1; b < q * q; ++b) {
                int n = 0;
                for (const auto& cls : ag.classes())
                    for (const auto& line : cls)
                        n += std::binary_search(line.begin(), line.end(), a) && std::binary_search(line.begin(), line.end(), b);
                REQUIRE(n == 1);
                const auto ref = ag.line_through(a, b);
                const auto& line = ag.classes()[ref.parallel_class][ref.index];
                CHECK(std::binary_search(line.begin(), line.end(), a));
                CHECK(ag.line_index(ref.parallel_class, b) == ref.index);
            }
    }
}
