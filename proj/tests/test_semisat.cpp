#include <doctest.h>

#include "gen.hpp"
#include "unitals/field.hpp"
#include "unitals/semisat.hpp"

using namespace unitals;

TEST_CASE("prime selection") {
    CHECK(smallest_prime_between(4, 8) == 5u);
    CHECK(smallest_prime_between(7, 8) == std::nullopt);
    CHECK(smallest_prime_between(13, 26) == 17u);
    const auto sc = build_semisat(3, 2);
    CHECK(sc.q == 5);
    CHECK(sc.n() == 25);
}

TEST_CASE("structure checks pass across parameters") {
    for (std::uint32_t k = 3; k <= 5; ++k)
        for (std::uint32_t r = 2; r <= 5; ++r) {
            CAPTURE(k);
            CAPTURE(r);
            const auto sc = build_semisat(k, r);
            CHECK(sc.q > (k - 1) * r);
            CHECK(sc.q < 2 * (k - 1) * r);
            CHECK(sc.n() <= std::size_t{4} * (k - 1) * (k - 1) * r * r);
            const Certificate cert = verify_semisat_structure(sc);
            CHECK(cert.pass());
        }
}

TEST_CASE("color classes follow the collapsed parallel classes") {
    const auto sc = build_semisat(3, 2);
    CHECK(sc.classes_of_color(0) == std::vector<std::uint32_t>{0});
    CHECK(sc.classes_of_color(1) == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
    // edge color is the class of the spanning line, collapsed
    for (std::uint32_t u = 0; u < 25; ++u)
        for (std::uint32_t v = 0; v < 25; ++v) {
            if (u == v) continue;
            const auto ref = sc.plane.line_through(u, v);
            REQUIRE(sc.color(u, v) == std::min<std::uint32_t>(ref.parallel_class, 1));
        }
    // class 0 is y = 0*x + b: same y coordinate
    CHECK(sc.color(0 * 5 + 2, 3 * 5 + 2) == 0);
    // vertical x = a: class q
    CHECK(sc.plane.line_through(2 * 5 + 1, 2 * 5 + 4).parallel_class == 5);
}

TEST_CASE("tampering is caught") {
    auto sc = build_semisat(3, 2);
    sc.edge_color[1 * 25 + 2] = 1 - sc.edge_color[1 * 25 + 2];
    const Certificate cert = verify_semisat_structure(sc);
    CHECK_FALSE(cert.find("total_coloring")->pass);
    CHECK_FALSE(cert.find("line_clique_decomposition")->pass);
}

TEST_CASE("every extension yields a monochromatic K_{k+1} witness") {
    for (auto [k, r] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}, {4u, 4u}}) {
        const auto sc = build_semisat(k, r);
        const auto run = verify_extension_property(sc, 500, 3, 2);
        CHECK(run.certificate.pass());
        CHECK(run.witnesses.size() == 503);
    }
    // random extensions checked independently: the witness vertices plus the
    // new vertex form K_{k+1} in one color
    const auto sc = build_semisat(3, 2);
    gen::cases(300, 1, [&](Rng& rng, std::size_t) {
        std::vector<std::uint8_t> ext(sc.n());
        for (auto& c : ext) c = static_cast<std::uint8_t>(rng.below(2));
        const auto w = find_extension_witness(sc, ext);
        REQUIRE(w.has_value());
        CHECK(w->vertices.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(ext[w->vertices[i]] == w->color);
            for (std::size_t j = i + 1; j < 3; ++j) CHECK(sc.color(w->vertices[i], w->vertices[j]) == w->color);
        }
    });
}

TEST_CASE("adversarial extensions and a witness-free counterexample below the range") {
    const auto sc = build_semisat(3, 2);
    for (const auto& ext : adversarial_extensions(sc)) CHECK(find_extension_witness(sc, ext).has_value());
    // q = 3 is outside ((k-1)r, 2(k-1)r) for k=3, r=2: the pigeonhole fails and
    // an extension coloring each line with at most 2 vertices per color exists
    const auto small = build_semisat(3, 2, 3u);
    CHECK_FALSE(verify_semisat_structure(small).find("pigeonhole_margin")->pass);
    std::size_t witnessless = 0;
    gen::cases(2000, 2, [&](Rng& rng, std::size_t) {
        std::vector<std::uint8_t> ext(9);
        for (auto& c : ext) c = static_cast<std::uint8_t>(rng.below(2));
        witnessless += !find_extension_witness(small, ext).has_value();
    });
    CHECK(witnessless > 0);
}

TEST_CASE("upper bound in K_k indexing") {
    const auto b = semisat_upper_bound(4, 3);
    CHECK(b.bound == 144);
    CHECK(b.q == 7);
    CHECK(b.n == 49);
    for (std::uint32_t k = 3; k <= 10; ++k)
        for (std::uint32_t r = 2; r <= 10; ++r) {
            const auto s = semisat_upper_bound(k, r);
            CHECK(is_prime(s.q));
            CHECK(s.n < s.bound);
        }
    CHECK_THROWS_AS(semisat_upper_bound(2, 2), std::invalid_argument);
    CHECK_THROWS_WITH(build_semisat(2, 2), doctest::Contains("degenerate input"));
    CHECK_THROWS_AS(build_semisat(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_semisat(3, 2, 4u), std::invalid_argument);
}
