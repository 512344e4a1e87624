#include <doctest.h>

#include "gen.hpp"
#include "unitals/field.hpp"

using namespace unitals;

namespace {

// Schoolbook (a1 x + a0)(b1 x + b0) mod x^2 + b x + c, independent of the
// library's log tables.
std::uint32_t poly_mul(std::uint32_t q, std::uint32_t mb, std::uint32_t mc, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t a1 = a / q, a0 = a % q, b1 = b / q, b0 = b % q;
    const std::uint64_t x2 = a1 * b1 % q;
    std::uint64_t x1 = (a1 * b0 + a0 * b1) % q;
    std::uint64_t x0 = a0 * b0 % q;
    // x^2 = -b x - c
    x1 = (x1 + x2 * (q - mb)) % q;
    x0 = (x0 + x2 * (q - mc)) % q;
    return static_cast<std::uint32_t>(x1 * q + x0);
}

bool has_root(std::uint32_t q, std::uint32_t b, std::uint32_t c) {
    for (std::uint64_t x = 0; x < q; ++x)
        if ((x * x + b * x + c) % q == 0) return true;
    return false;
}

FieldElement el(const std::shared_ptr<const Field>& f, std::uint32_t c1, std::uint32_t c0) {
    return FieldElement(f, c1 * f->characteristic() + c0);
}

}  // namespace

TEST_CASE("prime field examples") {
    auto f3 = Field::prime(3), f5 = Field::prime(5), f7 = Field::prime(7);
    CHECK((FieldElement(f3, 2) + FieldElement(f3, 2)).code() == 1);
    CHECK((FieldElement(f5, 3) * FieldElement(f5, 4)).code() == 2);
    CHECK(inv(FieldElement(f7, 3)).code() == 5);
    CHECK(inv(FieldElement(f7, 1)).code() == 1);
    std::vector<std::uint32_t> codes;
    for (const auto& e : enumerate(f3)) codes.push_back(e.code());
    CHECK(codes == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("GF(9) examples under x^2 + 1") {
    auto f = Field::extension(3);
    REQUIRE(f->modulus_b() == 0);
    REQUIRE(f->modulus_c() == 1);
    const auto x = el(f, 1, 0);
    CHECK((el(f, 1, 1) + el(f, 2, 2)).code() == 0);
    CHECK((x * x) == el(f, 0, 2));
    CHECK(inv(x) == el(f, 2, 0));
    CHECK(frobenius(x) == el(f, 2, 0));
    CHECK(frobenius(FieldElement(f, 0)).code() == 0);
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) {
            const auto n = norm(el(f, b, a));
            CHECK(n.field()->order() == 3);
            CHECK(n.code() == (a * a + b * b) % 3);
        }
    CHECK(enumerate(f).size() == 9);
}

TEST_CASE("modulus is the smallest monic irreducible quadratic") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 101u}) {
        CAPTURE(q);
        auto f = Field::extension(q);
        const std::uint32_t b = f->modulus_b(), c = f->modulus_c();
        CHECK_FALSE(has_root(q, b, c));
        bool earlier = false;
        for (std::uint32_t bb = 0; bb <= b && !earlier; ++bb)
            for (std::uint32_t cc = 0; cc < q; ++cc) {
                if (bb == b && cc >= c) break;
                if (!has_root(q, bb, cc)) earlier = true;
            }
        CHECK_FALSE(earlier);
    }
    CHECK(Field::extension(2)->modulus_b() == 1);
    CHECK(Field::extension(2)->modulus_c() == 1);
    CHECK(Field::extension(5)->modulus_c() == 2);
}

TEST_CASE("extension multiplication matches schoolbook polynomials, exhaustively") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        auto f = Field::extension(q);
        CAPTURE(q);
        for (std::uint32_t a = 0; a < f->order(); ++a)
            for (std::uint32_t b = 0; b < f->order(); ++b)
                REQUIRE(f->mul(a, b) == poly_mul(q, f->modulus_b(), f->modulus_c(), a, b));
    }
}

TEST_CASE("field axioms hold on random triples") {
    for (std::uint32_t q : {2u, 3u, 7u, 31u, 257u}) {
        for (auto f : {Field::prime(q), Field::extension(q)}) {
            const std::uint32_t n = f->order();
            gen::cases(300, q, [&](Rng& rng, std::size_t) {
                const auto a = static_cast<std::uint32_t>(rng.below(n)), b = static_cast<std::uint32_t>(rng.below(n)),
                           c = static_cast<std::uint32_t>(rng.below(n));
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                CHECK(f->add(a, f->neg(a)) == 0);
                CHECK(f->sub(f->add(a, b), b) == a);
                CHECK(f->mul(a, 1) == a);
                CHECK(f->add(a, 0) == a);
                if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            });
        }
    }
}

TEST_CASE("frobenius equals the q-th power and fixes exactly GF(q)") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 13u}) {
        auto f = Field::extension(q);
        for (std::uint32_t a = 0; a < f->order(); ++a) {
            // repeated multiplication oracle for a^q
            std::uint32_t p = 1;
            for (std::uint32_t i = 0; i < q; ++i) p = f->mul(p, a);
            REQUIRE(f->frobenius(a) == p);
            CHECK((f->frobenius(a) == a) == (a < q));
            CHECK(f->frobenius(f->frobenius(a)) == a);
            CHECK(f->norm(a) < q);
            CHECK(f->norm(a) == f->pow(a, q + 1));
        }
        // norm is onto GF(q)* with fibres of size q+1
        std::vector<int> fibre(q, 0);
        for (std::uint32_t a = 1; a < f->order(); ++a) ++fibre[f->norm(a)];
        CHECK(fibre[0] == 0);
        for (std::uint32_t v = 1; v < q; ++v) CHECK(fibre[v] == static_cast<int>(q + 1));
    }
}

TEST_CASE("large fields use direct arithmetic and agree with small-field identities") {
    auto f = Field::extension(401);  // order 160801 > 2^16: no log tables
    CHECK_FALSE(f->uses_log_tables());
    CHECK(Field::extension(13)->uses_log_tables());
    gen::cases(200, 7, [&](Rng& rng, std::size_t) {
        const auto a = static_cast<std::uint32_t>(1 + rng.below(f->order() - 1));
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, f->order() - 1) == 1);
        CHECK(f->norm(a) < 401);
    });
}

TEST_CASE("errors") {
    auto f3 = Field::prime(3), f5 = Field::prime(5), f9 = Field::extension(3);
    CHECK_THROWS_WITH(add(FieldElement(f3, 1), FieldElement(f5, 1)), "field mismatch");
    CHECK_THROWS_WITH(mul(FieldElement(f3, 1), FieldElement(f9, 1)), "field mismatch");
    CHECK_THROWS_WITH(inv(FieldElement(f9, 0)), "zero has no inverse");
    CHECK_THROWS_AS(frobenius(FieldElement(f3, 1)), FieldError);
    CHECK_THROWS_WITH(Field::prime(4), "q must be prime");
    CHECK_THROWS_WITH(Field::extension(9), "q must be prime");
    CHECK_THROWS_AS(FieldElement(f3, 3), FieldError);
    // separately built fields of the same order interoperate
    CHECK((FieldElement(Field::prime(3), 2) + FieldElement(f3, 2)).code() == 1);
}
