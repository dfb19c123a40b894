#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "qomat/gf2m.hpp"

using namespace qomat;

namespace {

// Independent table-free oracle: full carry-less product followed by long
// division, sharing nothing with Field::mul's interleaved reduction.
std::uint32_t oracle_mul(unsigned m, std::uint32_t poly, std::uint32_t x, std::uint32_t y) {
    std::uint32_t prod = 0;
    for (unsigned i = 0; i < 16; ++i) {
        if ((y >> i) & 1u) prod ^= x << i;
    }
    const int dp = static_cast<int>(std::bit_width(poly));
    while (static_cast<int>(std::bit_width(prod)) >= dp) {
        prod ^= poly << (static_cast<int>(std::bit_width(prod)) - dp);
    }
    (void)m;
    return prod;
}

std::vector<Field> all_fields_of_degree(unsigned m) {
    std::vector<Field> fields;
    for (std::uint32_t poly = 1u << m; poly < (2u << m); ++poly) {
        try {
            fields.push_back(Field(m, poly));
        } catch (const ReduciblePolynomial&) {
        }
    }
    return fields;
}

}  // namespace

TEST_CASE("make_field validates the modulus") {
    const Field f16 = make_field(4, 0b11001);
    CHECK(f16.degree() == 4);
    CHECK(f16.modulus() == 25);

    const Field f4 = make_field(2, 0b111);
    CHECK(f4.order() == 4);

    CHECK_THROWS_AS(make_field(2, 0b101), ReduciblePolynomial);  // x^2 + 1 = (x+1)^2
    CHECK_THROWS_AS(make_field(3, 0b111), DegreeMismatch);       // top bit is 2, not 3
    CHECK_THROWS_AS(make_field(4, 0b110001), DegreeMismatch);
    CHECK_THROWS_AS(make_field(1, 0b11), DegreeMismatch);
    CHECK_THROWS_AS(make_field(17, 1u << 17 | 1), DegreeMismatch);
    CHECK_THROWS_AS(make_field(4, 0b11000), ReduciblePolynomial);  // zero constant term
}

TEST_CASE("addition is carry-free XOR") {
    const Field f(4, 0b11001);
    CHECK(f.add(7, 13) == 10);
    for (Elem x = 0; x < 16; ++x) {
        CHECK(f.add(x, x) == 0);
        CHECK(f.add(x, 0) == x);
    }
}

TEST_CASE("multiplication matches the worked F16 values") {
    const Field f(4, 0b11001);
    CHECK(f.mul(7, 13) == 8);
    for (Elem x = 0; x < 16; ++x) {
        CHECK(f.mul(x, 1) == x);
        CHECK(f.mul(x, 0) == 0);
    }
    CHECK(f.square(10) == 11);
    CHECK(f.square(0) == 0);
    CHECK(f.square(1) == 1);
}

TEST_CASE("inverse agrees with exhaustive search") {
    const Field f4(2, 0b111);
    CHECK(f4.inv(2) == 3);
    CHECK(f4.inv(1) == 1);

    const Field f16(4, 0b11001);
    CHECK(f16.mul(11, f16.inv(11)) == 1);
    CHECK_THROWS_AS(f16.inv(0), DivisionByZero);

    for (unsigned m = 2; m <= 8; ++m) {
        for (const Field& f : all_fields_of_degree(m)) {
            for (Elem x = 1; x < f.order(); ++x) {
                Elem found = 0;
                for (Elem y = 1; y < f.order(); ++y) {
                    if (oracle_mul(m, f.modulus(), x, y) == 1) {
                        found = y;
                        break;
                    }
                }
                REQUIRE(f.inv(x) == found);
            }
        }
    }
}

TEST_CASE("mul agrees with the schoolbook oracle on every pair, m <= 8") {
    for (unsigned m = 2; m <= 8; ++m) {
        for (const Field& f : all_fields_of_degree(m)) {
            for (Elem x = 0; x < f.order(); ++x) {
                for (Elem y = 0; y < f.order(); ++y) {
                    REQUIRE(f.mul(x, y) == oracle_mul(m, f.modulus(), x, y));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for every field with m <= 8") {
    for (unsigned m = 2; m <= 8; ++m) {
        for (const Field& f : all_fields_of_degree(m)) {
            const std::uint32_t q = f.order();
            // Memoized multiplication keeps the triple loops affordable; the
            // table itself is produced by the implementation under test.
            std::vector<Elem> t(static_cast<std::size_t>(q) * q);
            for (std::uint32_t x = 0; x < q; ++x)
                for (std::uint32_t y = 0; y < q; ++y)
                    t[x * q + y] = f.mul(static_cast<Elem>(x), static_cast<Elem>(y));

            for (std::uint32_t x = 0; x < q; ++x) {
                for (std::uint32_t y = 0; y < q; ++y) {
                    REQUIRE(t[x * q + y] == t[y * q + x]);  // commutativity
                }
            }
            bool assoc = true;
            bool distrib = true;
            for (std::uint32_t x = 0; x < q && assoc && distrib; ++x) {
                for (std::uint32_t y = 0; y < q && assoc && distrib; ++y) {
                    const Elem xy = t[x * q + y];
                    for (std::uint32_t z = 0; z < q; ++z) {
                        if (t[xy * q + z] != t[x * q + t[y * q + z]]) {
                            assoc = false;
                            break;
                        }
                        if (t[x * q + (y ^ z)] != (t[x * q + y] ^ t[x * q + z])) {
                            distrib = false;
                            break;
                        }
                    }
                }
            }
            REQUIRE(assoc);
            REQUIRE(distrib);
            for (std::uint32_t x = 1; x < q; ++x) {
                REQUIRE(f.mul(static_cast<Elem>(x), f.inv(static_cast<Elem>(x))) == 1);
            }
        }
    }
}

TEST_CASE("squaring is the additive Frobenius map") {
    for (unsigned m = 2; m <= 8; ++m) {
        for (const Field& f : all_fields_of_degree(m)) {
            // square(x) equals the F2-linear extension of square on the basis
            // bits, which is exactly additivity on all pairs.
            std::vector<Elem> basis(m);
            for (unsigned i = 0; i < m; ++i) basis[i] = f.square(static_cast<Elem>(1u << i));
            for (std::uint32_t x = 0; x < f.order(); ++x) {
                Elem lin = 0;
                for (unsigned i = 0; i < m; ++i)
                    if ((x >> i) & 1u) lin = static_cast<Elem>(lin ^ basis[i]);
                REQUIRE(f.square(static_cast<Elem>(x)) == lin);
            }
        }
    }
    // Direct spot check of the pairwise statement in F16.
    const Field f16(4, 0b11001);
    for (Elem x = 0; x < 16; ++x)
        for (Elem y = 0; y < 16; ++y)
            CHECK(f16.square(f16.add(x, y)) == f16.add(f16.square(x), f16.square(y)));
}

TEST_CASE("accepted moduli count equals the number of irreducibles") {
    const int expected[] = {0, 0, 1, 2, 3, 6, 9, 18, 30};
    for (unsigned m = 2; m <= 8; ++m) {
        CHECK(static_cast<int>(all_fields_of_degree(m).size()) == expected[m]);
    }
}
