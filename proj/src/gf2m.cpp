#include "qomat/gf2m.hpp"

#include <bit>
#include <string>

namespace qomat {

namespace {

// Remainder of x modulo p over GF(2), both as coefficient bitmasks.
std::uint32_t poly_mod(std::uint32_t x, std::uint32_t p) {
    const int dp = static_cast<int>(std::bit_width(p));
    while (static_cast<int>(std::bit_width(x)) >= dp) {
        x ^= p << (static_cast<int>(std::bit_width(x)) - dp);
    }
    return x;
}

}  // namespace

Field::Field(unsigned m, std::uint32_t poly) : m_(m), poly_(poly) {
    if (m_ < 2 || m_ > 16) {
        throw DegreeMismatch("field degree m must be in [2, 16], got " + std::to_string(m_));
    }
    if (static_cast<int>(std::bit_width(poly_)) != static_cast<int>(m_) + 1) {
        throw DegreeMismatch("modulus polynomial must have degree exactly " + std::to_string(m_));
    }
    // Trial division by every polynomial of degree 1 .. m/2. A modulus with
    // zero constant term fails at q = x.
    for (unsigned d = 1; d <= m_ / 2; ++d) {
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
            if (poly_mod(poly_, q) == 0) {
                throw ReduciblePolynomial("modulus polynomial " + std::to_string(poly_) +
                                          " is divisible by " + std::to_string(q));
            }
        }
    }
}

Elem Field::mul(Elem x, Elem y) const {
    assert(contains(x) && contains(y));
    std::uint32_t a = x;
    std::uint32_t b = y;
    std::uint32_t acc = 0;
    while (b != 0) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << m_)) a ^= poly_;
    }
    return static_cast<Elem>(acc);
}

Elem Field::inv(Elem x) const {
    assert(contains(x));
    if (x == 0) throw DivisionByZero("zero has no multiplicative inverse");
    // x^(2^m - 2) by square and multiply.
    std::uint32_t e = order() - 2;
    Elem result = 1;
    Elem base = x;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace qomat
