// SPDX-License-Identifier: Apache-2.0
//
// Binary polynomial arithmetic and GF(2^n) = F2[x]/(p(x)), the scalar field
// of the Tillich-Zemor hash platform. A polynomial is stored as a bit vector:
// bit i of the backing integer is the coefficient of x^i.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace cayley {

/// Polynomial over GF(2), coefficients packed as bits (bit i = coeff of x^i).
/// Values are immutable; all operations return fresh polynomials.
class BitPoly {
public:
    BitPoly() : bits_(0) {}
    explicit BitPoly(mpz_class bits);
    explicit BitPoly(unsigned long bits) : bits_(bits) {}

    static BitPoly zero() { return BitPoly{}; }
    static BitPoly one() { return BitPoly{1ul}; }
    /// The class of x itself (coefficient of x^1 set).
    static BitPoly x() { return BitPoly{2ul}; }

    /// Parse a hex coefficient string, bit 0 = constant term. "83" = x^7+x+1.
    static BitPoly from_hex(std::string_view hex);
    std::string hex() const;

    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const;
    bool is_zero() const { return mpz_sgn(bits_.get_mpz_t()) == 0; }
    bool coeff(unsigned long i) const { return mpz_tstbit(bits_.get_mpz_t(), i) != 0; }

    const mpz_class& bits() const { return bits_; }

    friend bool operator==(const BitPoly& a, const BitPoly& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const BitPoly& a, const BitPoly& b) { return a.bits_ != b.bits_; }

private:
    mpz_class bits_;
};

/// Coefficientwise sum (XOR); characteristic 2, so this is also subtraction.
BitPoly poly_add(const BitPoly& a, const BitPoly& b);

/// Carry-less product, no reduction.
BitPoly poly_mul(const BitPoly& a, const BitPoly& b);

/// Quotient and remainder of a by b (b nonzero).
std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly& a, const BitPoly& b);

/// Remainder of a mod b (b nonzero).
BitPoly poly_mod(const BitPoly& a, const BitPoly& b);

/// gcd, normalized (monic is automatic over GF(2)).
BitPoly poly_gcd(BitPoly a, BitPoly b);

/// Rabin irreducibility test: m of degree n >= 1 is irreducible over GF(2)
/// iff x^(2^n) == x (mod m) and gcd(x^(2^(n/q)) - x, m) = 1 for every prime
/// q dividing n.
bool is_irreducible(const BitPoly& m);

/// A validated GF(2^n) description: an irreducible modulus of degree n.
class FieldSpec {
public:
    /// Validates irreducibility; throws std::invalid_argument otherwise.
    static FieldSpec make(BitPoly modulus);

    const BitPoly& modulus() const { return modulus_; }
    unsigned long degree() const { return degree_; }

    /// True when n is prime and 127 <= n <= 170. Callers may warn (not
    /// reject) outside this range.
    bool in_recommended_range() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    FieldSpec(BitPoly modulus, unsigned long degree)
        : modulus_(std::move(modulus)), degree_(degree) {}
    BitPoly modulus_;
    unsigned long degree_;
};

/// Product in GF(2^n): carry-less multiply then reduce mod spec.modulus().
/// Inputs must be canonical (degree < n); throws otherwise.
BitPoly poly_mul_mod(const BitPoly& a, const BitPoly& b, const FieldSpec& spec);

/// Multiplicative inverse via extended Euclid; throws on zero input.
BitPoly poly_inverse(const BitPoly& a, const FieldSpec& spec);

/// The root alpha of the modulus, i.e. the class of x reduced into the field.
BitPoly alpha(const FieldSpec& spec);

/// Default field GF(2^127) with modulus x^127 + x + 1. The modulus is
/// re-validated by is_irreducible on first use; if that ever failed the
/// fallback is the smallest irreducible trinomial x^127 + x^k + 1.
const FieldSpec& default_field();

}  // namespace cayley
