#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dtrans {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor of a rational as an exact integer.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Rational roots of the integer polynomial sum coeffs[i] x^i, with
/// multiplicity. Divisor enumeration when the end coefficients factor easily,
/// exact Sturm isolation otherwise (never floating point, never stuck on a
/// hard factorization).
std::vector<std::pair<Rat, int>> integer_poly_rational_roots(const std::vector<Int>& coeffs);

std::string rat_to_string(const Rat& r);
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace dtrans
