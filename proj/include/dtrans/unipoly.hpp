#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dtrans/field.hpp"

namespace dtrans {

/// Dense univariate polynomial in the main variable x over the coefficient
/// field (FieldElem). Also reused for auxiliary variables (the Rothstein-Trager
/// z, recurrence variable t) where noted.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const FieldElem& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UniPoly x() { return UniPoly(std::vector<FieldElem>{FieldElem(0L), FieldElem(1L)}); }
    static UniPoly monomial(const FieldElem& c, size_t deg);
    static UniPoly from_int_coeffs(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const FieldElem& lead() const;
    FieldElem coeff(size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : FieldElem(0L);
    }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const FieldElem& a, const UniPoly& b);
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    /// Division that must be exact; throws std::logic_error on nonzero remainder.
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(UniPoly a, UniPoly b);
    static UniPoly lcm(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    UniPoly derivative() const;
    FieldElem eval(const FieldElem& v) const;
    /// p(a*x + b) by Horner.
    UniPoly compose_linear(const FieldElem& a, const FieldElem& b) const;
    /// Apply a map to every coefficient (used for the sigma twist on t).
    UniPoly map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const;
    UniPoly pow(long e) const;

    std::string to_string(char var, char coeff_symbol) const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<FieldElem> coeffs_;
};

/// Squarefree decomposition (Yun): p = lc * prod factor_i^{mult_i} with monic,
/// pairwise coprime, squarefree factors and strictly increasing multiplicities.
struct SquarefreeDecomposition {
    FieldElem lead;
    std::vector<std::pair<UniPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decompose(const UniPoly& p);

/// Resultant of two nonzero polynomials via the Euclidean remainder sequence.
FieldElem resultant(const UniPoly& p, const UniPoly& q);

/// res_x(D, N - z*D') as a polynomial in z, computed by evaluation and
/// interpolation against the fixed-degree Sylvester shape.
UniPoly rothstein_trager_resultant(const UniPoly& D, const UniPoly& N);

/// Rational roots (values in Q) with multiplicities. For coefficients
/// involving the field symbol, a root must kill the polynomial identically.
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p);

/// Integer roots, derived from rational_roots.
std::vector<std::pair<Int, int>> integer_roots(const UniPoly& p);

}  // namespace dtrans
