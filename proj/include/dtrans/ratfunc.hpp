#pragma once

#include <string>

#include "dtrans/unipoly.hpp"

namespace dtrans {

/// Reduced fraction of UniPoly with monic denominator. The representation is
/// canonical, so structural equality is value equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(FieldElem(1L)) {}
    RatFunc(const FieldElem& c) : num_(c), den_(FieldElem(1L)) {}
    RatFunc(long n) : num_(FieldElem(n)), den_(FieldElem(1L)) {}
    explicit RatFunc(const UniPoly& p) : num_(p), den_(FieldElem(1L)) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc x() { return RatFunc(UniPoly::x()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    FieldElem constant_value() const;

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    /// d/dx.
    RatFunc derivative() const;
    /// x * d/dx.
    RatFunc euler_derivative() const { return RatFunc(UniPoly::x()) * derivative(); }

    FieldElem eval(const FieldElem& v) const;
    /// f(a*x + b).
    RatFunc substitute_linear(const FieldElem& a, const FieldElem& b) const;
    RatFunc map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const;

    /// f = quotient + remainder/den with deg remainder < deg den.
    std::pair<UniPoly, RatFunc> split_polynomial_part() const;

    /// Order of vanishing of the denominator at x = 0 (0 when f has no pole there).
    int pole_order_at_zero() const;

    std::string to_string(char var, char coeff_symbol) const;

private:
    UniPoly num_, den_;
};

RatFunc log_derivative(const RatFunc& f);        // delta(f)/f for delta = d/dx
RatFunc euler_log_derivative(const RatFunc& f);  // delta(f)/f for delta = x d/dx

}  // namespace dtrans
