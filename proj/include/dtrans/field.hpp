#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtrans/rational.hpp"

namespace dtrans {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("zero polynomial") {}
};
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Dense polynomial over Q in the coefficient-field symbol (q, t or s).
/// Trailing (highest-degree) zero coefficients are always stripped.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static QPoly symbol() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& lead() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Euclidean division; divisor must be nonzero.
    static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
    /// Monic gcd.
    static QPoly gcd(QPoly a, QPoly b);

    QPoly monic() const;
    Rat eval(const Rat& x) const;
    /// p(sym + delta), used by the t -> t+1 twist.
    QPoly shift(const Rat& delta) const;

    std::string to_string(char symbol) const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

/// Element of the coefficient field: a reduced fraction of QPoly with monic
/// denominator. Plain rationals are degree-zero fractions, so one type covers
/// Q, Q(q), Q(t) and Q(s).
class FieldElem {
public:
    FieldElem() : num_(), den_(Rat(1)) {}
    FieldElem(const Rat& r) : num_(r), den_(Rat(1)) {}
    FieldElem(long n) : num_(Rat(n)), den_(Rat(1)) {}
    FieldElem(QPoly num, QPoly den);
    explicit FieldElem(const QPoly& p) : num_(p), den_(Rat(1)) {}

    static FieldElem symbol() { return FieldElem(QPoly::symbol()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(Rat(1)) && den_ == QPoly(Rat(1)); }
    /// True when the element lies in Q.
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rat to_rational() const;

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }

    FieldElem inverse() const;
    FieldElem pow(long e) const;
    /// Substitute sym -> sym + delta in both numerator and denominator.
    FieldElem shift_symbol(const Rat& delta) const;
    /// Substitute a rational value for the symbol (denominator must not vanish).
    FieldElem eval_symbol(const Rat& v) const;

    std::string to_string(char symbol) const;

private:
    QPoly num_, den_;
};

enum class FieldTag { Q, QofQ, QofT, QofS };

/// Base coefficient field descriptor. QofQ in algebraic mode pins the symbol q
/// to a rational value (excluded values: 0 and the rational roots of unity +-1).
struct BaseField {
    FieldTag tag = FieldTag::Q;
    std::optional<Rat> q_value;  // only meaningful for QofQ

    static BaseField Q() { return {FieldTag::Q, std::nullopt}; }
    static BaseField QofQ_transcendental() { return {FieldTag::QofQ, std::nullopt}; }
    static BaseField QofQ_algebraic(const Rat& v);
    static BaseField QofT() { return {FieldTag::QofT, std::nullopt}; }
    static BaseField QofS() { return {FieldTag::QofS, std::nullopt}; }

    bool has_symbol() const { return tag != FieldTag::Q && !q_value.has_value(); }
    char symbol() const;
};

}  // namespace dtrans
