#include "dtrans/ratfunc.hpp"

namespace dtrans {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = UniPoly(FieldElem(1L));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::exact_div(num_, g);
        den_ = UniPoly::exact_div(den_, g);
    }
    FieldElem inv = den_.lead().inverse();
    if (!inv.is_one()) {
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

FieldElem RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("RatFunc is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc acc(1L), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

FieldElem RatFunc::eval(const FieldElem& v) const {
    FieldElem d = den_.eval(v);
    if (d.is_zero()) throw DivisionByZero();
    return num_.eval(v) / d;
}

RatFunc RatFunc::substitute_linear(const FieldElem& a, const FieldElem& b) const {
    return RatFunc(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

RatFunc RatFunc::map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const {
    return RatFunc(num_.map_coeffs(f), den_.map_coeffs(f));
}

std::pair<UniPoly, RatFunc> RatFunc::split_polynomial_part() const {
    auto [q, r] = UniPoly::divrem(num_, den_);
    return {q, RatFunc(r, den_)};
}

int RatFunc::pole_order_at_zero() const {
    int order = 0;
    UniPoly d = den_;
    UniPoly x = UniPoly::x();
    while (!d.is_zero() && d.coeff(0).is_zero()) {
        d = UniPoly::exact_div(d, x);
        ++order;
    }
    return order;
}

std::string RatFunc::to_string(char var, char coeff_symbol) const {
    std::string n = num_.to_string(var, coeff_symbol);
    if (den_.is_one()) return n;
    std::string d = den_.to_string(var, coeff_symbol);
    auto wrap = [](const std::string& s) {
        bool atomic = s.find(' ') == std::string::npos && s.find('/') == std::string::npos &&
                      s.find('*') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

RatFunc log_derivative(const RatFunc& f) {
    if (f.is_zero()) throw DivisionByZero();
    return f.derivative() / f;
}

RatFunc euler_log_derivative(const RatFunc& f) {
    if (f.is_zero()) throw DivisionByZero();
    return f.euler_derivative() / f;
}

}  // namespace dtrans
