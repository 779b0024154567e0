#include "dtrans/field.hpp"

#include <sstream>

namespace dtrans {

const Rat& QPoly::lead() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rat(0));
    const Rat& lb = b.lead();
    for (size_t k = quo.size(); k-- > 0;) {
        Rat factor = rem[k + b.coeffs_.size() - 1] / lb;
        quo[k] = factor;
        if (factor == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= factor * b.coeffs_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r = *this;
    const Rat lead = r.coeffs_.back();
    for (auto& c : r.coeffs_) c /= lead;
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

QPoly QPoly::shift(const Rat& delta) const {
    // Horner in (sym + delta)
    QPoly acc;
    QPoly lin(std::vector<Rat>{delta, Rat(1)});
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + QPoly(coeffs_[i]);
    return acc;
}

std::string QPoly::to_string(char symbol) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || ac != 1) {
            os << rat_to_string(ac);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << symbol;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FieldElem::FieldElem(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::divrem(num_, g).first;
        den_ = QPoly::divrem(den_, g).first;
    }
    Rat lead = den_.lead();
    if (lead != 1) {
        std::vector<Rat> n = num_.coeffs(), d = den_.coeffs();
        for (auto& c : n) c /= lead;
        for (auto& c : d) c /= lead;
        num_ = QPoly(std::move(n));
        den_ = QPoly(std::move(d));
    }
}

Rat FieldElem::to_rational() const {
    if (!is_rational()) throw std::domain_error("FieldElem is not a rational number");
    if (num_.is_zero()) return Rat(0);
    return num_[0] / den_[0];
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw DivisionByZero();
    return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
}
FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc(Rat(1)), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

FieldElem FieldElem::shift_symbol(const Rat& delta) const {
    return FieldElem(num_.shift(delta), den_.shift(delta));
}

FieldElem FieldElem::eval_symbol(const Rat& v) const {
    Rat d = den_.eval(v);
    if (d == 0) throw DivisionByZero();
    return FieldElem(num_.eval(v) / d);
}

std::string FieldElem::to_string(char symbol) const {
    if (den_ == QPoly(Rat(1))) {
        if (num_.degree() <= 0) return num_.is_zero() ? "0" : rat_to_string(num_[0]);
        return num_.to_string(symbol);
    }
    std::string n = num_.degree() > 0 ? "(" + num_.to_string(symbol) + ")" : num_.to_string(symbol);
    std::string d = den_.degree() > 0 ? "(" + den_.to_string(symbol) + ")" : den_.to_string(symbol);
    return n + "/" + d;
}

BaseField BaseField::QofQ_algebraic(const Rat& v) {
    if (v == 0 || v == 1 || v == -1)
        throw std::invalid_argument("algebraic q must avoid 0 and roots of unity (over Q: 0, 1, -1)");
    return {FieldTag::QofQ, v};
}

char BaseField::symbol() const {
    switch (tag) {
        case FieldTag::QofQ: return 'q';
        case FieldTag::QofT: return 't';
        case FieldTag::QofS: return 's';
        case FieldTag::Q: break;
    }
    return '\0';
}

}  // namespace dtrans
