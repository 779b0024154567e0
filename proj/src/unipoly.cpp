#include "dtrans/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dtrans {

UniPoly UniPoly::monomial(const FieldElem& c, size_t deg) {
    if (c.is_zero()) return UniPoly();
    std::vector<FieldElem> v(deg + 1, FieldElem(0L));
    v[deg] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_int_coeffs(const std::vector<long>& coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

const FieldElem& UniPoly::lead() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElem(0L));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElem(0L));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem(0L));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const FieldElem& a, const UniPoly& b) {
    if (a.is_zero()) return UniPoly();
    std::vector<FieldElem> c = b.coeffs_;
    for (auto& x : c) x *= a;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<FieldElem> rem = a.coeffs_;
    std::vector<FieldElem> quo(a.coeffs_.size() - b.coeffs_.size() + 1, FieldElem(0L));
    const FieldElem& lb = b.lead();
    for (size_t k = quo.size(); k-- > 0;) {
        FieldElem factor = rem[k + b.coeffs_.size() - 1] / lb;
        quo[k] = factor;
        if (factor.is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= factor * b.coeffs_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

namespace {

bool all_rational(const UniPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// Clear coefficient denominators and divide out the QPoly content. Keeps the
// primitive-PRS intermediates inside Q[sym][x], which is what tames the
// coefficient swell of naive monic Euclid over Q(sym).
UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    QPoly den_lcm{Rat(1)};
    for (const auto& c : p.coeffs()) {
        QPoly g = QPoly::gcd(den_lcm, c.den());
        den_lcm = QPoly::divrem(den_lcm * c.den(), g).first;
    }
    std::vector<QPoly> nums(p.coeffs().size());
    for (size_t i = 0; i < nums.size(); ++i)
        nums[i] = p.coeff(i).num() * QPoly::divrem(den_lcm, p.coeff(i).den()).first;
    QPoly content;
    for (const auto& n : nums) {
        if (n.is_zero()) continue;
        content = content.is_zero() ? n.monic() : QPoly::gcd(content, n);
        if (content.degree() == 0) break;
    }
    std::vector<FieldElem> out(nums.size());
    for (size_t i = 0; i < nums.size(); ++i) {
        if (nums[i].is_zero()) continue;
        out[i] = content.degree() > 0 ? FieldElem(QPoly::divrem(nums[i], content).first)
                                      : FieldElem(nums[i]);
    }
    return UniPoly(std::move(out));
}

UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
    const FieldElem& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        FieldElem la = a.lead();
        a = lb * a - la * (b * UniPoly::monomial(FieldElem(1L), static_cast<size_t>(shift)));
    }
    return a;
}

}  // namespace

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    if (all_rational(a) && all_rational(b)) {
        while (!b.is_zero()) {
            UniPoly r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        UniPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a.monic();
}

UniPoly UniPoly::lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly g = gcd(a, b);
    return exact_div(a * b, g).monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    FieldElem inv = lead().inverse();
    return inv * *this;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<FieldElem> c(coeffs_.size() - 1, FieldElem(0L));
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = FieldElem(static_cast<long>(i)) * coeffs_[i];
    return UniPoly(std::move(c));
}

FieldElem UniPoly::eval(const FieldElem& v) const {
    FieldElem acc(0L);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

UniPoly UniPoly::compose_linear(const FieldElem& a, const FieldElem& b) const {
    UniPoly acc;
    UniPoly lin(std::vector<FieldElem>{b, a});
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + UniPoly(coeffs_[i]);
    return acc;
}

UniPoly UniPoly::map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const {
    std::vector<FieldElem> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly acc(FieldElem(1L)), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string UniPoly::to_string(char var, char coeff_symbol) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElem& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string(coeff_symbol);
        bool neg = cs.size() > 0 && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool unit = (cs == "1");
        bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (i == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (!unit) os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    SquarefreeDecomposition out;
    out.lead = p.lead();
    UniPoly pm = p.monic();
    if (pm.degree() == 0) return out;
    UniPoly dp = pm.derivative();
    UniPoly g = UniPoly::gcd(pm, dp);
    if (g.degree() == 0) {
        out.factors.emplace_back(pm, 1);
        return out;
    }
    UniPoly c = UniPoly::exact_div(pm, g);
    UniPoly d = UniPoly::exact_div(dp, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = UniPoly::gcd(c, d);
        if (a.degree() > 0) out.factors.emplace_back(a, i);
        c = UniPoly::exact_div(c, a);
        d = UniPoly::exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

namespace {

// Gaussian elimination determinant of the Sylvester matrix; FieldElem entries
// stay reduced, which bounds the intermediate symbol degrees by the minors'.
FieldElem sylvester_det(const UniPoly& p, const UniPoly& q) {
    int m = p.degree(), n = q.degree();
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<FieldElem>> a(size, std::vector<FieldElem>(size, FieldElem(0L)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) a[row][static_cast<size_t>(row + j)] = p.coeff(static_cast<size_t>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            a[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = q.coeff(static_cast<size_t>(n - j));
    FieldElem det(1L);
    for (size_t col = 0; col < size; ++col) {
        size_t pivot = col;
        while (pivot < size && a[pivot][col].is_zero()) ++pivot;
        if (pivot == size) return FieldElem(0L);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        FieldElem inv = a[col][col].inverse();
        for (size_t r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            FieldElem factor = a[r][col] * inv;
            for (size_t c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace

FieldElem resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return p.lead().pow(q.degree());
    if (q.degree() == 0) return q.lead().pow(p.degree());
    if (!all_rational(p) || !all_rational(q)) return sylvester_det(p, q);
    UniPoly a = p, b = q;
    FieldElem acc(1L);
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2 != 0) negate = !negate;
        std::swap(a, b);
    }
    while (b.degree() > 0) {
        UniPoly r = UniPoly::divrem(a, b).second;
        if (r.is_zero()) return FieldElem(0L);
        acc *= b.lead().pow(a.degree() - r.degree());
        if ((a.degree() * b.degree()) % 2 != 0) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    acc *= b.lead().pow(a.degree());
    return negate ? -acc : acc;
}

UniPoly rothstein_trager_resultant(const UniPoly& D, const UniPoly& N) {
    if (D.is_zero()) throw ZeroPolynomial();
    UniPoly Dp = D.derivative();
    int formal_deg = std::max(N.degree(), Dp.degree());
    int n = D.degree();
    if (n == 0) return UniPoly(FieldElem(1L));
    if (formal_deg < 0) return UniPoly();  // N = 0 and deg D' < 0 cannot happen for deg D > 0

    // R(z) = det Sylvester(D, N - z D') with B-block of fixed formal degree;
    // a degree drop at a sample point contributes lc(D)^drop.
    std::vector<FieldElem> values;
    std::vector<FieldElem> points;
    for (int k = 0; k <= n; ++k) {
        FieldElem z(static_cast<long>(k));
        UniPoly B = N - z * Dp;
        FieldElem val;
        if (B.is_zero()) {
            val = FieldElem(0L);
        } else {
            val = D.lead().pow(formal_deg - B.degree()) * resultant(D, B);
        }
        points.push_back(z);
        values.push_back(val);
    }
    // Lagrange interpolation in z.
    UniPoly result;
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly basis(FieldElem(1L));
        FieldElem denom(1L);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * UniPoly(std::vector<FieldElem>{-points[j], FieldElem(1L)});
            denom *= points[i] - points[j];
        }
        result = result + (values[i] / denom) * basis;
    }
    return result;
}

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return {};

    // Clear FieldElem denominators, then collect by powers of the field symbol:
    // p = sum_j P_j(x) sym^j. A rational root must kill every P_j, so the
    // candidates are the rational roots of gcd_j P_j over Q.
    QPoly den_lcm{Rat(1)};
    for (const auto& c : p.coeffs()) {
        QPoly g = QPoly::gcd(den_lcm, c.den());
        den_lcm = QPoly::divrem(den_lcm * c.den(), g).first;
    }
    int sym_deg = 0;
    std::vector<QPoly> cleared(p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const FieldElem& c = p.coeff(i);
        cleared[i] = c.num() * QPoly::divrem(den_lcm, c.den()).first;
        sym_deg = std::max(sym_deg, cleared[i].degree());
    }
    // gcd over Q[x] of the sym-power slices
    std::vector<FieldElem> gcd_accum_coeffs;
    UniPoly gcd_slices;
    for (int j = 0; j <= sym_deg; ++j) {
        std::vector<FieldElem> slice(cleared.size(), FieldElem(0L));
        bool nonzero = false;
        for (size_t i = 0; i < cleared.size(); ++i) {
            if (j <= cleared[i].degree() && cleared[i][static_cast<size_t>(j)] != 0) {
                slice[i] = FieldElem(cleared[i][static_cast<size_t>(j)]);
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        UniPoly sp(std::move(slice));
        gcd_slices = gcd_slices.is_zero() ? sp.monic() : UniPoly::gcd(gcd_slices, sp);
        if (gcd_slices.degree() == 0) return {};
    }

    // gcd_slices has plain rational coefficients; clear to integers.
    std::vector<Int> int_coeffs(gcd_slices.coeffs().size());
    Int denial = 1;
    for (const auto& c : gcd_slices.coeffs()) denial = lcm(denial, c.to_rational().get_den());
    for (size_t i = 0; i < gcd_slices.coeffs().size(); ++i) {
        Rat scaled = gcd_slices.coeff(i).to_rational() * Rat(denial);
        int_coeffs[i] = scaled.get_num();
    }
    auto candidates = integer_poly_rational_roots(int_coeffs);

    // Multiplicities are recomputed against p itself over the full field.
    std::vector<std::pair<Rat, int>> out;
    for (auto& [root, mult_in_gcd] : candidates) {
        (void)mult_in_gcd;
        UniPoly lin(std::vector<FieldElem>{FieldElem(-root), FieldElem(1L)});
        UniPoly rem = p;
        int mult = 0;
        while (true) {
            auto [q, r] = UniPoly::divrem(rem, lin);
            if (!r.is_zero()) break;
            rem = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(root, mult);
    }
    return out;
}

std::vector<std::pair<Int, int>> integer_roots(const UniPoly& p) {
    std::vector<std::pair<Int, int>> out;
    for (auto& [r, m] : rational_roots(p))
        if (is_integer(r)) out.emplace_back(r.get_num(), m);
    return out;
}

}  // namespace dtrans
