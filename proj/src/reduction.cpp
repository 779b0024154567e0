#include "dtrans/reduction.hpp"

#include <map>

#include "dtrans/linalg.hpp"

namespace dtrans {

UniPoly poly_antiderivative(const UniPoly& p) {
    if (p.is_zero()) return p;
    std::vector<FieldElem> c(p.coeffs().size() + 1, FieldElem(0L));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        c[i + 1] = p.coeff(i) / FieldElem(static_cast<long>(i + 1));
    return UniPoly(std::move(c));
}

HermiteDecomposition hermite_reduce(const RatFunc& f) {
    HermiteDecomposition out;
    auto [quo, proper] = f.split_polynomial_part();
    out.polynomial_part = quo;
    if (proper.is_zero()) return out;

    const UniPoly& num = proper.num();
    const UniPoly& den = proper.den();
    UniPoly dred = UniPoly::gcd(den, den.derivative());
    if (dred.degree() == 0) {
        out.simple_part = proper;
        return out;
    }
    UniPoly dstar = UniPoly::exact_div(den, dred);
    // num = a' dstar - a E + b dred with E = dstar dred' / dred,
    // deg a < deg dred, deg b < deg dstar  (Horowitz-Ostrogradsky).
    UniPoly e = UniPoly::exact_div(dstar * dred.derivative(), dred);
    size_t na = static_cast<size_t>(dred.degree());
    size_t nb = static_cast<size_t>(dstar.degree());
    size_t rows = static_cast<size_t>(den.degree());
    std::vector<std::vector<FieldElem>> mat(rows, std::vector<FieldElem>(na + nb, FieldElem(0L)));
    auto put_column = [&](size_t col, const UniPoly& p) {
        for (size_t r = 0; r < rows; ++r) mat[r][col] = p.coeff(r);
    };
    for (size_t j = 0; j < na; ++j) {
        UniPoly xj = UniPoly::monomial(FieldElem(1L), j);
        put_column(j, xj.derivative() * dstar - xj * e);
    }
    for (size_t j = 0; j < nb; ++j) put_column(na + j, UniPoly::monomial(FieldElem(1L), j) * dred);
    std::vector<FieldElem> rhs(rows, FieldElem(0L));
    for (size_t r = 0; r < rows; ++r) rhs[r] = num.coeff(r);
    auto sol = solve_linear(mat, rhs);
    if (!sol.consistent) throw std::logic_error("hermite_reduce: inconsistent system");
    std::vector<FieldElem> acoef(sol.particular.begin(), sol.particular.begin() + static_cast<long>(na));
    std::vector<FieldElem> bcoef(sol.particular.begin() + static_cast<long>(na), sol.particular.end());
    out.rational_part = RatFunc(UniPoly(std::move(acoef)), dred);
    out.simple_part = RatFunc(UniPoly(std::move(bcoef)), dstar);
    return out;
}

ResidueData residue_analysis(const RatFunc& f) {
    ResidueData out;
    HermiteDecomposition h = hermite_reduce(f);
    out.all_poles_simple = h.rational_part.is_zero();
    out.has_polynomial_part = !h.polynomial_part.is_zero();
    out.pole_at_zero_order = f.pole_order_at_zero();
    out.pole_at_zero = out.pole_at_zero_order > 0;

    if (h.simple_part.is_zero()) {
        out.rt_resultant = UniPoly(FieldElem(1L));
        out.all_residues_rational = true;
        return out;
    }
    const UniPoly& num = h.simple_part.num();
    const UniPoly& den = h.simple_part.den();
    out.rt_resultant = rothstein_trager_resultant(den, num);
    int total = 0;
    for (auto& [value, mult] : rational_roots(out.rt_resultant)) {
        UniPoly factor = UniPoly::gcd(den, num - FieldElem(value) * den.derivative());
        out.rational_residues.emplace_back(value, factor);
        total += mult;
    }
    out.all_residues_rational = total == out.rt_resultant.degree();
    return out;
}

std::pair<bool, RatFunc> is_derivative(const RatFunc& f) {
    HermiteDecomposition h = hermite_reduce(f);
    if (!h.simple_part.is_zero()) return {false, RatFunc()};
    return {true, h.rational_part + RatFunc(poly_antiderivative(h.polynomial_part))};
}

RatFunc LogDerivCertificate::expand() const {
    switch (shape) {
        case LogDerivShape::Shift:
            return RatFunc(P) + RatFunc(FieldElem(1L) / FieldElem(N)) * log_derivative(f);
        case LogDerivShape::QTranscendental:
            return RatFunc(UniPoly(c), UniPoly::x()) +
                   RatFunc(FieldElem(1L) / FieldElem(N)) * log_derivative(f);
        case LogDerivShape::QAlgebraic:
            return RatFunc(P) + Qpart + RatFunc(FieldElem(1L) / FieldElem(N)) * log_derivative(f);
        case LogDerivShape::Euler:
            return RatFunc(c) + RatFunc(FieldElem(1L) / FieldElem(N)) * euler_log_derivative(f);
    }
    throw std::logic_error("unknown certificate shape");
}

namespace {

struct SimplePoleCombination {
    long N = 1;
    RatFunc f = RatFunc(1L);
};

// h proper with only simple poles; succeeds iff every residue is rational,
// returning N = lcm of residue denominators and f = prod factor^{N r}.
std::optional<SimplePoleCombination> rational_log_combination(const RatFunc& h, long extra_den = 1) {
    SimplePoleCombination out;
    ResidueData rd = residue_analysis(h);
    if (!rd.all_residues_rational) return std::nullopt;
    Int nlcm(extra_den);
    for (auto& [r, factor] : rd.rational_residues) nlcm = lcm(nlcm, r.get_den());
    if (!nlcm.fits_slong_p()) throw std::overflow_error("residue denominator lcm too large");
    out.N = nlcm.get_si();
    for (auto& [r, factor] : rd.rational_residues) {
        Rat scaled = r * Rat(nlcm);
        if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("residue exponent too large");
        out.f *= RatFunc(factor).pow(scaled.get_num().get_si());
    }
    return out;
}

// Integer relation whose companion operator in X = q sigma kills the span of
// the monomials x^n, n in exponents (eigenvalue of q sigma on x^n is q^{n+1}).
std::vector<Int> eigenvalue_relation(const std::vector<long>& exponents, const Rat& q) {
    std::vector<Int> rel{Int(1)};
    std::map<long, bool> seen;
    const Int u = q.get_num(), v = q.get_den();
    for (long n : exponents) {
        if (seen.count(n)) continue;
        seen[n] = true;
        long e = n + 1;
        Int lin0, lin1;  // lin1 X + lin0, root q^e
        if (e >= 0) {
            mpz_pow_ui(lin1.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(lin0.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(e));
        } else {
            mpz_pow_ui(lin1.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(-e));
            mpz_pow_ui(lin0.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-e));
        }
        lin0 = -lin0;
        std::vector<Int> next(rel.size() + 1, Int(0));
        for (size_t i = 0; i < rel.size(); ++i) {
            next[i] += rel[i] * lin0;
            next[i + 1] += rel[i] * lin1;
        }
        rel = std::move(next);
    }
    return rel;
}

std::vector<Int> scale_relation(std::vector<Int> rel, long n) {
    for (auto& c : rel) c *= n;
    return rel;
}

// (sigma - 1)^{d+1} kills polynomials of degree <= d under the shift.
std::vector<Int> shift_poly_relation(int deg) {
    std::vector<Int> rel{Int(1)};
    for (int k = 0; k <= deg; ++k) {
        std::vector<Int> next(rel.size() + 1, Int(0));
        for (size_t i = 0; i < rel.size(); ++i) {
            next[i] -= rel[i];
            next[i + 1] += rel[i];
        }
        rel = std::move(next);
    }
    return rel;
}

// Inverse of u modulo m (coprime); extended Euclid over the coefficient field.
UniPoly inverse_mod(const UniPoly& u, const UniPoly& m) {
    UniPoly r0 = u, r1 = m;
    UniPoly s0(FieldElem(1L)), s1;  // invariant: r_i = s_i * u (mod m)
    while (!r1.is_zero()) {
        auto [q, r2] = UniPoly::divrem(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::logic_error("inverse_mod: arguments not coprime");
    return UniPoly::divrem(r0.coeff(0).inverse() * s0, m).second;
}

}  // namespace

std::optional<LogDerivCertificate> logderivative_decompose(const RatFunc& a,
                                                           const DeltaSigmaContext& ctx) {
    LogDerivCertificate cert;
    auto [poly, proper] = a.split_polynomial_part();
    switch (ctx.ctx_case()) {
        case ContextCase::Shift: {
            cert.shape = LogDerivShape::Shift;
            if (!hermite_reduce(proper).rational_part.is_zero()) return std::nullopt;
            auto comb = rational_log_combination(proper);
            if (!comb) return std::nullopt;
            cert.P = poly;
            cert.N = comb->N;
            cert.f = comb->f;
            cert.relation = poly.is_zero()
                                ? std::vector<Int>{Int(cert.N)}
                                : scale_relation(shift_poly_relation(poly.degree()), cert.N);
            break;
        }
        case ContextCase::QDiffDdx: {
            if (ctx.q_is_transcendental()) {
                cert.shape = LogDerivShape::QTranscendental;
                if (!poly.is_zero()) return std::nullopt;
                if (!hermite_reduce(proper).rational_part.is_zero()) return std::nullopt;
                // the residue at zero may be any constant; it all goes into c
                FieldElem c(0L);
                RatFunc rest = proper;
                if (proper.pole_order_at_zero() == 1) {
                    c = (RatFunc::x() * proper).eval(FieldElem(0L));
                    rest = proper - RatFunc(UniPoly(c), UniPoly::x());
                }
                auto comb = rational_log_combination(rest);
                if (!comb) return std::nullopt;
                cert.c = c;
                cert.N = comb->N;
                cert.f = comb->f;
                cert.relation = c.is_zero() ? std::vector<Int>{Int(cert.N)}
                                            : std::vector<Int>{Int(-cert.N), Int(cert.N)};
            } else {
                cert.shape = LogDerivShape::QAlgebraic;
                const Rat q = *ctx.field().q_value;
                // the whole pole at zero (any order) goes into Qpart
                int k = proper.pole_order_at_zero();
                RatFunc rest = proper;
                std::vector<long> exps;
                if (k > 0) {
                    UniPoly xk = UniPoly::monomial(FieldElem(1L), static_cast<size_t>(k));
                    UniPoly d1 = UniPoly::exact_div(proper.den(), xk);
                    UniPoly A =
                        d1.degree() == 0
                            ? UniPoly::divrem(d1.coeff(0).inverse() * proper.num(), xk).second
                            : UniPoly::divrem(proper.num() * inverse_mod(d1, xk), xk).second;
                    cert.Qpart = RatFunc(A, xk);
                    rest = proper - cert.Qpart;
                    for (int i = 0; i < k; ++i)
                        if (!A.coeff(static_cast<size_t>(i)).is_zero()) exps.push_back(i - k);
                }
                if (!hermite_reduce(rest).rational_part.is_zero()) return std::nullopt;
                auto comb = rational_log_combination(rest);
                if (!comb) return std::nullopt;
                cert.P = poly;
                cert.N = comb->N;
                cert.f = comb->f;
                for (int i = 0; i <= poly.degree(); ++i)
                    if (!poly.coeff(static_cast<size_t>(i)).is_zero()) exps.push_back(i);
                cert.relation = scale_relation(eigenvalue_relation(exps, q), cert.N);
            }
            break;
        }
        default:
            throw UnsupportedContext("logderivative shape requires shift or qdiff-ddx");
    }
    if (!cert.verify(a)) throw std::logic_error("logderivative_decompose: certificate failed re-expansion");
    return cert;
}

std::optional<LogDerivCertificate> euler_logderivative_decompose(const RatFunc& a) {
    LogDerivCertificate cert;
    cert.shape = LogDerivShape::Euler;
    auto [poly, proper] = a.split_polynomial_part();
    if (poly.degree() > 0) return std::nullopt;
    if (proper.pole_order_at_zero() > 0) return std::nullopt;
    if (!hermite_reduce(proper).rational_part.is_zero()) return std::nullopt;

    // Residues of u/x away from zero are residue(u)/alpha, constant on each
    // pole factor; they must be rational. The value of a at zero splits
    // between c and a power of x in f.
    FieldElem w0 = a.eval(FieldElem(0L));
    FieldElem u0 = proper.eval(FieldElem(0L));
    RatFunc w = proper / RatFunc::x() - RatFunc(UniPoly(u0), UniPoly::x());
    long extra_den = 1;
    if (w0.is_rational()) {
        Int d = w0.to_rational().get_den();
        if (!d.fits_slong_p()) throw std::overflow_error("constant denominator too large");
        extra_den = d.get_si();
    }
    auto comb = rational_log_combination(w, extra_den);
    if (!comb) return std::nullopt;
    cert.N = comb->N;
    cert.f = comb->f;
    if (w0.is_rational()) {
        Rat m0 = w0.to_rational() * Rat(cert.N);
        if (!m0.get_num().fits_slong_p()) throw std::overflow_error("x exponent too large");
        cert.f *= RatFunc::x().pow(m0.get_num().get_si());
        cert.c = FieldElem(0L);
    } else {
        cert.c = w0;
    }
    cert.relation = cert.c.is_zero() ? std::vector<Int>{Int(cert.N)}
                                     : std::vector<Int>{Int(-cert.N), Int(cert.N)};
    if (!cert.verify(a))
        throw std::logic_error("euler_logderivative_decompose: certificate failed re-expansion");
    return cert;
}

}  // namespace dtrans
