#include "dtrans/ode.hpp"

#include <map>
#include <random>
#include <sstream>

#include "dtrans/linalg.hpp"

namespace dtrans {

LinDiffOp::LinDiffOp(DerivationTag tag, std::vector<RatFunc> coeffs)
    : tag_(tag), coeffs_(std::move(coeffs)) {
    normalize();
}

RatFunc LinDiffOp::apply(const RatFunc& f) const {
    RatFunc acc;
    RatFunc der = f;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) acc += coeffs_[i] * der;
        if (i + 1 < coeffs_.size())
            der = tag_ == DerivationTag::Euler ? der.euler_derivative() : der.derivative();
    }
    return acc;
}

LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b) {
    std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return LinDiffOp(a.coeffs_.empty() ? b.tag_ : a.tag_, std::move(c));
}

LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b) { return a + (-b); }

LinDiffOp LinDiffOp::operator-() const {
    LinDiffOp r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LinDiffOp operator*(const LinDiffOp& a, const LinDiffOp& b) {
    DerivationTag tag = a.coeffs_.empty() ? b.tag_ : a.tag_;
    auto deriv = [&](const RatFunc& f) {
        return tag == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    std::vector<RatFunc> acc;
    std::vector<RatFunc> shifted = b.coeffs_;  // delta^i . b, starting at i = 0
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i].is_zero()) {
            if (acc.size() < shifted.size()) acc.resize(shifted.size(), RatFunc());
            for (size_t j = 0; j < shifted.size(); ++j) acc[j] += a.coeffs_[i] * shifted[j];
        }
        if (i + 1 < a.coeffs_.size()) {
            std::vector<RatFunc> next(shifted.size() + 1, RatFunc());
            for (size_t j = 0; j < shifted.size(); ++j) {
                next[j] += deriv(shifted[j]);
                next[j + 1] += shifted[j];
            }
            shifted = std::move(next);
        }
    }
    return LinDiffOp(tag, std::move(acc));
}

LinDiffOp LinDiffOp::monic() const {
    if (is_zero()) throw ZeroOperator();
    RatFunc inv = coeffs_.back().inverse();
    std::vector<RatFunc> c = coeffs_;
    for (auto& x : c) x *= inv;
    return LinDiffOp(tag_, std::move(c));
}

LinDiffOp LinDiffOp::to_ddx() const {
    if (tag_ == DerivationTag::Ddx) return *this;
    // (x d/dx)^k = sum_j S(k,j) x^j (d/dx)^j, Stirling numbers of the second kind
    int n = order();
    std::vector<std::vector<Int>> stirling(static_cast<size_t>(n) + 1,
                                           std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    stirling[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            stirling[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                stirling[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)] +
                Int(j) * stirling[static_cast<size_t>(k - 1)][static_cast<size_t>(j)];
    std::vector<RatFunc> out(static_cast<size_t>(n) + 1, RatFunc());
    for (int k = 0; k <= n; ++k) {
        if (coeff(static_cast<size_t>(k)).is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
            const Int& s = stirling[static_cast<size_t>(k)][static_cast<size_t>(j)];
            if (s == 0) continue;
            RatFunc xj(UniPoly::monomial(FieldElem(Rat(s)), static_cast<size_t>(j)));
            out[static_cast<size_t>(j)] += coeff(static_cast<size_t>(k)) * xj;
        }
    }
    return LinDiffOp(DerivationTag::Ddx, std::move(out));
}

std::string LinDiffOp::to_string(char coeff_symbol) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        std::string cs = coeffs_[i].to_string('x', coeff_symbol);
        bool neg = !cs.empty() && cs[0] == '-';
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
        bool atomic = cs.find(' ') == std::string::npos && cs.find('+') == std::string::npos;
        std::string shown = atomic ? cs : "(" + cs + ")";
        if (i == 0) {
            os << shown;
        } else {
            if (cs != "1") os << shown << "*";
            os << "D";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

UniPoly falling_factorial(int i) {
    UniPoly acc(FieldElem(1L));
    for (int k = 0; k < i; ++k)
        acc = acc * UniPoly(std::vector<FieldElem>{FieldElem(static_cast<long>(-k)), FieldElem(1L)});
    return acc;
}

// valuation of p at the squarefree monic u, with the cofactor p / u^v
std::pair<int, UniPoly> valuation(const UniPoly& p, const UniPoly& u) {
    int v = 0;
    UniPoly rest = p;
    while (!rest.is_zero()) {
        auto [q, r] = UniPoly::divrem(rest, u);
        if (!r.is_zero()) break;
        rest = q;
        ++v;
    }
    return {v, rest};
}

// Local pole bound from the indicial polynomial at (a factor of) u; recurses
// on a proper divisor when the indicial data degenerates there.
void indicial_pole_bounds(const std::vector<UniPoly>& polys, const UniPoly& u,
                          std::vector<std::pair<UniPoly, int>>& out) {
    std::vector<int> val(polys.size(), -1);
    std::vector<UniPoly> cof(polys.size());
    int m = INT32_MAX;
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero()) continue;
        auto [v, c] = valuation(polys[i], u);
        val[i] = v;
        cof[i] = c;
        m = std::min(m, v - static_cast<int>(i));
    }
    UniPoly up = u.derivative();
    std::vector<UniPoly> chi;  // lambda-power coefficients, polynomials reduced mod u
    for (size_t i = 0; i < polys.size(); ++i) {
        if (val[i] < 0 || val[i] - static_cast<int>(i) != m) continue;
        UniPoly c = UniPoly::divrem(cof[i] * up.pow(static_cast<long>(i)), u).second;
        UniPoly ff = falling_factorial(static_cast<int>(i));
        if (chi.size() < static_cast<size_t>(ff.degree()) + 1)
            chi.resize(static_cast<size_t>(ff.degree()) + 1);
        for (int j = 0; j <= ff.degree(); ++j)
            chi[static_cast<size_t>(j)] =
                chi[static_cast<size_t>(j)] + ff.coeff(static_cast<size_t>(j)) * c;
    }
    while (!chi.empty() && chi.back().is_zero()) chi.pop_back();
    if (chi.empty()) throw std::logic_error("indicial polynomial vanished identically");

    UniPoly common = u;
    for (const auto& c : chi) {
        common = UniPoly::gcd(common, c);
        if (common.degree() == 0) break;
    }
    if (common.degree() > 0) {
        indicial_pole_bounds(polys, common, out);
        indicial_pole_bounds(polys, UniPoly::exact_div(u, common), out);
        return;
    }

    // R(lambda) = res_x(u, chi(lambda, x)) by sampling; u is monic so no
    // fixed-shape compensation is needed.
    int dmax = static_cast<int>(chi.size()) * u.degree() + 1;
    std::vector<FieldElem> points, values;
    for (int k = 0; k <= dmax; ++k) {
        FieldElem lambda(static_cast<long>(k));
        UniPoly at;
        FieldElem pw(1L);
        for (size_t j = 0; j < chi.size(); ++j) {
            at = at + pw * chi[j];
            pw *= lambda;
        }
        values.push_back(at.is_zero() ? FieldElem(0L) : resultant(u, at));
        points.push_back(lambda);
    }
    UniPoly r;
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly basis(FieldElem(1L));
        FieldElem denom(1L);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * UniPoly(std::vector<FieldElem>{-points[j], FieldElem(1L)});
            denom *= points[i] - points[j];
        }
        r = r + (values[i] / denom) * basis;
    }
    if (r.is_zero()) throw std::logic_error("indicial resultant vanished identically");
    int bound = 0;
    for (auto& [root, mult] : integer_roots(r))
        if (root < 0) {
            Int neg = -root;
            if (!neg.fits_sint_p()) throw std::overflow_error("pole bound too large");
            bound = std::max(bound, static_cast<int>(neg.get_si()));
        }
    out.emplace_back(u, bound);
}

struct ClearedOperator {
    std::vector<UniPoly> polys;  // polynomial coefficients, index = derivative order
    UniPoly rhs_num;             // cleared rhs (zero when no rhs)
};

// multiply op(y) = rhs through by the lcm of all denominators
ClearedOperator clear_denominators(const LinDiffOp& op, const RatFunc& rhs) {
    ClearedOperator out;
    UniPoly common(FieldElem(1L));
    for (const auto& c : op.coeffs()) {
        if (c.is_zero()) continue;
        common = UniPoly::lcm(common, c.den());
    }
    if (!rhs.is_zero()) common = UniPoly::lcm(common, rhs.den());
    out.polys.resize(op.coeffs().size());
    for (size_t i = 0; i < op.coeffs().size(); ++i) {
        RatFunc cleared = op.coeff(i) * RatFunc(common);
        out.polys[i] = cleared.num() * UniPoly(cleared.den().coeff(0).inverse());
    }
    RatFunc r = rhs * RatFunc(common);
    out.rhs_num = r.num() * UniPoly(r.den().coeff(0).inverse());
    return out;
}

// degree bound for polynomial solutions of sum polys[i] z^{(i)} = rhs
int polynomial_degree_bound(const std::vector<UniPoly>& polys, const UniPoly& rhs) {
    int m = INT32_MIN;
    for (size_t i = 0; i < polys.size(); ++i)
        if (!polys[i].is_zero()) m = std::max(m, polys[i].degree() - static_cast<int>(i));
    UniPoly chi;
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero() || polys[i].degree() - static_cast<int>(i) != m) continue;
        chi = chi + polys[i].lead() * falling_factorial(static_cast<int>(i));
    }
    int bound = -1;
    for (auto& [root, mult] : integer_roots(chi))
        if (root >= 0) {
            if (!root.fits_sint_p()) throw std::overflow_error("degree bound too large");
            bound = std::max(bound, static_cast<int>(root.get_si()));
        }
    if (!rhs.is_zero()) bound = std::max(bound, rhs.degree() - m);
    return bound;
}

}  // namespace

ScalarSolutions rational_solutions(const LinDiffOp& op_in, const RatFunc& rhs_in) {
    if (op_in.is_zero()) throw ZeroOperator();
    LinDiffOp op = op_in.to_ddx();
    RatFunc rhs = rhs_in;
    const int n = op.order();

    ClearedOperator cleared = clear_denominators(op, rhs);

    UniPoly factor_source = cleared.polys.back();
    if (!rhs.is_zero()) factor_source = factor_source * rhs.den();
    std::vector<std::pair<UniPoly, int>> bounds;
    if (factor_source.degree() > 0) {
        for (auto& [factor, mult] : squarefree_decompose(factor_source).factors) {
            std::vector<std::pair<UniPoly, int>> local;
            indicial_pole_bounds(cleared.polys, factor, local);
            for (auto& [u, b] : local) {
                int rhs_order = rhs.is_zero() ? 0 : valuation(rhs.den(), u).first;
                bounds.emplace_back(u, std::max(b, rhs_order > 0 ? rhs_order + n : 0));
            }
        }
    }
    UniPoly den(FieldElem(1L));
    for (auto& [u, b] : bounds) den = den * u.pow(b);

    // substitute y = z / den
    LinDiffOp conj;
    {
        std::vector<RatFunc> comp(static_cast<size_t>(n) + 1, RatFunc());
        std::vector<RatFunc> inv_derivs{RatFunc(UniPoly(FieldElem(1L)), den)};
        for (int i = 1; i <= n; ++i) inv_derivs.push_back(inv_derivs.back().derivative());
        std::vector<std::vector<Rat>> binom(static_cast<size_t>(n) + 1,
                                            std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
        for (int i = 0; i <= n; ++i) {
            binom[static_cast<size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                    (j <= i - 1 ? binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : Rat(0));
        }
        for (int i = 0; i <= n; ++i) {
            if (op.coeff(static_cast<size_t>(i)).is_zero()) continue;
            for (int j = 0; j <= i; ++j)
                comp[static_cast<size_t>(j)] +=
                    op.coeff(static_cast<size_t>(i)) *
                    RatFunc(FieldElem(binom[static_cast<size_t>(i)][static_cast<size_t>(j)])) *
                    inv_derivs[static_cast<size_t>(i - j)];
        }
        conj = LinDiffOp(DerivationTag::Ddx, std::move(comp));
    }
    ClearedOperator final_form = clear_denominators(conj, rhs);

    int deg_bound = polynomial_degree_bound(final_form.polys, final_form.rhs_num);

    ScalarSolutions out;
    if (deg_bound < 0) return out;

    int max_row = final_form.rhs_num.degree();
    for (size_t i = 0; i < final_form.polys.size(); ++i)
        if (!final_form.polys[i].is_zero())
            max_row = std::max(max_row, final_form.polys[i].degree() + deg_bound);
    size_t rows = static_cast<size_t>(max_row) + 1;
    size_t cols = static_cast<size_t>(deg_bound) + 1;
    std::vector<std::vector<FieldElem>> mat(rows, std::vector<FieldElem>(cols, FieldElem(0L)));
    for (size_t col = 0; col < cols; ++col) {
        UniPoly image;
        UniPoly der = UniPoly::monomial(FieldElem(1L), col);
        for (size_t i = 0; i < final_form.polys.size(); ++i) {
            if (!final_form.polys[i].is_zero()) image = image + final_form.polys[i] * der;
            der = der.derivative();
        }
        for (size_t r = 0; r < rows; ++r) mat[r][col] = image.coeff(r);
    }
    std::vector<FieldElem> rhsvec(rows, FieldElem(0L));
    for (size_t r = 0; r < rows; ++r) rhsvec[r] = final_form.rhs_num.coeff(r);
    auto sol = solve_linear(mat, rhsvec);

    RatFunc invden = RatFunc(UniPoly(FieldElem(1L)), den);
    for (auto& v : sol.nullspace) {
        RatFunc y = RatFunc(UniPoly(std::vector<FieldElem>(v.begin(), v.end()))) * invden;
        if (y.is_zero()) continue;
        if (!op_in.apply(y).is_zero())
            throw std::logic_error("rational_solutions: unsound basis element");
        out.basis.push_back(y);
    }
    if (!rhs.is_zero() && sol.consistent) {
        RatFunc y =
            RatFunc(UniPoly(std::vector<FieldElem>(sol.particular.begin(), sol.particular.end()))) *
            invden;
        if (!(op_in.apply(y) == rhs)) throw std::logic_error("rational_solutions: unsound particular");
        out.particular = y;
    }
    return out;
}

std::vector<RatFunc> mat_vec(const std::vector<std::vector<RatFunc>>& a,
                             const std::vector<RatFunc>& v) {
    std::vector<RatFunc> out(a.size(), RatFunc());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

std::vector<std::vector<RatFunc>> mat_mul(const std::vector<std::vector<RatFunc>>& a,
                                          const std::vector<std::vector<RatFunc>>& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    std::vector<std::vector<RatFunc>> out(n, std::vector<RatFunc>(m, RatFunc()));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

std::optional<std::vector<std::vector<RatFunc>>> mat_inverse(std::vector<std::vector<RatFunc>> a) {
    size_t n = a.size();
    std::vector<std::vector<RatFunc>> inv(n, std::vector<RatFunc>(n, RatFunc()));
    for (size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1L);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatFunc s = a[col][col].inverse();
        for (size_t c = 0; c < n; ++c) {
            a[col][c] *= s;
            inv[col][c] *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc f = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

namespace {

std::vector<RatFunc> row_times_matrix(const std::vector<RatFunc>& row,
                                      const std::vector<std::vector<RatFunc>>& a) {
    std::vector<RatFunc> out(a[0].size(), RatFunc());
    for (size_t j = 0; j < out.size(); ++j)
        for (size_t i = 0; i < row.size(); ++i) out[j] += row[i] * a[i][j];
    return out;
}

std::optional<CyclicVectorResult> try_cyclic_seed(const LinDiffSystem& sys,
                                                  const std::vector<RatFunc>& seed) {
    const size_t n = sys.dim();
    auto deriv = [&](const RatFunc& f) {
        return sys.derivation == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> current = seed;
    for (size_t k = 0; k < n; ++k) {
        rows.push_back(current);
        std::vector<RatFunc> next = row_times_matrix(current, sys.matrix);
        for (size_t j = 0; j < n; ++j) next[j] += deriv(current[j]);
        current = std::move(next);
    }
    auto minv = mat_inverse(rows);
    if (!minv) return std::nullopt;
    // c_n = a . M  =>  a = c_n . M^{-1}
    std::vector<RatFunc> a = row_times_matrix(current, *minv);
    std::vector<RatFunc> coeffs(n + 1, RatFunc());
    for (size_t i = 0; i < n; ++i) coeffs[i] = -a[i];
    coeffs[n] = RatFunc(1L);
    CyclicVectorResult out;
    out.op = LinDiffOp(sys.derivation, std::move(coeffs));
    out.seed = seed;
    out.change_of_basis = rows;
    return out;
}

}  // namespace

CyclicVectorResult cyclic_vector(const LinDiffSystem& sys) {
    const size_t n = sys.dim();
    if (n == 0) throw std::invalid_argument("empty system");
    for (const auto& row : sys.matrix)
        if (row.size() != n) throw std::invalid_argument("system matrix not square");
    if (sys.inhomogeneity) throw std::invalid_argument("cyclic vector requires a homogeneous system");

    std::vector<std::vector<RatFunc>> seeds;
    std::vector<RatFunc> e1(n, RatFunc());
    e1[0] = RatFunc(1L);
    seeds.push_back(e1);
    std::vector<RatFunc> powers(n, RatFunc());
    for (size_t i = 0; i < n; ++i) powers[i] = RatFunc(UniPoly::monomial(FieldElem(1L), i));
    seeds.push_back(powers);
    std::mt19937 gen(987654321);
    std::uniform_int_distribution<long> cd(-3, 3);
    for (int attempt = 0; attempt < 18; ++attempt) {
        std::vector<RatFunc> v(n, RatFunc());
        for (size_t i = 0; i < n; ++i) {
            std::vector<FieldElem> cs{FieldElem(cd(gen)), FieldElem(cd(gen))};
            v[i] = RatFunc(UniPoly(std::move(cs)));
        }
        seeds.push_back(std::move(v));
    }
    for (const auto& seed : seeds) {
        auto r = try_cyclic_seed(sys, seed);
        if (r) return *r;
    }
    throw CyclicVectorFailure();
}

SystemSolutions system_rational_solutions(const LinDiffSystem& sys) {
    if (sys.inhomogeneity) throw std::invalid_argument("system solver handles homogeneous systems");
    SystemSolutions out;
    const size_t n = sys.dim();
    auto deriv = [&](const RatFunc& f) {
        return sys.derivation == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    if (n == 1) {
        LinDiffOp op(sys.derivation, {-sys.matrix[0][0], RatFunc(1L)});
        for (auto& z : rational_solutions(op).basis) out.basis.push_back({z});
        return out;
    }
    CyclicVectorResult cyc = cyclic_vector(sys);
    auto minv = mat_inverse(cyc.change_of_basis);
    if (!minv) throw CyclicVectorFailure();
    for (auto& z : rational_solutions(cyc.op).basis) {
        std::vector<RatFunc> zvec;
        RatFunc cur = z;
        for (size_t i = 0; i < n; ++i) {
            zvec.push_back(cur);
            cur = deriv(cur);
        }
        std::vector<RatFunc> y = mat_vec(*minv, zvec);
        std::vector<RatFunc> ay = mat_vec(sys.matrix, y);
        for (size_t i = 0; i < n; ++i)
            if (!(deriv(y[i]) == ay[i]))
                throw std::logic_error("system_rational_solutions: unsound element");
        out.basis.push_back(std::move(y));
    }
    return out;
}

LinDiffSystem companion(const LinDiffOp& op) {
    if (op.is_zero()) throw ZeroOperator();
    const int n = op.order();
    if (n == 0) throw UnsupportedOrder("companion of an order-0 operator");
    LinDiffSystem sys;
    sys.derivation = op.derivation();
    sys.matrix.assign(static_cast<size_t>(n), std::vector<RatFunc>(static_cast<size_t>(n), RatFunc()));
    for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) sys.matrix[i][i + 1] = RatFunc(1L);
    RatFunc inv = op.coeff(static_cast<size_t>(n)).inverse();
    for (size_t j = 0; j < static_cast<size_t>(n); ++j)
        sys.matrix[static_cast<size_t>(n) - 1][j] = -op.coeff(j) * inv;
    return sys;
}

LinDiffOp symmetric_power(const LinDiffOp& op, int n) {
    if (op.is_zero()) throw ZeroOperator();
    if (op.order() != 2) throw UnsupportedOrder("symmetric power implemented for order 2");
    if (n < 1) throw std::invalid_argument("symmetric power exponent must be positive");
    if (n == 1) return op;
    auto deriv = [&](const RatFunc& f) {
        return op.derivation() == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    RatFunc inv = op.coeff(2).inverse();
    RatFunc a1 = -op.coeff(1) * inv;
    RatFunc a0 = -op.coeff(0) * inv;
    // basis m_j = y^{n-j} (dy)^j; delta m_j = (n-j) m_{j+1} + j a1 m_j + j a0 m_{j-1}
    const size_t dim = static_cast<size_t>(n) + 1;
    auto step = [&](const std::vector<RatFunc>& v) {
        std::vector<RatFunc> next(dim, RatFunc());
        for (size_t j = 0; j < dim; ++j) next[j] = deriv(v[j]);
        for (size_t j = 0; j < dim; ++j) {
            if (v[j].is_zero()) continue;
            long jj = static_cast<long>(j);
            if (j + 1 < dim) next[j + 1] += RatFunc(static_cast<long>(n) - jj) * v[j];
            next[j] += RatFunc(jj) * a1 * v[j];
            if (j >= 1) next[j - 1] += RatFunc(jj) * a0 * v[j];
        }
        return next;
    };
    std::vector<std::vector<RatFunc>> vs;
    std::vector<RatFunc> v(dim, RatFunc());
    v[0] = RatFunc(1L);
    vs.push_back(v);
    for (int k = 1; k <= n + 2; ++k) {
        v = step(v);
        std::vector<std::vector<RatFunc>> mat(dim, std::vector<RatFunc>(vs.size(), RatFunc()));
        for (size_t col = 0; col < vs.size(); ++col)
            for (size_t r = 0; r < dim; ++r) mat[r][col] = vs[col][r];
        std::vector<RatFunc> rhs(dim, RatFunc());
        for (size_t r = 0; r < dim; ++r) rhs[r] = v[r];
        auto sol = solve_linear(mat, rhs);
        if (sol.consistent) {
            std::vector<RatFunc> coeffs(static_cast<size_t>(k) + 1, RatFunc());
            for (size_t i = 0; i < sol.particular.size(); ++i) coeffs[i] = -sol.particular[i];
            coeffs[static_cast<size_t>(k)] = RatFunc(1L);
            return LinDiffOp(op.derivation(), std::move(coeffs));
        }
        vs.push_back(v);
    }
    throw std::logic_error("symmetric power: no dependence found");
}

std::vector<std::vector<FieldElem>> series_solutions(const LinDiffOp& op_in, const FieldElem& point,
                                                     int order) {
    if (op_in.is_zero()) throw ZeroOperator();
    LinDiffOp op = op_in.to_ddx();
    ClearedOperator cleared = clear_denominators(op, RatFunc());
    std::vector<UniPoly> polys;
    for (auto& p : cleared.polys) polys.push_back(p.compose_linear(FieldElem(1L), point));
    const int n = op.order();
    if (polys.back().coeff(0).is_zero()) throw SingularPoint();
    if (order < n - 1) throw std::invalid_argument("order too small for a basis");

    std::vector<std::vector<FieldElem>> basis;
    for (int which = 0; which < n; ++which) {
        std::vector<FieldElem> a(static_cast<size_t>(order) + 1, FieldElem(0L));
        a[static_cast<size_t>(which)] = FieldElem(1L);
        for (int target = n; target <= order; ++target) {
            int m = target - n;  // matching coefficient of x^m in L(y)
            FieldElem acc(0L);
            for (int i = 0; i <= n; ++i) {
                const UniPoly& p = polys[static_cast<size_t>(i)];
                for (int j = 0; j <= std::min(m, p.degree()); ++j) {
                    int k = m - j + i;
                    if (k == target && i == n && j == 0) continue;
                    if (k > order) continue;
                    Rat ff = 1;
                    for (int t = 0; t < i; ++t) ff *= Rat(k - t);
                    if (ff == 0) continue;
                    acc += p.coeff(static_cast<size_t>(j)) * a[static_cast<size_t>(k)] * FieldElem(ff);
                }
            }
            Rat ff = 1;
            for (int t = 0; t < n; ++t) ff *= Rat(target - t);
            a[static_cast<size_t>(target)] = -acc / (polys.back().coeff(0) * FieldElem(ff));
        }
        basis.push_back(std::move(a));
    }
    return basis;
}

}  // namespace dtrans
