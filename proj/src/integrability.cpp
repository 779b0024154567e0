#include "dtrans/integrability.hpp"

#include <sstream>

#include "dtrans/linalg.hpp"

namespace dtrans {

RatMat sigma_pow_matrix(const RatMat& a, long d, const DeltaSigmaContext& ctx) {
    RatMat out = a;
    for (auto& row : out)
        for (auto& e : row) e = ctx.sigma_pow(e, d);
    return out;
}

bool matrices_equal(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

namespace {

void check_square(const RatMat& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw NonSquare();
    if (a.empty()) throw NonSquare();
}

LinDiffSystem compatibility_system(const RatMat& a, const RatMat& sda, const FieldElem& hbar_d,
                                   DerivationTag tag) {
    const size_t n = a.size();
    LinDiffSystem sys;
    sys.derivation = tag;
    sys.matrix.assign(n * n, std::vector<RatFunc>(n * n, RatFunc()));
    RatFunc h(hbar_d);
    // delta(b_ij) = sum_k hbar_d sda_ik b_kj - sum_l b_il a_lj
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t row = i * n + j;
            for (size_t k = 0; k < n; ++k) sys.matrix[row][k * n + j] += h * sda[i][k];
            for (size_t l = 0; l < n; ++l) sys.matrix[row][i * n + l] -= a[l][j];
        }
    return sys;
}

bool witness_identity_holds(const RatMat& a, const RatMat& b, const RatMat& sda,
                            const FieldElem& hbar_d, DerivationTag tag) {
    auto deriv = [&](const RatFunc& f) {
        return tag == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    RatMat db = b;
    for (auto& row : db)
        for (auto& e : row) e = deriv(e);
    RatMat lhs = db;
    RatMat ba = mat_mul(b, a);
    RatMat rhs = mat_mul(sda, b);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            lhs[i][j] += ba[i][j];
            rhs[i][j] *= RatFunc(hbar_d);
        }
    return matrices_equal(lhs, rhs);
}

// Search the solution space for an invertible combination. det is polynomial
// of total degree <= n in the combination parameters, so the integer grid
// {0..n}^dim is a complete test set.
std::optional<RatMat> invertible_combination(const std::vector<RatMat>& basis, size_t n) {
    if (basis.empty()) return std::nullopt;
    const size_t m = basis.size();
    std::vector<long> t(m, 0);
    const long top = static_cast<long>(n);
    while (true) {
        bool all_zero = true;
        for (long v : t) all_zero &= (v == 0);
        if (!all_zero) {
            RatMat b(n, std::vector<RatFunc>(n, RatFunc()));
            for (size_t k = 0; k < m; ++k) {
                if (t[k] == 0) continue;
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) b[i][j] += RatFunc(t[k]) * basis[k][i][j];
            }
            if (!determinant(b).is_zero()) return b;
        }
        size_t pos = 0;
        while (pos < m && t[pos] == top) t[pos++] = 0;
        if (pos == m) return std::nullopt;
        ++t[pos];
    }
}

std::vector<RatMat> reshape(const SystemSolutions& sols, size_t n) {
    std::vector<RatMat> out;
    for (const auto& v : sols.basis) {
        RatMat b(n, std::vector<RatFunc>(n, RatFunc()));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) b[i][j] = v[i * n + j];
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

LinDiffSystem integrability_system(const RatMat& a, long d, const DeltaSigmaContext& ctx) {
    check_square(a);
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    return compatibility_system(a, sigma_pow_matrix(a, d, ctx), ctx.hbar_d(d), ctx.derivation());
}

IntegrabilityVerdict is_sigma_d_integrable(const RatMat& a, long d, const DeltaSigmaContext& ctx) {
    check_square(a);
    IntegrabilityVerdict out;
    out.d = d;
    if (d == 0) {  // sanity mode: B = I always works
        out.sanity_mode = true;
        out.integrable = true;
        RatMat id(a.size(), std::vector<RatFunc>(a.size(), RatFunc()));
        for (size_t i = 0; i < a.size(); ++i) id[i][i] = RatFunc(1L);
        out.witness = id;
        return out;
    }
    LinDiffSystem sys = integrability_system(a, d, ctx);
    auto sols = system_rational_solutions(sys);
    out.solution_space_dim = sols.basis.size();
    auto basis = reshape(sols, a.size());
    auto b = invertible_combination(basis, a.size());
    if (!b) return out;
    if (!witness_identity_holds(a, *b, sigma_pow_matrix(a, d, ctx), ctx.hbar_d(d), ctx.derivation()))
        throw std::logic_error("integrability witness failed the compatibility identity");
    out.integrable = true;
    out.witness = *b;
    return out;
}

namespace {

// 4-dim first-order system in (b, delta b, d, delta d) for delta^2(y) = r y:
//   delta^2(b) + (sigma^s r - r) b = 2 delta(d)
//   delta^2(d) + (sigma^s r - r) d = 2 sigma^s(r) delta(b) + delta(sigma^s r) b
LinDiffSystem order2_reduced_system(const RatFunc& r, const RatFunc& sr, DerivationTag tag) {
    auto deriv = [&](const RatFunc& f) {
        return tag == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    };
    RatFunc diff = sr - r;
    LinDiffSystem sys;
    sys.derivation = tag;
    sys.matrix = {
        {RatFunc(), RatFunc(1L), RatFunc(), RatFunc()},
        {-diff, RatFunc(), RatFunc(), RatFunc(2L)},
        {RatFunc(), RatFunc(), RatFunc(), RatFunc(1L)},
        {deriv(sr), RatFunc(2L) * sr, -diff, RatFunc()},
    };
    return sys;
}

RatMat assemble_order2_witness(const std::vector<RatFunc>& v, const RatFunc& sr) {
    // B = ((d - delta(b), b), (sigma^s(r) b - delta(d), d)) with v = (b, db, d, dd)
    return {{v[2] - v[1], v[0]}, {sr * v[0] - v[3], v[2]}};
}

}  // namespace

IntegrabilityVerdict order2_integrability(const RatFunc& r, long s, const DeltaSigmaContext& ctx) {
    if (!ctx.hbar_d(1).is_one())
        throw UnsupportedContext("order-2 reduced system assumes delta sigma = sigma delta");
    IntegrabilityVerdict out;
    out.d = s;
    if (s == 0) {
        out.sanity_mode = true;
        out.integrable = true;
        out.witness = RatMat{{RatFunc(1L), RatFunc()}, {RatFunc(), RatFunc(1L)}};
        return out;
    }
    if (s < 0) throw std::invalid_argument("s must be >= 0");
    RatFunc sr = ctx.sigma_pow(r, s);
    LinDiffSystem sys = order2_reduced_system(r, sr, ctx.derivation());
    auto sols = system_rational_solutions(sys);
    out.solution_space_dim = sols.basis.size();

    // companion-matrix route must agree
    LinDiffOp op(ctx.derivation(), {-r, RatFunc(), RatFunc(1L)});
    RatMat a = companion(op).matrix;
    IntegrabilityVerdict other = is_sigma_d_integrable(a, s, ctx);
    if (other.solution_space_dim != out.solution_space_dim)
        throw std::logic_error("order-2 route disagrees with the companion route (dimension)");

    // invertible combination over the reduced basis
    std::vector<RatMat> candidates;
    for (auto& v : sols.basis) candidates.push_back(assemble_order2_witness(v, sr));
    auto b = invertible_combination(candidates, 2);
    if (b.has_value() != other.integrable)
        throw std::logic_error("order-2 route disagrees with the companion route (verdict)");
    if (!b) return out;
    if (!witness_identity_holds(a, *b, sigma_pow_matrix(a, s, ctx), ctx.hbar_d(s), ctx.derivation()))
        throw std::logic_error("order-2 witness failed the compatibility identity");
    out.integrable = true;
    out.witness = *b;
    return out;
}

UniPoly infinity_indicial(const LinDiffOp& op_in) {
    LinDiffOp op = op_in.to_ddx();
    UniPoly common(FieldElem(1L));
    for (const auto& c : op.coeffs())
        if (!c.is_zero()) common = UniPoly::lcm(common, c.den());
    std::vector<UniPoly> polys(op.coeffs().size());
    for (size_t i = 0; i < op.coeffs().size(); ++i) {
        RatFunc cleared = op.coeff(i) * RatFunc(common);
        polys[i] = cleared.num() * UniPoly(cleared.den().coeff(0).inverse());
    }
    int m = INT32_MIN;
    for (size_t i = 0; i < polys.size(); ++i)
        if (!polys[i].is_zero()) m = std::max(m, polys[i].degree() - static_cast<int>(i));
    UniPoly chi;
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero() || polys[i].degree() - static_cast<int>(i) != m) continue;
        UniPoly ff(FieldElem(1L));
        for (size_t k = 0; k < i; ++k)
            ff = ff * UniPoly(std::vector<FieldElem>{FieldElem(-static_cast<long>(k)), FieldElem(1L)});
        chi = chi + polys[i].lead() * ff;
    }
    return chi;
}

namespace {

AiryReport airy_obstruction_impl(const FieldElem& s_elem, bool symbolic, long s_int,
                                 const DeltaSigmaContext& ctx) {
    AiryReport rep;
    rep.symbolic = symbolic;
    rep.s = s_int;

    RatFunc r = RatFunc::x();
    RatFunc sr = RatFunc(UniPoly(std::vector<FieldElem>{s_elem, FieldElem(1L)}));  // x + s
    LinDiffSystem sys = order2_reduced_system(r, sr, DerivationTag::Ddx);

    // mechanical elimination of d via a cyclic vector seeded at the b-coordinate
    CyclicVectorResult cyc = cyclic_vector(sys);
    rep.eliminated = cyc.op;

    // delta^4 - (4x + 2s) delta^2 - 6 delta + s^2
    UniPoly c2(std::vector<FieldElem>{FieldElem(2L) * s_elem, FieldElem(4L)});
    rep.expected = LinDiffOp(DerivationTag::Ddx, {RatFunc(UniPoly(s_elem * s_elem)), RatFunc(-6L),
                                                  -RatFunc(c2), RatFunc(), RatFunc(1L)});
    rep.elimination_matches = rep.eliminated == rep.expected;

    rep.solution_space_dim = rational_solutions(rep.eliminated).basis.size();
    rep.system_dim = system_rational_solutions(sys).basis.size();

    rep.leading_coefficient_constant = rep.eliminated.coeff(4).is_constant();
    UniPoly chi = infinity_indicial(rep.eliminated);
    rep.chi_infinity = chi.to_string('d', ctx.coeff_symbol() ? ctx.coeff_symbol() : 's');
    rep.chi_has_integer_root = false;
    for (auto& [root, mult] : integer_roots(chi))
        if (root >= 0) rep.chi_has_integer_root = true;
    rep.note = symbolic
                   ? "symbolic-s run over Q(s)(x); supplements the integer sweep, a specialization "
                     "of s could in principle gain solutions"
                   : "integer s run";
    return rep;
}

}  // namespace

AiryReport airy_obstruction(long s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    return airy_obstruction_impl(FieldElem(s), false, s, DeltaSigmaContext::shift());
}

AiryReport airy_obstruction_symbolic() {
    return airy_obstruction_impl(FieldElem::symbol(), true, 0,
                                 DeltaSigmaContext::shift_over(BaseField::QofS()));
}

SlnDichotomyReport sln_dichotomy_report(const LinDiffOp& op, long d_max,
                                        const DeltaSigmaContext& ctx, bool sanity_check) {
    if (op.order() != 2) throw UnsupportedOrder("dichotomy sweep implemented for order 2");
    SlnDichotomyReport rep;
    if (sanity_check) {
        auto sols = rational_solutions(op);
        if (!sols.basis.empty()) {
            rep.refused = true;
            rep.refusal_reason =
                "operator has nonzero rational solutions, so its usual Galois group is a proper "
                "subgroup of Sl_2; the Sl_2 assertion is refused";
            return rep;
        }
    }
    RatMat base = companion(op).matrix;
    LinDiffOp sym = symmetric_power(op, 2);
    RatMat sympow = companion(sym).matrix;
    for (long d = 1; d <= d_max; ++d) {
        auto v1 = is_sigma_d_integrable(base, d, ctx);
        rep.base_path.push_back({d, v1.integrable, v1.solution_space_dim});
        auto v2 = is_sigma_d_integrable(sympow, d, ctx);
        rep.sympower_path.push_back({d, v2.integrable, v2.solution_space_dim});
        rep.any_integrable |= v1.integrable || v2.integrable;
    }
    std::ostringstream os;
    if (rep.any_integrable) {
        os << "a rational sigma^d-integrability witness exists for some d <= " << d_max
           << "; the solutions satisfy transformal relations";
    } else {
        os << "no rational sigma^d-integrability for d <= " << d_max
           << "; under the stated hypotheses (usual group almost simple, base field relatively "
              "algebraically closed in the solution field) the solutions are transformally "
              "independent up to this bound";
    }
    os << " [algebraic (non-rational) witnesses are not searched]";
    rep.conclusion = os.str();
    return rep;
}

}  // namespace dtrans
