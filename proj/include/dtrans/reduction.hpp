#pragma once

#include <optional>

#include "dtrans/context.hpp"

namespace dtrans {

/// f = rational_part' + simple_part + polynomial_part, with simple_part proper
/// over a squarefree denominator. The simple poles of f are exactly the poles
/// of simple_part.
struct HermiteDecomposition {
    RatFunc rational_part;    // g
    RatFunc simple_part;      // h
    UniPoly polynomial_part;  // p
};

HermiteDecomposition hermite_reduce(const RatFunc& f);

/// Residue certificate of the simple part h = N/D: the Rothstein-Trager
/// resultant res_x(D, N - z D') whose roots are the residues at the simple
/// poles, plus the rational ones made explicit with their pole factors.
struct ResidueData {
    UniPoly rt_resultant;  // in the auxiliary variable z
    std::vector<std::pair<Rat, UniPoly>> rational_residues;  // (value, monic pole factor)
    bool all_residues_rational = true;
    bool all_poles_simple = true;
    bool pole_at_zero = false;
    int pole_at_zero_order = 0;
    bool has_polynomial_part = false;
};

ResidueData residue_analysis(const RatFunc& f);

/// true iff f = delta(g) for rational g (delta = d/dx); the witness is g.
std::pair<bool, RatFunc> is_derivative(const RatFunc& f);

enum class LogDerivShape {
    Shift,        // a = P + (1/N) f'/f
    QTranscendental,  // a = c/x + (1/N) f'/f
    QAlgebraic,   // a = P + Q(1/x) + (1/N) f'/f
    Euler,        // a = c + (1/N) x f'/f
};

struct LogDerivCertificate {
    LogDerivShape shape;
    UniPoly P;       // polynomial part (Shift, QAlgebraic)
    RatFunc Qpart;   // the pole-at-zero part, a polynomial in 1/x (QAlgebraic)
    FieldElem c;     // coefficient of 1/x (QTranscendental) or the constant (Euler)
    long N = 1;      // nonzero integer
    RatFunc f;       // nonzero; product of pole factors with integer exponents
    std::vector<Int> relation;  // integer sigma-relation coefficients r_0..r_s

    /// Exact re-expansion of the certified identity.
    RatFunc expand() const;
    bool verify(const RatFunc& a) const { return expand() == a; }
};

/// Decide whether `a` has the log-derivative shape admitted by ctx and return
/// the canonical certificate. ctx must be Shift or QDiffDdx.
std::optional<LogDerivCertificate> logderivative_decompose(const RatFunc& a,
                                                           const DeltaSigmaContext& ctx);

/// The Euler-derivation shape a = c + (1/N) delta(f)/f with delta = x d/dx,
/// canonicalized by absorbing a rational constant term into a power of x.
std::optional<LogDerivCertificate> euler_logderivative_decompose(const RatFunc& a);

/// Antiderivative of a polynomial (exact, characteristic zero).
UniPoly poly_antiderivative(const UniPoly& p);

}  // namespace dtrans
