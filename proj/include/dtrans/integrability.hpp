#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtrans/ode.hpp"

namespace dtrans {

struct NonSquare : std::invalid_argument {
    NonSquare() : std::invalid_argument("matrix is not square") {}
};

using RatMat = std::vector<std::vector<RatFunc>>;

/// Outcome of one sigma^d-integrability test: a witness B in Gl_n(K) with
/// delta(B) + B A = hbar_d sigma^d(A) B, or the certified absence of a
/// rational one for this d.
struct IntegrabilityVerdict {
    bool integrable = false;
    long d = 0;
    std::optional<RatMat> witness;     // invertible, identity re-checked on emission
    size_t solution_space_dim = 0;     // rational solution space of the compatibility system
    bool sanity_mode = false;          // d = 0 run
};

/// The first-order system in the n^2 entries of B equivalent to
/// delta(B) = hbar_d sigma^d(A) B - B A.
LinDiffSystem integrability_system(const RatMat& a, long d, const DeltaSigmaContext& ctx);

IntegrabilityVerdict is_sigma_d_integrable(const RatMat& a, long d, const DeltaSigmaContext& ctx);

/// Order-2 route: the 4-dimensional system in (b, delta b, d, delta d)
/// obtained by eliminating the other two entries of B for delta^2(y) = r y;
/// cross-checked against the companion-matrix route on every call.
IntegrabilityVerdict order2_integrability(const RatFunc& r, long s, const DeltaSigmaContext& ctx);

/// The Airy obstruction run: mechanical elimination to the order-4 scalar
/// operator, its rational solution space, and the degree/denominator trace.
struct AiryReport {
    bool symbolic = false;
    long s = 0;
    LinDiffOp eliminated;          // monic, from the cyclic-vector elimination
    LinDiffOp expected;            // delta^4 - (4x+2s) delta^2 - 6 delta + s^2
    bool elimination_matches = false;
    size_t solution_space_dim = 0;  // must be 0
    size_t system_dim = 0;          // 4-dim route, must agree
    bool leading_coefficient_constant = false;  // forces polynomial candidates
    std::string chi_infinity;                   // indicial polynomial at infinity
    bool chi_has_integer_root = true;           // false closes the argument
    std::string note;
};
AiryReport airy_obstruction(long s);
AiryReport airy_obstruction_symbolic();

/// Sl_2 dichotomy sweep: base and symmetric-square paths for d = 1..d_max.
struct DichotomyEntry {
    long d;
    bool integrable;
    size_t dim;
};
struct SlnDichotomyReport {
    bool sl2_asserted = true;     // supplied by the caller, never computed
    bool refused = false;         // sanity check contradicted the assertion
    std::string refusal_reason;
    std::vector<DichotomyEntry> base_path;
    std::vector<DichotomyEntry> sympower_path;
    bool any_integrable = false;
    bool algebraic_witnesses_not_searched = true;
    std::string conclusion;
};
SlnDichotomyReport sln_dichotomy_report(const LinDiffOp& op, long d_max,
                                        const DeltaSigmaContext& ctx, bool sanity_check);

/// chi at infinity of the cleared operator (integer roots bound polynomial
/// solution degrees); exposed for report traces.
UniPoly infinity_indicial(const LinDiffOp& op);

RatMat sigma_pow_matrix(const RatMat& a, long d, const DeltaSigmaContext& ctx);
bool matrices_equal(const RatMat& a, const RatMat& b);

}  // namespace dtrans
