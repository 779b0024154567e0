#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtrans/ode.hpp"
#include "dtrans/reduction.hpp"

namespace dtrans {

struct EmptyInput : std::invalid_argument {
    EmptyInput() : std::invalid_argument("empty input list") {}
};

enum class Outcome { Dependent, Independent, UnknownUpToBound };

enum class GroupTag { Trivial, GaSigma, Ga };

/// Certificate for an additive dependence: sum_{i,j} lambda[i][j] sigma^j(b_i)
/// = delta(g), lambda constants, not all zero.
struct AdditiveCertificate {
    std::vector<std::vector<FieldElem>> lambda;
    RatFunc witness_g;

    bool verify(const std::vector<RatFunc>& bs, const DeltaSigmaContext& ctx) const;
};

/// Certificate for the Ishizaki-type inhomogeneous test.
struct IshizakiCertificate {
    int case_tag = 0;  // 1: sum lambda_j sigma^j(b/f0) = delta(h) - c h; 2: delta(h) - a h = b
    LogDerivCertificate a_shape;
    RatFunc f0;
    std::vector<FieldElem> lambda;
    RatFunc h;

    bool verify(const RatFunc& a, const RatFunc& b, const DeltaSigmaContext& ctx) const;
};

struct Verdict {
    Outcome outcome = Outcome::UnknownUpToBound;
    long bound = -1;  // the searched order for UnknownUpToBound
    std::optional<AdditiveCertificate> additive;
    std::optional<LogDerivCertificate> multiplicative;
    std::optional<IshizakiCertificate> ishizaki;

    static Verdict dependent() { return {Outcome::Dependent, -1, {}, {}, {}}; }
    static Verdict independent() { return {Outcome::Independent, -1, {}, {}, {}}; }
    static Verdict unknown(long j) { return {Outcome::UnknownUpToBound, j, {}, {}, {}}; }
};

std::string outcome_name(Outcome o);
std::string group_tag_name(GroupTag g);

/// Single-input additive criterion: in the shift case a solution of
/// delta(y) = b is transformally dependent iff b has no simple poles; in the
/// q-dilation case iff b has no nonzero simple poles.
Verdict additive_dependence(const RatFunc& b, const DeltaSigmaContext& ctx);

/// The sigma-Galois group of delta(y) = b as a subgroup of G_a.
GroupTag additive_galois_group(const RatFunc& b, const DeltaSigmaContext& ctx);

/// Bounded search for a relation sum lambda_{i,j} sigma^j(b_i) = delta(g),
/// j <= max_order. Exact for a single input under shift/q-dilation.
Verdict additive_dependence_multi(const std::vector<RatFunc>& bs, const DeltaSigmaContext& ctx,
                                  long max_order);

/// Single-input multiplicative criterion via the log-derivative shape.
Verdict multiplicative_dependence(const RatFunc& a, const DeltaSigmaContext& ctx);

/// Inhomogeneous first-order test for delta(y) = a y + b. Independence is
/// decided through the shape of a; the full dichotomy runs for the Euler
/// q-dilation with transcendental q.
Verdict inhomogeneous_first_order(const RatFunc& a, const RatFunc& b, const DeltaSigmaContext& ctx,
                                  long max_order);

}  // namespace dtrans
