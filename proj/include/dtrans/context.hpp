#pragma once

#include "dtrans/ratfunc.hpp"

namespace dtrans {

enum class ContextCase {
    Shift,       // delta = d/dx, sigma: x -> x+1, hbar = 1
    QDiffDdx,    // delta = d/dx, sigma: x -> q x, hbar = q
    QDiffEuler,  // delta = x d/dx, sigma: x -> q x, hbar = 1
    ParamShift,  // delta = d/dx (delta(t)=0), sigma: t -> t+1, x fixed, hbar = 1
};

enum class DerivationTag { Ddx, Euler };

struct UnsupportedContext : std::domain_error {
    explicit UnsupportedContext(const std::string& what) : std::domain_error(what) {}
};

/// One of the concrete delta-sigma structures, with the commutation factor
/// hbar. Immutable; freely shareable.
class DeltaSigmaContext {
public:
    static DeltaSigmaContext shift() { return {ContextCase::Shift, BaseField::Q()}; }
    static DeltaSigmaContext qdiff_ddx_transcendental() {
        return {ContextCase::QDiffDdx, BaseField::QofQ_transcendental()};
    }
    static DeltaSigmaContext qdiff_ddx_algebraic(const Rat& q) {
        return {ContextCase::QDiffDdx, BaseField::QofQ_algebraic(q)};
    }
    static DeltaSigmaContext qdiff_euler_transcendental() {
        return {ContextCase::QDiffEuler, BaseField::QofQ_transcendental()};
    }
    static DeltaSigmaContext qdiff_euler_algebraic(const Rat& q) {
        return {ContextCase::QDiffEuler, BaseField::QofQ_algebraic(q)};
    }
    static DeltaSigmaContext param_shift() { return {ContextCase::ParamShift, BaseField::QofT()}; }
    /// Shift structure whose rational functions carry an extra symbol
    /// (used by the symbolic-s Airy run over Q(s)(x)).
    static DeltaSigmaContext shift_over(const BaseField& field) { return {ContextCase::Shift, field}; }

    ContextCase ctx_case() const { return case_; }
    const BaseField& field() const { return field_; }
    DerivationTag derivation() const {
        return case_ == ContextCase::QDiffEuler ? DerivationTag::Euler : DerivationTag::Ddx;
    }
    bool q_is_transcendental() const { return field_.tag == FieldTag::QofQ && !field_.q_value; }

    /// The multiplier q as a field element (symbol or pinned rational value).
    FieldElem q_elem() const;

    RatFunc delta(const RatFunc& f) const {
        return derivation() == DerivationTag::Euler ? f.euler_derivative() : f.derivative();
    }

    RatFunc sigma(const RatFunc& f) const { return sigma_pow(f, 1); }
    RatFunc sigma_pow(const RatFunc& f, long d) const;

    FieldElem hbar() const;
    /// hbar_d = hbar sigma(hbar) ... sigma^{d-1}(hbar); equals q^d for QDiffDdx
    /// and 1 otherwise.
    FieldElem hbar_d(long d) const;

    char var_symbol() const { return 'x'; }
    char coeff_symbol() const { return field_.has_symbol() ? field_.symbol() : '\0'; }

private:
    DeltaSigmaContext(ContextCase c, BaseField f) : case_(c), field_(std::move(f)) {}
    ContextCase case_;
    BaseField field_;
};

std::string context_name(const DeltaSigmaContext& ctx);

}  // namespace dtrans
