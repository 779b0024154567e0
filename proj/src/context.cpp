#include "dtrans/context.hpp"

namespace dtrans {

FieldElem DeltaSigmaContext::q_elem() const {
    if (field_.tag != FieldTag::QofQ) throw UnsupportedContext("context has no q");
    if (field_.q_value) return FieldElem(*field_.q_value);
    return FieldElem::symbol();
}

RatFunc DeltaSigmaContext::sigma_pow(const RatFunc& f, long d) const {
    if (d < 0) throw std::invalid_argument("sigma_pow: negative power");
    if (d == 0) return f;
    switch (case_) {
        case ContextCase::Shift:
            return f.substitute_linear(FieldElem(1L), FieldElem(static_cast<long>(d)));
        case ContextCase::QDiffDdx:
        case ContextCase::QDiffEuler:
            return f.substitute_linear(q_elem().pow(d), FieldElem(0L));
        case ContextCase::ParamShift:
            return f.map_coeffs([&](const FieldElem& c) { return c.shift_symbol(Rat(d)); });
    }
    throw UnsupportedContext("unknown context");
}

FieldElem DeltaSigmaContext::hbar() const {
    return case_ == ContextCase::QDiffDdx ? q_elem() : FieldElem(1L);
}

FieldElem DeltaSigmaContext::hbar_d(long d) const {
    if (d < 0) throw std::invalid_argument("hbar_d: negative power");
    return case_ == ContextCase::QDiffDdx ? q_elem().pow(d) : FieldElem(1L);
}

std::string context_name(const DeltaSigmaContext& ctx) {
    switch (ctx.ctx_case()) {
        case ContextCase::Shift: return "shift";
        case ContextCase::QDiffDdx:
            return ctx.field().q_value ? "qdiff-ddx(q=" + rat_to_string(*ctx.field().q_value) + ")"
                                       : "qdiff-ddx(q transcendental)";
        case ContextCase::QDiffEuler:
            return ctx.field().q_value ? "qdiff-euler(q=" + rat_to_string(*ctx.field().q_value) + ")"
                                       : "qdiff-euler(q transcendental)";
        case ContextCase::ParamShift: return "param-shift";
    }
    return "?";
}

}  // namespace dtrans
