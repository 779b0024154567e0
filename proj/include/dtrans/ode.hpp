#pragma once

#include <optional>
#include <vector>

#include "dtrans/context.hpp"

namespace dtrans {

struct ZeroOperator : std::domain_error {
    ZeroOperator() : std::domain_error("zero operator") {}
};
struct CyclicVectorFailure : std::logic_error {
    CyclicVectorFailure() : std::logic_error("no cyclic vector found (cannot happen in char 0)") {}
};
struct UnsupportedOrder : std::domain_error {
    explicit UnsupportedOrder(const std::string& w) : std::domain_error(w) {}
};
struct SingularPoint : std::domain_error {
    SingularPoint() : std::domain_error("expansion point is singular") {}
};

/// Scalar linear differential operator sum c_i delta^i over RatFunc.
class LinDiffOp {
public:
    LinDiffOp() = default;
    LinDiffOp(DerivationTag tag, std::vector<RatFunc> coeffs);

    static LinDiffOp delta(DerivationTag tag) {
        return LinDiffOp(tag, {RatFunc(), RatFunc(1L)});
    }
    static LinDiffOp multiplication(DerivationTag tag, const RatFunc& f) {
        return LinDiffOp(tag, {f});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    DerivationTag derivation() const { return tag_; }
    RatFunc coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RatFunc(); }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    RatFunc apply(const RatFunc& f) const;

    friend LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b);
    friend LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b);
    /// Composition in the Ore algebra: delta . f = f delta + delta(f).
    friend LinDiffOp operator*(const LinDiffOp& a, const LinDiffOp& b);
    LinDiffOp operator-() const;
    bool operator==(const LinDiffOp& o) const { return tag_ == o.tag_ && coeffs_ == o.coeffs_; }

    LinDiffOp monic() const;
    /// Rewrite an Euler-derivation operator in terms of d/dx.
    LinDiffOp to_ddx() const;

    std::string to_string(char coeff_symbol) const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    DerivationTag tag_ = DerivationTag::Ddx;
    std::vector<RatFunc> coeffs_;
};

struct LinDiffSystem {
    std::vector<std::vector<RatFunc>> matrix;  // delta(y) = A y
    DerivationTag derivation = DerivationTag::Ddx;
    std::optional<std::vector<RatFunc>> inhomogeneity;

    size_t dim() const { return matrix.size(); }
};

struct ScalarSolutions {
    std::vector<RatFunc> basis;       // of the homogeneous equation
    std::optional<RatFunc> particular;  // when a rhs was given and solvable
};

struct SystemSolutions {
    std::vector<std::vector<RatFunc>> basis;
};

/// Complete space of rational solutions of op(y) = rhs  (rhs zero for the
/// homogeneous problem). Denominator bounds come from integer roots of local
/// indicial polynomials at the squarefree factors of the leading coefficient,
/// the degree bound from the indicial polynomial at infinity.
ScalarSolutions rational_solutions(const LinDiffOp& op, const RatFunc& rhs = RatFunc());

SystemSolutions system_rational_solutions(const LinDiffSystem& sys);

struct CyclicVectorResult {
    LinDiffOp op;
    std::vector<RatFunc> seed;                        // the cyclic row vector c_0
    std::vector<std::vector<RatFunc>> change_of_basis;  // rows c_0..c_{n-1}; y = M^{-1}(z, dz, ...)
};
CyclicVectorResult cyclic_vector(const LinDiffSystem& sys);

LinDiffSystem companion(const LinDiffOp& op);

/// n-th symmetric power of a second order operator (annihilates all n-fold
/// products of its solutions).
LinDiffOp symmetric_power(const LinDiffOp& op, int n);

/// Basis of truncated power series solutions at an ordinary point, exact
/// coefficients, each series given by coefficients 0..order.
std::vector<std::vector<FieldElem>> series_solutions(const LinDiffOp& op, const FieldElem& point,
                                                     int order);

/// Matrix-vector helpers shared with the integrability module.
std::vector<RatFunc> mat_vec(const std::vector<std::vector<RatFunc>>& a,
                             const std::vector<RatFunc>& v);
std::vector<std::vector<RatFunc>> mat_mul(const std::vector<std::vector<RatFunc>>& a,
                                          const std::vector<std::vector<RatFunc>>& b);
std::optional<std::vector<std::vector<RatFunc>>> mat_inverse(std::vector<std::vector<RatFunc>> a);

}  // namespace dtrans
