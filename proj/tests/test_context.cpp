#include <random>

#include "doctest.h"
#include "dtrans/context.hpp"

using namespace dtrans;

namespace {

UniPoly ip(std::initializer_list<long> cs) { return UniPoly::from_int_coeffs(std::vector<long>(cs)); }

std::mt19937 rng(424242);

RatFunc random_ratfunc() {
    std::uniform_int_distribution<int> degd(0, 4);
    std::uniform_int_distribution<long> cd(-9, 9);
    auto poly = [&](bool nonzero) {
        std::vector<FieldElem> cs(static_cast<size_t>(degd(rng)) + 1, FieldElem(0L));
        for (auto& c : cs) c = FieldElem(Rat(cd(rng)));
        UniPoly p{std::move(cs)};
        if (nonzero && p.is_zero()) return UniPoly(FieldElem(1L));
        return p;
    };
    return RatFunc(poly(false), poly(true));
}

RatFunc random_ratfunc_t() {
    std::uniform_int_distribution<int> degd(0, 3);
    std::uniform_int_distribution<long> cd(-5, 5);
    auto coeff = [&]() {
        std::vector<Rat> cs(static_cast<size_t>(degd(rng)) + 1, Rat(0));
        for (auto& c : cs) c = Rat(cd(rng));
        return FieldElem(QPoly(std::move(cs)));
    };
    auto poly = [&](bool nonzero) {
        std::vector<FieldElem> cs(static_cast<size_t>(degd(rng)) + 1, FieldElem(0L));
        for (auto& c : cs) c = coeff();
        UniPoly p{std::move(cs)};
        if (nonzero && p.is_zero()) return UniPoly(FieldElem(1L));
        return p;
    };
    return RatFunc(poly(false), poly(true));
}

}  // namespace

TEST_CASE("sigma_pow worked examples") {
    auto shift = DeltaSigmaContext::shift();
    RatFunc inv_x(ip({1}), ip({0, 1}));
    CHECK(shift.sigma_pow(inv_x, 2) == RatFunc(ip({1}), ip({2, 1})));

    auto qd = DeltaSigmaContext::qdiff_ddx_transcendental();
    RatFunc x = RatFunc::x();
    RatFunc q3x = qd.sigma_pow(x, 3);
    CHECK(q3x == RatFunc(UniPoly::monomial(FieldElem::symbol().pow(3), 1)));

    // 1/(x+t) under the parameter shift becomes 1/(x+t+1)
    auto ps = DeltaSigmaContext::param_shift();
    FieldElem t = FieldElem::symbol();
    RatFunc f(UniPoly(FieldElem(1L)), UniPoly(std::vector<FieldElem>{t, FieldElem(1L)}));
    RatFunc g = ps.sigma_pow(f, 1);
    CHECK(g == RatFunc(UniPoly(FieldElem(1L)),
                       UniPoly(std::vector<FieldElem>{t + FieldElem(1L), FieldElem(1L)})));
}

TEST_CASE("hbar_d worked examples") {
    CHECK(DeltaSigmaContext::shift().hbar_d(0).is_one());
    CHECK(DeltaSigmaContext::shift().hbar_d(5).is_one());
    CHECK(DeltaSigmaContext::qdiff_ddx_transcendental().hbar_d(3) == FieldElem::symbol().pow(3));
    CHECK(DeltaSigmaContext::qdiff_ddx_algebraic(rat(2)).hbar_d(3) == FieldElem(Rat(8)));
    CHECK(DeltaSigmaContext::qdiff_euler_transcendental().hbar_d(4).is_one());
    CHECK(DeltaSigmaContext::param_shift().hbar_d(2).is_one());
}

TEST_CASE("commutation delta(sigma(f)) = hbar sigma(delta(f)) holds exactly") {
    std::vector<DeltaSigmaContext> ctxs = {
        DeltaSigmaContext::shift(),
        DeltaSigmaContext::qdiff_ddx_transcendental(),
        DeltaSigmaContext::qdiff_ddx_algebraic(rat(2)),
        DeltaSigmaContext::qdiff_euler_transcendental(),
    };
    for (auto& ctx : ctxs) {
        for (int iter = 0; iter < 100; ++iter) {
            RatFunc f = random_ratfunc();
            RatFunc lhs = ctx.delta(ctx.sigma(f));
            RatFunc rhs = RatFunc(ctx.hbar()) * ctx.sigma(ctx.delta(f));
            CHECK(lhs == rhs);
        }
    }
    auto ps = DeltaSigmaContext::param_shift();
    for (int iter = 0; iter < 100; ++iter) {
        RatFunc f = random_ratfunc_t();
        CHECK(ps.delta(ps.sigma(f)) == ps.sigma(ps.delta(f)));
    }
}

TEST_CASE("sigma_pow composes additively") {
    std::vector<DeltaSigmaContext> ctxs = {
        DeltaSigmaContext::shift(),
        DeltaSigmaContext::qdiff_ddx_transcendental(),
        DeltaSigmaContext::qdiff_euler_algebraic(rat(3, 2)),
    };
    for (auto& ctx : ctxs) {
        for (int iter = 0; iter < 50; ++iter) {
            RatFunc f = random_ratfunc();
            std::uniform_int_distribution<long> dd(0, 4);
            long a = dd(rng), b = dd(rng);
            CHECK(ctx.sigma_pow(f, a + b) == ctx.sigma_pow(ctx.sigma_pow(f, a), b));
        }
    }
}

TEST_CASE("algebraic q must avoid 0 and rational roots of unity") {
    CHECK_THROWS(DeltaSigmaContext::qdiff_ddx_algebraic(rat(0)));
    CHECK_THROWS(DeltaSigmaContext::qdiff_ddx_algebraic(rat(1)));
    CHECK_THROWS(DeltaSigmaContext::qdiff_ddx_algebraic(rat(-1)));
    CHECK_NOTHROW(DeltaSigmaContext::qdiff_ddx_algebraic(rat(2)));
    CHECK_NOTHROW(DeltaSigmaContext::qdiff_ddx_algebraic(rat(-7, 3)));
}
