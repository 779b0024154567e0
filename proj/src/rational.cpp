#include "dtrans/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dtrans {

namespace {

using ZPoly = std::vector<Int>;  // dense, trailing (highest) zeros stripped

void zstrip(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat zeval(const ZPoly& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
    return acc;
}

int zsign_at(const ZPoly& p, const Rat& x) {
    Rat v = zeval(p, x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g == 0 ? Int(1) : g;
}

// divide by the (positive) content; never flips signs
void zprimitive_positive(ZPoly& p) {
    Int g = zcontent(p);
    if (g != 1)
        for (auto& c : p) c /= g;
}

void zprimitive(ZPoly& p) {
    zprimitive_positive(p);
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

// pseudo-remainder, scaled by a positive power of lc(b) so signs track the
// true remainder up to positive factors
ZPoly zprem_positive(ZPoly a, const ZPoly& b) {
    const Int& lb = b.back();
    Int lb2 = lb * lb;
    int steps = 0;
    while (!a.empty() && a.size() >= b.size()) {
        Int la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb2;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * lb * b[j];
        zstrip(a);
        if (++steps > 4) zprimitive_positive(a);  // keep the growth linear
    }
    return a;
}

ZPoly zderivative(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p[i]);
    return d;
}

// exact division by (x - r), r rational; returns empty when not a root
bool zdeflate(ZPoly& p, const Rat& r) {
    if (zeval(p, r) != 0) return false;
    std::vector<Rat> q(p.size() - 1);
    Rat carry = Rat(p.back());
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = Rat(p[i]) + carry * r;
    }
    Int den = 1;
    for (auto& x : q) den = lcm(den, x.get_den());
    ZPoly out(q.size());
    for (size_t i = 0; i < q.size(); ++i) out[i] = Rat(q[i] * Rat(den)).get_num();
    zprimitive(out);
    p = std::move(out);
    return true;
}

struct SturmChain {
    std::vector<ZPoly> chain;

    explicit SturmChain(ZPoly p) {
        zprimitive(p);
        chain.push_back(p);
        ZPoly d = zderivative(p);
        zprimitive(d);
        while (!d.empty()) {
            chain.push_back(d);
            ZPoly r = zprem_positive(chain[chain.size() - 2], d);
            zprimitive(r);
            for (auto& c : r) c = -c;
            d = std::move(r);
        }
    }

    int variations(const Rat& x) const {
        int count = 0, last = 0;
        for (const auto& p : chain) {
            int s = zsign_at(p, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }
};

// simplest rational (minimal denominator) in the closed interval [lo, hi]
Rat simplest_rational(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::logic_error("empty interval");
    Int c = rat_floor(lo);
    if (Rat(c) == lo) return lo;
    if (Rat(c + 1) <= hi) {
        if (lo <= 0 && 0 <= hi) return Rat(0);
        return Rat(c + 1);
    }
    // both endpoints have the same floor c; recurse on the fractional parts
    Rat flo = hi - Rat(c), fhi = lo - Rat(c);
    Rat inner = simplest_rational(1 / flo, 1 / fhi);
    return Rat(c) + 1 / inner;
}

// exact root isolation; appends every rational root of the squarefree ps
void isolate_rational_roots(const ZPoly& ps, std::vector<Rat>& out) {
    SturmChain sturm(ps);
    // Cauchy bound
    Rat maxratio = 0;
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        Rat r(ps[i] < 0 ? Int(-ps[i]) : ps[i], ps.back() < 0 ? Int(-ps.back()) : ps.back());
        r.canonicalize();
        if (r > maxratio) maxratio = r;
    }
    Rat bound = maxratio + 2;
    // rational roots have denominator dividing lc; two such rationals differ
    // by at least 1/lc^2, so below that width an interval holds at most one
    Rat lc = Rat(ps.back() < 0 ? Int(-ps.back()) : ps.back());
    Rat min_width = 1 / (2 * lc * lc);

    struct Seg {
        Rat lo, hi;
        int nroots;
    };
    std::vector<Seg> stack;
    {
        Rat lo = -bound, hi = bound;
        int n = sturm.variations(lo) - sturm.variations(hi);
        if (zsign_at(ps, lo) == 0) out.push_back(lo);  // cannot happen with the +2 bound
        if (n > 0) stack.push_back({lo, hi, n});
    }
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.nroots == 1 && s.hi - s.lo < min_width) {
            Rat cand = simplest_rational(s.lo, s.hi);
            if (zeval(ps, cand) == 0) out.push_back(cand);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (zsign_at(ps, mid) == 0) out.push_back(mid);
        int left = sturm.variations(s.lo) - sturm.variations(mid);
        int right = s.nroots - left;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
}

// divisor enumeration is cheap when both ends factor by trial division
bool easy_divisors(const Int& n, std::vector<Int>& divs) {
    std::map<Int, int> fac;
    Int rest = n < 0 ? Int(-n) : n;
    for (long p = 2; p < 100000 && rest > 1; p == 2 ? p = 3 : p += 2) {
        while (rest % p == 0) {
            fac[Int(p)]++;
            rest /= p;
        }
        if (Int(p) * p > rest) break;
    }
    if (rest > 1) {
        if (!mpz_probab_prime_p(rest.get_mpz_t(), 32)) return false;
        fac[rest]++;
    }
    size_t total = 1;
    for (auto& [p, e] : fac) {
        total *= static_cast<size_t>(e) + 1;
        if (total > 4096) return false;
    }
    divs = {Int(1)};
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return true;
}

}  // namespace

std::vector<std::pair<Rat, int>> integer_poly_rational_roots(const std::vector<Int>& coeffs) {
    ZPoly c = coeffs;
    zstrip(c);
    if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<std::pair<Rat, int>> roots;
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(Rat(0), static_cast<int>(low));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return roots;
    zprimitive(c);

    std::vector<Rat> found;
    std::vector<Int> num_divs, den_divs;
    if (easy_divisors(c.front(), num_divs) && easy_divisors(c.back(), den_divs)) {
        for (const Int& p : num_divs)
            for (const Int& q : den_divs)
                for (int sign : {1, -1}) {
                    Rat cand(sign * p, q);
                    cand.canonicalize();
                    if (zeval(c, cand) == 0) found.push_back(cand);
                }
    } else {
        // factoring-free fallback: Sturm isolation of the squarefree part
        ZPoly ps = c;
        {
            // squarefree part = c / gcd(c, c') via a primitive PRS over Z
            ZPoly a = c, b = zderivative(c);
            zprimitive(b);
            while (!b.empty()) {
                ZPoly r = zprem_positive(a, b);
                zprimitive(r);
                a = std::move(b);
                b = std::move(r);
            }
            if (a.size() > 1) {
                // exact division c / a over Q, re-cleared to Z
                std::vector<Rat> quo(c.size() - a.size() + 1, Rat(0));
                std::vector<Rat> rem(c.begin(), c.end());
                for (size_t k = quo.size(); k-- > 0;) {
                    Rat f = rem[k + a.size() - 1] / Rat(a.back());
                    quo[k] = f;
                    for (size_t j = 0; j < a.size(); ++j) rem[k + j] -= f * Rat(a[j]);
                }
                Int den = 1;
                for (auto& x : quo) den = lcm(den, x.get_den());
                ps.assign(quo.size(), Int(0));
                for (size_t i = 0; i < quo.size(); ++i) ps[i] = Rat(quo[i] * Rat(den)).get_num();
                zprimitive(ps);
            }
        }
        isolate_rational_roots(ps, found);
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    ZPoly rest = c;
    for (const Rat& r : found) {
        int mult = 0;
        while (rest.size() > 1 && zdeflate(rest, r)) ++mult;
        if (mult > 0) roots.emplace_back(r, mult);
    }
    return roots;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char ch : s)
        if (!(isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            return std::nullopt;
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

}  // namespace dtrans
