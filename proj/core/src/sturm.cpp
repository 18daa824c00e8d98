#include "lame/sturm.hpp"

#include <cmath>

namespace lame {

QPoly to_rational(const RealPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (double v : p.coeffs()) {
        if (!std::isfinite(v)) throw DomainError("to_rational: non-finite coefficient");
        c.emplace_back(v);
    }
    return QPoly(std::move(c));
}

QPoly to_rational(const CxPoly& p, double chop_rel)
{
    double big = 0.0;
    for (const auto& v : p.coeffs()) big = std::max(big, std::abs(v));
    std::vector<double> re;
    for (const auto& v : p.coeffs()) {
        if (std::abs(v.imag()) > 1e-10 * big) throw DomainError("to_rational: polynomial is not real");
        re.push_back(std::abs(v.real()) <= chop_rel * big ? 0.0 : v.real());
    }
    return to_rational(RealPoly(std::move(re)));
}

Rational eval(const QPoly& p, const Rational& x)
{
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = Rational(acc * x + *it);
    return acc;
}

QPoly derivative(const QPoly& p) { return p.derivative(); }

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace {

int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

SturmChain euclid(QPoly f0, QPoly f1)
{
    SturmChain c;
    c.polys.push_back(std::move(f0));
    if (f1.is_zero()) return c;
    c.polys.push_back(std::move(f1));
    for (;;) {
        const auto& a = c.polys[c.polys.size() - 2];
        const auto& b = c.polys.back();
        QPoly r = divmod(a, b).second;
        if (r.is_zero()) break;
        // positive rescaling keeps every sign and stops coefficient growth
        Rational lead = r.leading();
        if (lead < 0) lead = -lead;
        c.polys.push_back(-(r * (Rational(1) / lead)));
    }
    return c;
}

// sign of p just to the right of x: first nonzero derivative
int right_sign(QPoly p, const Rational& x)
{
    while (!p.is_zero()) {
        const int s = sgn(eval(p, x));
        if (s != 0) return s;
        p = p.derivative();
    }
    return 0;
}

int variations(const std::vector<int>& s)
{
    int count = 0, prev = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++count;
        prev = v;
    }
    return count;
}

} // namespace

SturmChain sturm_chain(const QPoly& p)
{
    if (p.is_zero()) throw DomainError("sturm_chain: zero polynomial");
    return euclid(p, p.derivative());
}

SturmChain sturm_chain(const RealPoly& p) { return sturm_chain(to_rational(p)); }

SturmChain reduced_chain(const QPoly& p)
{
    if (p.is_zero()) throw DomainError("reduced_chain: zero polynomial");
    const QPoly d = p.derivative();
    if (d.is_zero()) return SturmChain{{p}};
    return euclid(p, divmod(d, gcd(p, d)).first);
}

int sigma_count(const SturmChain& c, double xi)
{
    std::vector<int> s;
    s.reserve(c.polys.size());
    if (std::isinf(xi)) {
        for (const auto& f : c.polys) {
            const int lead = sgn(f.leading());
            // on the left, odd degrees flip the leading sign
            s.push_back(xi > 0 || f.degree() % 2 == 0 ? lead : -lead);
        }
    } else {
        const Rational x(xi);
        for (const auto& f : c.polys) s.push_back(right_sign(f, x));
    }
    return variations(s);
}

bool is_sturm_sequence(const SturmChain& c, double a, double b)
{
    if (c.polys.empty()) return false;
    for (const auto& f : c.polys)
        if (f.is_zero()) return false;
    const QPoly& last = c.polys.back();
    if (last.degree() > 0) {
        if (count_roots(last, a, b) != 0) return false;
        // a zero at the right endpoint is inside (a, b]
        if (std::isfinite(b) && eval(last, Rational(b)) == 0) return false;
    }
    for (std::size_t i = 1; i + 1 < c.polys.size(); ++i) {
        const QPoly r = divmod(c.polys[i - 1], c.polys[i]).second;
        // r = -c f_{i+1} with c > 0
        if (r.degree() != c.polys[i + 1].degree()) return false;
        const Rational k = r.leading() / c.polys[i + 1].leading();
        if (!(k < 0)) return false;
        if (!(r - c.polys[i + 1] * k).is_zero()) return false;
    }
    return true;
}

int count_roots(const QPoly& p, double a, double b)
{
    if (!(a < b)) throw DomainError("count_roots: a < b required");
    if (p.is_zero()) throw DomainError("count_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    const QPoly sq = divmod(p, gcd(p, p.derivative())).first;
    const SturmChain c = sturm_chain(sq);
    return sigma_count(c, a) - sigma_count(c, b);
}

int count_roots(const RealPoly& p, double a, double b) { return count_roots(to_rational(p), a, b); }
int count_roots(const CxPoly& p, double a, double b) { return count_roots(to_rational(p), a, b); }

int signed_count(const QPoly& p, double a, double b)
{
    if (!(a < b)) throw DomainError("signed_count: a < b required");
    const SturmChain c = reduced_chain(p);
    return sigma_count(c, a) - sigma_count(c, b);
}

int signed_count(const RealPoly& p, double a, double b) { return signed_count(to_rational(p), a, b); }

} // namespace lame
