#include "lame/type_one.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "lame/spectral.hpp"

namespace lame {

namespace {

cx to_cx(const Rational& r) { return cx(r.convert_to<double>(), 0.0); }

// E-recursion shared by the numeric and symbolic versions. `scal` lifts a
// rational into T; `G(k)` is the k-th Eisenstein sum in T.
template <class T, class Scal>
T p_tilde(int n, const T& B, const std::function<T(int)>& G, Scal scal)
{
    const Rational nn(n);
    std::vector<T> E(static_cast<std::size_t>(n) + 2);
    E[1] = B * scal(Rational(1) / nn);
    const Rational half(1, 2);
    for (int k = 1; k <= n - 1; ++k) {
        T acc = T{};
        for (int i = 1; i <= k; ++i) acc += E[static_cast<std::size_t>(i)] * E[static_cast<std::size_t>(k + 1 - i)];
        // 2(n + 1/2)(n + 3/2)(2k + 1) = (2n+1)(2n+3)(2k+1)/2
        const Rational w = Rational((2 * n + 1) * (2 * n + 3) * (2 * k + 1), 2);
        T rhs = acc * scal(half) - G(k + 1) * scal(w);
        E[static_cast<std::size_t>(k + 1)] = rhs * scal(Rational(1) / Rational(2 * (k - n)));
    }
    T out = T{};
    for (int i = 1; i <= n; ++i) out += E[static_cast<std::size_t>(i)] * E[static_cast<std::size_t>(n + 1 - i)];
    // 8 (n + 1/2)^2 (n + 3/2) = (2n+1)^2 (2n+3)
    return out - G(n + 1) * scal(Rational((2 * n + 1) * (2 * n + 1) * (2 * n + 3)));
}

} // namespace

std::vector<SymPoly> wp_laurent_symbolic(int kmax)
{
    std::vector<SymPoly> c(static_cast<std::size_t>(std::max(kmax, 3)) + 1);
    c[2] = SymPoly::g2() * Rational(1, 20);
    c[3] = SymPoly::g3() * Rational(1, 28);
    for (int k = 4; k <= kmax; ++k) {
        SymPoly acc;
        for (int m = 2; m <= k - 2; ++m) acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = acc * Rational(3, (2 * k + 1) * (k - 3));
    }
    c.resize(static_cast<std::size_t>(kmax) + 1);
    return c;
}

SymPoly p_symbolic(int n)
{
    if (n < 0) throw DomainError("p_symbolic: n >= 0");
    if (n == 0) return SymPoly::B();
    const auto c = wp_laurent_symbolic(n + 1);
    std::function<SymPoly(int)> G = [&](int k) { return c[static_cast<std::size_t>(k)] * Rational(1, 2 * k - 1); };
    const SymPoly t = p_tilde<SymPoly>(n, SymPoly::B(), G, [](const Rational& r) { return r; });
    return t * (Rational(1) / t.coeff(n + 1, 0, 0));
}

Rational p_normalizer(int n)
{
    if (n < 1) return Rational(1);
    const auto c = wp_laurent_symbolic(n + 1);
    std::function<SymPoly(int)> G = [&](int k) { return c[static_cast<std::size_t>(k)] * Rational(1, 2 * k - 1); };
    return p_tilde<SymPoly>(n, SymPoly::B(), G, [](const Rational& r) { return r; }).coeff(n + 1, 0, 0);
}

CxPoly p_poly(int n, const Lattice& L)
{
    if (n < 0) throw DomainError("p_poly: n >= 0");
    if (n == 0) return CxPoly{0.0, 1.0};
    const auto c = wp_laurent(L, n + 1);
    std::function<CxPoly(int)> G = [&](int k) { return CxPoly::constant(c[static_cast<std::size_t>(k)] / (2.0 * k - 1.0)); };
    const CxPoly t = p_tilde<CxPoly>(n, CxPoly{0.0, 1.0}, G, [](const Rational& r) { return to_cx(r); });
    return t.monic();
}

TypeIConstants typeI_constants(int n, const Lattice& L)
{
    if (n < 0) throw DomainError("typeI_constants: n >= 0");
    const cx w1 = L.omega1(), w2 = L.omega2();
    Lattice D(w1, 2.0 * w2);
    const cx e1 = D.wp(0.5 * w1), e2 = D.wp(w2), e3 = D.wp(0.5 * w1 + w2);
    const cx g2 = D.g2(), g3 = D.g3();

    // wp^(2j) = P_j(wp); P_{j+1} = (P_j)'' via (wp^k)'' in terms of wp
    auto second = [&](const CxPoly& P) {
        CxPoly out;
        for (int k = 0; k <= P.degree(); ++k) {
            const cx a = P[k];
            if (a == cx(0.0) || k == 0) continue;
            const double kk = k;
            out += a * (CxPoly::monomial(k + 1, 2.0 * kk * (2.0 * kk + 1.0)) - CxPoly::monomial(k - 1, g2 / 2.0 * kk * (2.0 * kk - 1.0)));
            if (k >= 2) out -= CxPoly::monomial(k - 2, kk * (kk - 1.0) * g3);
        }
        return out;
    };

    // g^(2j+1)(0) = 0 reads 2 sum_k P_j[k] D_k + P_j(e1) - P_j(e3) = 0 with
    // D_k = sum x^k - sum xt^k and D_0 = 0; solve for the top D_{j+1}
    std::vector<cx> D_(static_cast<std::size_t>(n) + 1, cx(0.0));
    CxPoly P{0.0, 1.0};
    for (int j = 0; j < n; ++j) {
        cx rhs = -0.5 * (P(e1) - P(e3));
        for (int k = 1; k <= j; ++k) rhs -= P[k] * D_[static_cast<std::size_t>(k)];
        D_[static_cast<std::size_t>(j + 1)] = rhs / P[j + 1];
        P = second(P);
    }

    TypeIConstants out{n, D, e1, e2, e3, (e1 - e2) * (e3 - e2), {}, {}};
    for (int k = 1; k <= n; ++k) {
        out.cs.push_back(D_[static_cast<std::size_t>(k)]);
        // sum (x - e2)^k - sum (xt - e2)^k
        cx C = 0.0;
        double binom = 1.0;
        for (int j = k; j >= 1; --j) {
            C += binom * std::pow(-e2, k - j) * D_[static_cast<std::size_t>(j)];
            binom = binom * j / (k - j + 1);
        }
        out.Cs.push_back(C);
    }
    return out;
}

double typeI_residual(const TypeIConstants& k, const std::vector<cx>& zs, const std::vector<cx>& zts)
{
    double r = 0.0;
    for (int j = 1; j <= k.n; ++j) {
        cx s = 0.0;
        for (std::size_t i = 0; i < zs.size(); ++i) s += std::pow(zs[i], j) - std::pow(zts[i], j);
        const cx C = k.Cs[static_cast<std::size_t>(j - 1)];
        r = std::max(r, std::abs(s - C) / std::max(1.0, std::abs(C)));
    }
    for (std::size_t i = 0; i < zs.size(); ++i) r = std::max(r, std::abs(zs[i] * zts[i] - k.mu) / std::max(1.0, std::abs(k.mu)));
    return r;
}

namespace {

TypeISolution finish(const TypeIConstants& k, std::vector<cx> zs, int mult)
{
    TypeISolution s;
    s.multiplicity = mult;
    // canonical order inside a solution so output is reproducible
    std::sort(zs.begin(), zs.end(), [](cx a, cx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    s.zs = zs;
    for (const auto& z : zs) {
        s.zts.push_back(k.mu / z);
        s.points.push_back(k.doubled.canonical(wp_inverse(z + k.e2, k.doubled)));
    }
    s.residual = typeI_residual(k, s.zs, s.zts);
    return s;
}

} // namespace

std::vector<TypeISolution> typeI_solve(int n, const Lattice& L)
{
    if (n < 0 || n > 2) throw DomainError("typeI_solve: direct solver covers 0 <= n <= 2");
    const TypeIConstants k = typeI_constants(n, L);
    std::vector<TypeISolution> out;
    if (n == 0) {
        out.push_back(TypeISolution{});
        return out;
    }
    if (n == 1) {
        // z - mu/z = C1
        const cx C1 = k.Cs[0];
        const cx disc = C1 * C1 + 4.0 * k.mu;
        if (std::abs(disc) <= 1e-10 * (std::norm(C1) + 4.0 * std::abs(k.mu))) {
            out.push_back(finish(k, {C1 / 2.0}, 2));
            return out;
        }
        const cx r = std::sqrt(disc);
        out.push_back(finish(k, {(C1 + r) / 2.0}, 1));
        out.push_back(finish(k, {(C1 - r) / 2.0}, 1));
        return out;
    }
    // n = 2 in u = z1 + z2, v = z1 z2 after zt_i = mu / z_i:
    //   u = C1 v / (v - mu),  (C1^2 v - 2 (v - mu)^2)(v + mu) = C2 v (v - mu)
    const cx C1 = k.Cs[0], C2 = k.Cs[1], mu = k.mu;
    const CxPoly V{0.0, 1.0};
    const CxPoly vm = V - CxPoly::constant(mu), vp = V + CxPoly::constant(mu);
    const CxPoly cubic = (C1 * C1 * V - 2.0 * vm * vm) * vp - C2 * V * vm;
    const double sc = std::max({1.0, std::abs(mu), std::abs(C1) * std::abs(C1)});
    for (const auto& [v, m] : cluster_roots(roots(cubic), 1e-9 * sc)) {
        if (std::abs(v) < 1e-12 * sc || std::abs(v - mu) < 1e-12 * sc) continue;
        const cx u = C1 * v / (v - mu);
        const cx r = std::sqrt(u * u - 4.0 * v);
        out.push_back(finish(k, {(u + r) / 2.0, (u - r) / 2.0}, m));
    }
    return out;
}

double evenness_residual(const TypeIConstants& k, const TypeISolution& s)
{
    const Lattice& D = k.doubled;
    const cx w2 = D.omega2() / 2.0;
    std::vector<cx> P{D.omega1() / 2.0};
    for (const auto& p : s.points) {
        P.push_back(p);
        P.push_back(-p);
    }
    double r = INFINITY;
    for (const auto& p : P) {
        r = std::min(r, std::abs(D.centered(p)));
        r = std::min(r, std::abs(D.centered(p + w2)));
    }
    r *= 0.5;
    constexpr int M = 64;
    std::vector<cx> vals(M);
    double big = 0.0;
    for (int m = 0; m < M; ++m) {
        const cx z = std::polar(r, 2.0 * std::numbers::pi * m / M);
        cx g = 0.0;
        for (const auto& p : P) g -= D.wp(z - p) - D.wp(z - p - w2);
        vals[static_cast<std::size_t>(m)] = g;
        big = std::max(big, std::abs(g));
    }
    double worst = 0.0;
    // coefficient of z^j scaled by r^j, j = 0 .. 2n-1
    for (int j = 0; j < 2 * k.n; ++j) {
        cx a = 0.0;
        for (int m = 0; m < M; ++m) a += vals[static_cast<std::size_t>(m)] * std::polar(1.0, -2.0 * std::numbers::pi * j * m / M);
        worst = std::max(worst, std::abs(a) / M / big);
    }
    return worst;
}

cx typeI_n1_discriminant(const Lattice& L)
{
    const TypeIConstants k = typeI_constants(1, L);
    return (k.e3 - k.e1) * (k.e3 - k.e1) + 16.0 * (k.e1 - k.e2) * (k.e3 - k.e2);
}

std::vector<std::pair<cx, int>> distinct_roots(const CxPoly& p, double scale)
{
    if (p.degree() < 1) return {};
    auto groups = cluster_roots(roots(p), 1e-7 * scale);
    double size = 0.0;
    for (int i = 0; i <= p.degree(); ++i) size += std::abs(p[i]) * std::pow(scale, i);
    // a k-fold root at m: p^(j)(m)/j! vanishes for j < k, up to rounding
    auto consistent = [&](cx m, int k) {
        CxPoly d = p;
        double fact = 1.0;
        for (int j = 0; j < k; ++j) {
            if (j > 0) {
                d = d.derivative();
                fact *= j;
            }
            if (std::abs(d(m)) / fact * std::pow(scale, j) > 1e-11 * size) return false;
        }
        return true;
    };
    for (;;) {
        double best = INFINITY;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                const double dd = std::abs(groups[i].first - groups[j].first);
                if (dd < best) {
                    best = dd;
                    bi = i;
                    bj = j;
                }
            }
        if (!std::isfinite(best)) break;
        const int k = groups[bi].second + groups[bj].second;
        cx m = (groups[bi].first * static_cast<double>(groups[bi].second) + groups[bj].first * static_cast<double>(groups[bj].second)) / static_cast<double>(k);
        // polished members of a multiple root scatter, so their mean is poor;
        // a k-fold root is a simple root of p^(k-1)
        CxPoly dk = p;
        for (int j = 1; j < k; ++j) dk = dk.derivative();
        const CxPoly dk1 = dk.derivative();
        for (int it = 0; it < 8 && !dk1.is_zero(); ++it) {
            const cx den = dk1(m);
            if (den == cx(0.0)) break;
            const cx step = dk(m) / den;
            if (std::abs(step) > best) break;
            m -= step;
        }
        if (!consistent(m, k)) break;
        groups[bi] = {m, k};
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return groups;
}

int count_typeI(int n, const Lattice& L)
{
    return static_cast<int>(distinct_roots(p_poly(n, L), std::max(1.0, L.scale())).size());
}

cx j_invariant(const Lattice& L)
{
    const cx g2c = L.g2() * L.g2() * L.g2();
    return 1728.0 * g2c / L.delta();
}

} // namespace lame
