#include "lame/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace lame {

namespace {

cx scaled(const cx& v, long p, long q) { return v * (static_cast<double>(p) / static_cast<double>(q)); }
CxPoly scaled(const CxPoly& v, long p, long q) { return v * cx(static_cast<double>(p) / static_cast<double>(q)); }
SymPoly scaled(const SymPoly& v, long p, long q) { return v * Rational(p, q); }

// Three-term recursion for s_0..s_n; R is a number, a polynomial in B, or a
// polynomial in (B, g2, g3).
template <class R>
std::vector<R> run_s(int n, const R& one, const R& B, const R& g2, const R& g3)
{
    if (n < 1) throw DomainError("spectral recursion needs n >= 1");
    std::vector<R> s(static_cast<std::size_t>(n) + 1, R{});
    s[0] = one;
    auto at = [&](int j) -> R { return j < 0 ? R{} : s[static_cast<std::size_t>(j)]; };
    for (int mu = n - 1; mu >= 0; --mu) {
        const int j = n - mu;
        const long den = 2L * (n - mu) * (2 * mu + 1) * (n + mu + 1);
        R acc = scaled(B * at(j - 1), 4L * (mu + 1), den);
        acc = acc - scaled(g2 * at(j - 2), static_cast<long>(mu + 1) * (mu + 2) * (2 * mu + 3), 2 * den);
        acc = acc + scaled(g3 * at(j - 3), static_cast<long>(mu + 1) * (mu + 2) * (mu + 3), den);
        s[static_cast<std::size_t>(j)] = acc;
    }
    return s;
}

template <class R>
R run_ell(int n, const std::vector<R>& s, const R& B, const R& g2, const R& g3)
{
    auto at = [&](int j) -> R { return j < 0 ? R{} : s[static_cast<std::size_t>(j)]; };
    const R sn = at(n), s1 = at(n - 1), s2 = at(n - 2);
    R out = scaled(B * sn * sn, 4, 1);
    out = out + scaled(g3 * s2 * sn, 4, 1);
    out = out - g2 * s1 * sn;
    out = out - g3 * s1 * s1;
    return out;
}

double coef_magnitude(const CxPoly& p, double x)
{
    double m = 0.0, xk = 1.0;
    for (const auto& c : p.coeffs()) {
        m += std::abs(c) * xk;
        xk *= x;
    }
    return m;
}

// sin of the angle between two complex lines
double line_angle(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v)
{
    const Eigen::VectorXcd a = u.normalized();
    const Eigen::VectorXcd b = v.normalized();
    const Eigen::VectorXcd r = a - b * (b.adjoint() * a)(0);
    return r.norm();
}

} // namespace

// ---------------------------------------------------------------- divisors

DivisorList::DivisorList(const Lattice& L, std::vector<cx> points) : L_(L), pts_(std::move(points))
{
    for (auto& p : pts_) {
        if (L_.on_lattice(p, 1e-12)) throw DomainError("divisor points must be nonzero on the torus");
        p = L_.canonical(p);
    }
    std::sort(pts_.begin(), pts_.end(), [this](cx a, cx b) {
        const Coords ca = L_.canonical_coords(a), cb = L_.canonical_coords(b);
        if (ca.s != cb.s) return ca.s < cb.s;
        return ca.t < cb.t;
    });
}

std::vector<Coords> DivisorList::coords() const
{
    std::vector<Coords> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) out.push_back(L_.canonical_coords(p));
    return out;
}

DivisorList DivisorList::negated() const
{
    std::vector<cx> m;
    m.reserve(pts_.size());
    for (const auto& p : pts_) m.push_back(-p);
    return DivisorList(L_, std::move(m));
}

double torus_distance(const Coords& a, const Coords& b)
{
    auto wrap = [](double d) {
        d -= std::round(d);
        return std::abs(d);
    };
    return std::hypot(wrap(a.s - b.s), wrap(a.t - b.t));
}

double DivisorList::coord_distance(const DivisorList& o) const
{
    if (o.n() != n()) return INFINITY;
    const auto ca = coords(), cb = o.coords();
    std::vector<bool> used(cb.size(), false);
    double worst = 0.0;
    for (const auto& a : ca) {
        double best = INFINITY;
        std::size_t bi = 0;
        for (std::size_t j = 0; j < cb.size(); ++j)
            if (!used[j] && torus_distance(a, cb[j]) < best) {
                best = torus_distance(a, cb[j]);
                bi = j;
            }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

bool DivisorList::same_as(const DivisorList& o, double tol) const { return coord_distance(o) < tol; }

Membership is_in_Yn(const DivisorList& d)
{
    Membership m;
    const auto& a = d.points();
    const Lattice& L = d.lattice();
    const auto c = d.coords();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (torus_distance(c[i], c[j]) < 1e-9) {
                m.violated = "points not pairwise distinct";
                return m;
            }
    for (std::size_t i = 0; i < a.size(); ++i) {
        cx acc = 0.0;
        const cx zi = L.zeta(a[i]);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) acc += L.zeta(a[i] - a[j]) + L.zeta(a[j]) - zi;
        m.residual = std::max(m.residual, std::abs(acc));
    }
    m.member = m.residual < 1e-7;
    return m;
}

Membership is_in_Xn(const DivisorList& d)
{
    Membership y = is_in_Yn(d);
    if (!y.violated.empty()) return y;
    Membership m;
    const Lattice& L = d.lattice();
    const auto& a = d.points();
    std::vector<cx> x, yv;
    for (const auto& p : a) {
        if (L.on_lattice(2.0 * p, 1e-9)) {
            m.violated = "2-torsion point present";
            m.residual = y.residual;
            return m;
        }
        const auto v = L.all(p);
        x.push_back(v.wp);
        yv.push_back(v.wp_prime);
    }
    const double tol = 1e-9 * std::max(1.0, L.scale());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (std::abs(x[i] - x[j]) < tol) {
                m.violated = "wp-values not pairwise distinct";
                m.residual = y.residual;
                return m;
            }
    double res = 0.0;
    for (int k = 0; k + 2 <= d.n(); ++k) {
        cx acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += yv[i] * std::pow(x[i], k);
        res = std::max(res, std::abs(acc));
    }
    m.residual = std::max(res, y.residual);
    m.member = y.member && res < 1e-7;
    return m;
}

// ---------------------------------------------------------------- polynomials

std::vector<cx> s_coeffs(int n, cx B, const Lattice& L) { return run_s<cx>(n, 1.0, B, L.g2(), L.g3()); }

std::vector<CxPoly> s_polys(int n, const Lattice& L)
{
    return run_s<CxPoly>(n, CxPoly::constant(1.0), CxPoly{0.0, 1.0}, CxPoly::constant(L.g2()), CxPoly::constant(L.g3()));
}

std::vector<SymPoly> s_symbolic(int n) { return run_s<SymPoly>(n, SymPoly(1), SymPoly::B(), SymPoly::g2(), SymPoly::g3()); }

CxPoly ell_poly(int n, const Lattice& L)
{
    const auto s = s_polys(n, L);
    return run_ell<CxPoly>(n, s, CxPoly{0.0, 1.0}, CxPoly::constant(L.g2()), CxPoly::constant(L.g3()));
}

SymPoly ell_symbolic(int n)
{
    const auto s = s_symbolic(n);
    return run_ell<SymPoly>(n, s, SymPoly::B(), SymPoly::g2(), SymPoly::g3());
}

cx disc_ell(int n, const Lattice& L) { return discriminant(ell_poly(n, L)); }

CxPoly x_poly(int n, cx B, const Lattice& L)
{
    const auto s = s_coeffs(n, B, L);
    std::vector<cx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = ((k % 2) ? -1.0 : 1.0) * s[static_cast<std::size_t>(k)];
    return CxPoly(std::move(c));
}

// ---------------------------------------------------------------- fibers

cx wp_inverse(cx x, const Lattice& L)
{
    const double mag = std::max({1.0, std::abs(x), L.scale()});
    std::vector<std::pair<double, cx>> seeds;
    constexpr int grid = 8;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const cx a = L.from_coords((i + 0.5) / grid - 0.5, (j + 0.5) / grid - 0.5);
            seeds.emplace_back(std::abs(L.wp(a) - x), a);
        }
    if (std::abs(x) > L.scale()) {
        const cx a = 1.0 / std::sqrt(x);
        seeds.emplace_back(std::abs(L.wp(a) - x), a);
    }
    std::stable_sort(seeds.begin(), seeds.end(), [](const auto& p, const auto& q) { return p.first < q.first; });

    cx best = seeds.front().second;
    double best_r = INFINITY;
    for (std::size_t si = 0; si < std::min<std::size_t>(seeds.size(), 6); ++si) {
        cx a = seeds[si].second;
        double r = INFINITY;
        for (int it = 0; it < 200; ++it) {
            const auto v = L.all(a);
            const cx f = v.wp - x;
            r = std::abs(f);
            if (r < best_r) {
                best_r = r;
                best = a;
            }
            if (r <= 4e-16 * mag) break;
            if (v.wp_prime == cx(0.0)) {
                a += 1e-6 * L.omega1();
                continue;
            }
            const cx step = f / v.wp_prime;
            double lam = 1.0;
            bool moved = false;
            for (int h = 0; h < 40; ++h, lam *= 0.5) {
                const cx cand = a - lam * step;
                if (L.on_lattice(cand, 1e-12)) continue;
                if (std::abs(L.wp(cand) - x) < r) {
                    a = cand;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (best_r <= 1e-11 * mag) return L.canonical(best);
    }
    throw NumericsError("wp inversion did not converge");
}

DivisorList lift(int n, cx B, cx C, const Lattice& L)
{
    const auto xs = roots(x_poly(n, B, L));
    std::vector<cx> pts;
    pts.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cx den = 1.0;
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) den *= xs[i] - xs[j];
        if (den == cx(0.0)) throw NumericsError("coincident wp-values off the ramification locus");
        const cx y = C / den;
        cx a = wp_inverse(xs[i], L);
        const cx yp = L.wp_prime(a);
        if (std::abs(yp + y) < std::abs(yp - y)) a = -a;
        const double miss = std::min(std::abs(yp - y), std::abs(yp + y));
        if (miss > 1e-6 * std::max(1.0, std::abs(y))) throw NumericsError("lift: wp' does not match the prescribed sheet value");
        pts.push_back(a);
    }
    return DivisorList(L, std::move(pts));
}

Fiber fiber(int n, cx B, const Lattice& L)
{
    const CxPoly ell = ell_poly(n, L);
    const cx lv = ell(B);
    const double span = std::max(std::abs(B), L.scale());
    const double ref = coef_magnitude(ell, span);
    Fiber f;
    f.point.n = n;
    f.point.B = B;
    if (std::abs(lv) > 1e-10 * ref) {
        f.point.C = std::sqrt(lv);
        DivisorList a = lift(n, B, f.point.C, L);
        DivisorList b = a.negated();
        f.sheets.push_back(std::move(a));
        f.sheets.push_back(std::move(b));
        return f;
    }

    f.ramified = true;
    f.point.C = 0.0;
    const auto xs = roots(x_poly(n, B, L));
    const auto groups = cluster_roots(xs, 1e-5 * std::max(1.0, span));
    const cx halves[3] = {L.omega1() / 2.0, L.omega2() / 2.0, L.omega3() / 2.0};
    std::vector<cx> pts;
    for (const auto& [x, mult] : groups) {
        int left = mult;
        if (mult % 2 == 1) {
            int best = 0;
            for (int i = 1; i < 3; ++i)
                if (std::abs(x - L.es()[static_cast<std::size_t>(i)]) < std::abs(x - L.es()[static_cast<std::size_t>(best)])) best = i;
            pts.push_back(halves[best]);
            --left;
        }
        if (left > 0) {
            const cx a = wp_inverse(x, L);
            for (int k = 0; k < left; ++k) pts.push_back(k % 2 == 0 ? a : -a);
        }
    }
    f.sheets.emplace_back(L, std::move(pts));
    return f;
}

// ---------------------------------------------------------------- infinity

std::vector<cx> canonicalize_tangent(std::vector<cx> t)
{
    cx sum = 0.0;
    for (const auto& v : t) sum += v;
    if (std::abs(sum) < 1e-300) throw NumericsError("tangent normalization: sum of t vanishes");
    for (auto& v : t) v /= sum;
    auto key = [](cx v) {
        double a = std::arg(v);
        if (a > std::numbers::pi - 1e-9) a -= 2.0 * std::numbers::pi;
        return a;
    };
    std::sort(t.begin(), t.end(), [&](cx a, cx b) {
        const double ka = key(a), kb = key(b);
        if (std::abs(ka - kb) > 1e-9) return ka < kb;
        return std::abs(a) < std::abs(b);
    });
    return t;
}

std::vector<cx> tangent_from_roots(const std::vector<cx>& us)
{
    std::vector<cx> t;
    for (std::size_t i = 0; i < us.size(); ++i) {
        cx gp = 1.0;
        for (std::size_t j = 0; j < us.size(); ++j)
            if (j != i) gp *= us[i] - us[j];
        t.push_back(1.0 / (us[i] * gp));
    }
    return canonicalize_tangent(std::move(t));
}

InfinityTangent infinity_tangent(int n)
{
    if (n < 2) throw DomainError("infinity_tangent needs n >= 2");
    InfinityTangent out;
    out.n = n;
    out.tau.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    out.tau[0] = 1;
    out.tau[1] = 1;
    for (int i = n - 2; i >= 0; --i) {
        const Rational lhs = Rational((i - n) * (2 * i + 1) * (i + n + 1));
        const Rational rhs = Rational(-2 * (i + 1) * (2 * n - 1)) * out.tau[1] * out.tau[static_cast<std::size_t>(n - i - 1)];
        out.tau[static_cast<std::size_t>(n - i)] = rhs / lhs;
    }
    out.sbar.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    out.sbar[0] = 1;
    for (int k = 1; k <= n; ++k)
        out.sbar[static_cast<std::size_t>(k)] =
            Rational(2 * (n - k + 1), k * (2 * n - 2 * k + 1) * (2 * n - k + 1)) * out.sbar[static_cast<std::size_t>(k - 1)];

    std::vector<cx> g(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        g[static_cast<std::size_t>(i)] = (((n - i) % 2) ? -1.0 : 1.0) * static_cast<double>(out.tau[static_cast<std::size_t>(n - i)]);
    const auto us = roots(CxPoly(g));
    const auto groups = cluster_roots(us, 1e-8);
    if (groups.size() != us.size()) throw NumericsError("limiting polynomial has a repeated root");
    out.t = tangent_from_roots(us);

    for (int k = 1; k <= n - 1; ++k) {
        cx acc = 0.0;
        for (const auto& v : out.t) acc += std::pow(v, 2 * k + 1);
        out.power_residual = std::max(out.power_residual, std::abs(acc));
    }
    out.min_abs_t = INFINITY;
    out.min_pair_sum = INFINITY;
    for (std::size_t i = 0; i < out.t.size(); ++i) {
        out.min_abs_t = std::min(out.min_abs_t, std::abs(out.t[i]));
        for (std::size_t j = i + 1; j < out.t.size(); ++j) out.min_pair_sum = std::min(out.min_pair_sum, std::abs(out.t[i] + out.t[j]));
    }
    return out;
}

// ---------------------------------------------------------------- linear systems

LinearSystemReport linear_system_equiv(const std::vector<cx>& xs)
{
    const int n = static_cast<int>(xs.size());
    if (n < 2 || n > 8) throw DomainError("linear_system_equiv: 2 <= n <= 8");
    double spread = 0.0;
    for (const auto& x : xs) spread = std::max(spread, std::abs(x));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)]) <= 1e-12 * std::max(1.0, spread))
                throw DomainError("linear_system_equiv: x values must be distinct");

    auto x = [&](int i) { return xs[static_cast<std::size_t>(i)]; };
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                A(i, j) = 1.0 / (x(i) - x(j));
                A(i, i) += A(i, j);
            }
    Eigen::MatrixXcd Bm(n - 1, n);
    for (int l = 0; l < n - 1; ++l)
        for (int i = 0; i < n; ++i) Bm(l, i) = std::pow(x(i), l);

    LinearSystemReport rep;
    rep.n = n;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svdA(A, Eigen::ComputeFullV);
    const auto sv = svdA.singularValues();
    for (int k = 0; k < n; ++k)
        if (sv(k) > 1e-10 * sv(0)) ++rep.rank_A;
    const Eigen::VectorXcd kerA = svdA.matrixV().col(n - 1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svdB(Bm, Eigen::ComputeFullV);
    const Eigen::VectorXcd kerB = svdB.matrixV().col(n - 1);
    rep.kernel_angle = line_angle(kerA, kerB);

    double fact = 1.0;
    for (int k = 2; k < n; ++k) fact *= k;
    Eigen::VectorXcd closed(n);
    for (int i = 0; i < n; ++i) {
        cx prod = 1.0;
        for (int k = 0; k < n; ++k)
            if (k != i) prod *= x(k) - x(i);
        closed(i) = 1.0 / prod;
        // minor of the first n-1 rows with column i removed
        Eigen::MatrixXcd M(n - 1, n - 1);
        for (int r = 0; r < n - 1; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != i) M(r, cc++) = A(r, c);
        const cx minor = (n - 1 == 0) ? cx(1.0) : M.partialPivLu().determinant();
        const double sign = ((n + i + 1) % 2 == 0) ? 1.0 : -1.0;
        const cx expect = sign * fact / prod;
        rep.minor_residual = std::max(rep.minor_residual, std::abs(minor - expect) / std::abs(expect));
        if (i == n - 1) {
            cx p = 1.0;
            for (int k = 0; k < n - 1; ++k) p *= x(k) - x(n - 1);
            rep.d_n = minor * p;
        }
    }
    rep.formula_angle = line_angle(kerA, closed);
    return rep;
}

namespace {

template <class F>
F det_exact(std::vector<std::vector<F>> m)
{
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == F(0)) ++piv;
        if (piv == n) return F(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == F(0)) continue;
            const F f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

template <class F>
F d_n_field(const std::vector<F>& xs)
{
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw DomainError("d_n: n >= 2");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (xs[static_cast<std::size_t>(i)] == xs[static_cast<std::size_t>(j)]) throw DomainError("d_n: x values must be distinct");
    auto x = [&](int i) { return xs[static_cast<std::size_t>(i)]; };
    std::vector<std::vector<F>> m(static_cast<std::size_t>(n - 1), std::vector<F>(static_cast<std::size_t>(n - 1)));
    for (int i = 0; i < n - 1; ++i) {
        F diag(0);
        for (int k = 0; k < n; ++k)
            if (k != i) diag += F(1) / (x(i) - x(k));
        for (int j = 0; j < n - 1; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? diag : F(1) / (x(i) - x(j));
    }
    F p(1);
    for (int k = 0; k < n - 1; ++k) p *= x(k) - x(n - 1);
    return det_exact(std::move(m)) * p;
}

} // namespace

Rational d_n_exact(const std::vector<Rational>& xs) { return d_n_field(xs); }

Cyclotomic d_n_roots_of_unity(int n)
{
    const Cyclotomic zeta = Cyclotomic::generator(n);
    std::vector<Cyclotomic> xs;
    Cyclotomic p(1);
    for (int i = 0; i < n; ++i) {
        p = p * zeta;
        xs.push_back(p);
    }
    return d_n_field(xs);
}

} // namespace lame
