#include "lame/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "lame/greens.hpp"

namespace lame {

namespace {

constexpr double pi = std::numbers::pi;
const cx I(0.0, 1.0);

cx zeta_sum(const DivisorList& d)
{
    cx s = 0.0;
    for (const auto& a : d.points()) s += d.lattice().zeta(a);
    return s;
}

} // namespace

cx B_of(const DivisorList& d)
{
    cx s = 0.0;
    for (const auto& a : d.points()) s += d.lattice().wp(a);
    return (2.0 * d.n() - 1.0) * s;
}

cx log_w_ansatz(const Lattice& L, const std::vector<cx>& a, cx z)
{
    cx zs = 0.0;
    cx acc = 0.0;
    for (const auto& p : a) {
        zs += L.zeta(p);
        acc += L.log_sigma(z - p);
    }
    return z * zs + acc - static_cast<double>(a.size()) * L.log_sigma(z);
}

cx w_ansatz(const Lattice& L, const std::vector<cx>& a, cx z) { return std::exp(log_w_ansatz(L, a, z)); }
cx w_ansatz(const DivisorList& d, cx z) { return w_ansatz(d.lattice(), d.points(), z); }

std::vector<cx> default_samples(const DivisorList& d, int count)
{
    const Lattice& L = d.lattice();
    const auto pc = d.coords();
    std::vector<cx> out;
    // low-discrepancy walk over the cell, skipping points close to 0 or to d
    const double g1 = 0.7548776662466927, g2 = 0.5698402909980532;
    for (int k = 1; static_cast<int>(out.size()) < count && k < 1000; ++k) {
        const Coords c{std::fmod(0.5 + g1 * k, 1.0), std::fmod(0.5 + g2 * k, 1.0)};
        bool ok = torus_distance(c, {0.0, 0.0}) > 0.12;
        for (const auto& p : pc) {
            ok = ok && torus_distance(c, p) > 0.12;
            ok = ok && torus_distance(c, {1.0 - p.s, 1.0 - p.t}) > 0.12;
        }
        if (ok) out.push_back(L.from_coords(c.s, c.t));
    }
    return out;
}

LameResidual lame_residual(const DivisorList& d, const std::vector<cx>& samples, double h)
{
    return lame_residual(d, B_of(d), samples, h);
}

LameResidual lame_residual(const DivisorList& d, cx B, const std::vector<cx>& samples, double h)
{
    LameResidual r;
    const Membership y = is_in_Yn(d);
    r.yn = y.residual;
    r.in_yn = y.member;
    const Lattice& L = d.lattice();
    const double nn = d.n() * (d.n() + 1.0);
    for (const auto& z : samples) {
        // differences taken in log space relative to w(z) to avoid overflow
        const cx l0 = log_w_ansatz(L, d.points(), z);
        auto w = [&](cx x) { return std::exp(log_w_ansatz(L, d.points(), x) - l0); };
        const cx wp2 = w(z + 2.0 * h), wp1 = w(z + h), wm1 = w(z - h), wm2 = w(z - 2.0 * h);
        const cx d2 = (-wp2 + 16.0 * wp1 - 30.0 + 16.0 * wm1 - wm2) / (12.0 * h * h);
        const cx res = d2 - (nn * L.wp(z) + B);
        r.ode = std::max(r.ode, std::abs(res));
    }
    return r;
}

cx monodromy(const DivisorList& d, long m, long n)
{
    const Lattice& L = d.lattice();
    const cx omega = static_cast<double>(m) * L.omega1() + static_cast<double>(n) * L.omega2();
    cx asum = 0.0;
    for (const auto& a : d.points()) asum += a;
    return std::exp(omega * zeta_sum(d) - L.eta_of(m, n) * asum);
}

cx monodromy(const DivisorList& d, cx omega)
{
    const Coords c = d.lattice().coords(omega);
    const double m = std::round(c.s), n = std::round(c.t);
    if (std::abs(c.s - m) > 1e-9 || std::abs(c.t - n) > 1e-9) throw DomainError("monodromy: omega must be a lattice vector");
    return monodromy(d, static_cast<long>(m), static_cast<long>(n));
}

cx f_dev(const DivisorList& d, cx z)
{
    const Lattice& L = d.lattice();
    cx acc = 2.0 * z * zeta_sum(d) + I * pi * static_cast<double>(d.n());
    for (const auto& a : d.points()) {
        acc -= L.log_sigma(z + a);  // PoleError at z = -a
        if (L.on_lattice(z - a, 1e-14)) return 0.0;
        acc += L.log_sigma(z - a);
    }
    return std::exp(acc);
}

cx f_dev_prime(const DivisorList& d, cx z)
{
    const Lattice& L = d.lattice();
    if (L.on_lattice(z, 1e-300)) return 0.0;
    const cx P = L.wp(z);
    cx g = 0.0;
    for (const auto& a : d.points()) {
        const auto v = L.all(a);
        g += v.wp_prime / (P - v.wp);
    }
    return f_dev(d, z) * g;
}

int ord_zero_check(const DivisorList& d, double r1, double r2)
{
    if (d.same_as(d.negated(), 1e-9)) throw DomainError("ord_zero_check: divisor is invariant under negation");
    auto mean_log = [&](double r) {
        double s = 0.0;
        constexpr int k = 8;
        for (int j = 0; j < k; ++j) s += std::log(std::abs(f_dev_prime(d, std::polar(r, 2.0 * pi * j / k + 0.3))));
        return s / k;
    };
    const double slope = (mean_log(r1) - mean_log(r2)) / (std::log(r1) - std::log(r2));
    const double order = slope - 0.0;
    const double nearest = std::round(order);
    if (!std::isfinite(order) || std::abs(order - nearest) > 0.2)
        throw NumericsError("ord_zero_check: slope " + std::to_string(order) + " is not close to an integer");
    return static_cast<int>(nearest);
}

double schwarzian_residual(const DivisorList& d, const std::vector<cx>& samples, double h)
{
    const Lattice& L = d.lattice();
    const cx B = B_of(d);
    const double nn = d.n() * (d.n() + 1.0);
    double worst = 0.0;
    for (const auto& z : samples) {
        const cx f0 = f_dev(d, z);
        auto f = [&](cx x) { return f_dev(d, x) / f0; };
        const cx p3 = f(z + 3.0 * h), p2 = f(z + 2.0 * h), p1 = f(z + h);
        const cx m1 = f(z - h), m2 = f(z - 2.0 * h), m3 = f(z - 3.0 * h);
        // all three stencils are fourth order
        const cx d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
        const cx d2 = (-p2 + 16.0 * p1 - 30.0 + 16.0 * m1 - m2) / (12.0 * h * h);
        const cx d3 = (-p3 + 8.0 * p2 - 13.0 * p1 + 13.0 * m1 - 8.0 * m2 + m3) / (8.0 * h * h * h);
        const cx S = d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1);
        worst = std::max(worst, std::abs(S + 2.0 * (nn * L.wp(z) + B)));
    }
    return worst;
}

cx green_eq_residual(const DivisorList& d)
{
    cx s = 0.0;
    for (const auto& p : d.points()) s += green_grad(p, d.lattice());
    return s;
}

namespace {

struct Track {
    cx B;
    cx C;
};

// sheet continuation: the square root of ell(B) nearest the previous C
cx continue_sheet(const CxPoly& ell, cx B, cx C_prev)
{
    const cx c = std::sqrt(ell(B));
    return std::abs(c - C_prev) <= std::abs(c + C_prev) ? c : -c;
}

cx residual_at(int n, const Lattice& L, cx B, cx C) { return green_eq_residual(lift(n, B, C, L)); }

bool disjoint_from_negation(const DivisorList& d)
{
    const auto a = d.coords();
    const auto b = d.negated().coords();
    for (const auto& p : a)
        for (const auto& q : b)
            if (torus_distance(p, q) < 1e-6) return false;
    return true;
}

std::optional<TypeIIHit> newton_from(int n, const Lattice& L, const CxPoly& ell, cx B0)
{
    Track tr{B0, std::sqrt(ell(B0))};
    const double bscale = std::max(1.0, L.scale());
    try {
        cx R = residual_at(n, L, tr.B, tr.C);
        for (int it = 0; it < 40; ++it) {
            if (std::abs(R) < 1e-13) break;
            const double h = 1e-6 * std::max(bscale, std::abs(tr.B));
            const cx Bx = tr.B + h, By = tr.B + cx(0.0, h);
            const cx Rx = residual_at(n, L, Bx, continue_sheet(ell, Bx, tr.C));
            const cx Ry = residual_at(n, L, By, continue_sheet(ell, By, tr.C));
            // Jacobian of (Re R, Im R) with respect to (Re B, Im B)
            const double j11 = (Rx - R).real() / h, j12 = (Ry - R).real() / h;
            const double j21 = (Rx - R).imag() / h, j22 = (Ry - R).imag() / h;
            const double det = j11 * j22 - j12 * j21;
            if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
            cx step((j22 * R.real() - j12 * R.imag()) / det, (-j21 * R.real() + j11 * R.imag()) / det);
            const double cap = 0.25 * bscale;
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            double lam = 1.0;
            bool moved = false;
            for (int k = 0; k < 12; ++k, lam *= 0.5) {
                const cx Bn = tr.B - lam * step;
                const cx Cn = continue_sheet(ell, Bn, tr.C);
                const cx Rn = residual_at(n, L, Bn, Cn);
                if (std::abs(Rn) < std::abs(R)) {
                    tr = {Bn, Cn};
                    R = Rn;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (!(std::abs(R) < 1e-8)) return std::nullopt;
        // a ramification value gives half-periods, which never validate
        DivisorList d = lift(n, tr.B, tr.C, L);
        const Membership x = is_in_Xn(d);
        if (!x.member || !disjoint_from_negation(d)) return std::nullopt;
        return TypeIIHit{SpectralPoint{n, tr.B, tr.C}, std::move(d), std::abs(R)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::vector<TypeIIHit> typeII_search(int n, const Lattice& L, const SweepSpec& sweep, unsigned threads)
{
    if (n < 1) throw DomainError("typeII_search: n >= 1");
    if (sweep.grid < 1) throw DomainError("typeII_search: grid >= 1");
    const double W = sweep.half_width > 0.0 ? sweep.half_width : 3.0 * (2.0 * n - 1.0) * n * std::max(1.0, L.scale());
    const CxPoly ell = ell_poly(n, L);
    const int g = sweep.grid;
    const std::size_t total = static_cast<std::size_t>(g) * static_cast<std::size_t>(g);
    std::vector<std::optional<TypeIIHit>> found(total);

    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    auto work = [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
            const int i = static_cast<int>(k / static_cast<std::size_t>(g));
            const int j = static_cast<int>(k % static_cast<std::size_t>(g));
            const cx B0 = sweep.center + cx(W * (2.0 * (i + 0.5) / g - 1.0), W * (2.0 * (j + 0.5) / g - 1.0));
            found[k] = newton_from(n, L, ell, B0);
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (total + threads - 1) / threads;
        for (std::size_t b = 0; b < total; b += chunk) pool.emplace_back(work, b, std::min(total, b + chunk));
    }

    std::vector<TypeIIHit> hits;
    for (auto& h : found) {
        if (!h) continue;
        bool dup = false;
        for (const auto& o : hits) dup = dup || std::abs(o.point.B - h->point.B) < 1e-6 * std::max(1.0, std::abs(o.point.B));
        if (!dup) hits.push_back(std::move(*h));
    }
    std::sort(hits.begin(), hits.end(), [](const TypeIIHit& a, const TypeIIHit& b) {
        return a.point.B.real() != b.point.B.real() ? a.point.B.real() < b.point.B.real() : a.point.B.imag() < b.point.B.imag();
    });
    return hits;
}

double u_eval(const DivisorList& d, double lambda, cx z)
{
    const cx f = f_dev(d, z);
    const cx fp = f_dev_prime(d, z);
    const double e = std::exp(2.0 * lambda);
    return std::log(8.0 * e) + 2.0 * std::log(std::abs(fp)) - 2.0 * std::log1p(e * std::norm(f));
}

double lambda_star(const DivisorList& d) { return -std::log(std::abs(f_dev(d, 0.0))); }

double integral_exp_u(const DivisorList& d, double lambda, int N)
{
    const Lattice& L = d.lattice();
    const double e = std::exp(2.0 * lambda);
    double acc = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const cx z = L.from_coords((i + 0.5) / N, (j + 0.5) / N);
            const cx f = f_dev(d, z);
            const cx fp = f_dev_prime(d, z);
            const double den = 1.0 + e * std::norm(f);
            acc += 8.0 * e * std::norm(fp) / (den * den);
        }
    return acc * std::abs(L.area()) / (static_cast<double>(N) * N);
}

} // namespace lame
