#include "lame/greens.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "lame/spectral.hpp"

namespace lame {

namespace {

constexpr double pi = std::numbers::pi;

// d eta_R / dz and d eta_R / d zbar; eta_R is R-linear so these are constants
std::pair<cx, cx> eta_real_wirtinger(const Lattice& L)
{
    const cx w1 = L.omega1();
    const cx tau = L.tau();
    const cx I(0.0, 1.0);
    const cx dt_dz = 1.0 / (2.0 * I * w1 * tau.imag());
    const cx dt_dzb = -1.0 / (2.0 * I * std::conj(w1) * tau.imag());
    const cx ds_dz = 1.0 / (2.0 * w1) - tau.real() * dt_dz;
    const cx ds_dzb = 1.0 / (2.0 * std::conj(w1)) - tau.real() * dt_dzb;
    return {L.eta1() * ds_dz + L.eta2() * dt_dz, L.eta1() * ds_dzb + L.eta2() * dt_dzb};
}

struct SeedResult {
    bool converged = false;
    cx z;
    double best_norm = INFINITY;  // dimensionless |Z| * |w1| at the best iterate
    cx best_z;
};

SeedResult polish(cx z, const Lattice& L, cx eta_z, cx eta_zb)
{
    SeedResult r;
    const double unit = std::abs(L.omega1());
    const double cell = std::sqrt(std::abs(L.area()));
    double prev = INFINITY;
    for (int it = 0; it < 80; ++it) {
        cx Z, wp;
        try {
            const auto v = L.all(z);
            Z = v.zeta - L.eta_real(z);
            wp = v.wp;
        } catch (const PoleError&) {
            return r;
        }
        const double nz = std::abs(Z) * unit;
        if (nz < r.best_norm) {
            r.best_norm = nz;
            r.best_z = z;
        }
        const cx A = -wp - eta_z;
        const cx B = -eta_zb;
        const double det = std::norm(A) - std::norm(B);
        if (det == 0.0) return r;
        cx dz = (-Z * std::conj(A) + B * std::conj(Z)) / det;
        // keep steps inside roughly one cell; far jumps only re-seed elsewhere
        const double lim = 0.25 * cell;
        if (std::abs(dz) > lim) dz *= lim / std::abs(dz);
        z = L.centered(z + dz);
        if (std::abs(dz) < 1e-15 * cell || (nz < 1e-12 && nz >= prev)) break;
        prev = nz;
    }
    r.converged = r.best_norm < 1e-10;
    r.z = r.best_z;
    return r;
}

} // namespace

cx hecke_form(cx z, const Lattice& L)
{
    const cx zc = L.centered(z);
    return L.zeta(zc) - L.eta_real(zc);
}

double green(cx z, const Lattice& L)
{
    const cx zc = L.centered(z);
    const double log_delta = std::log(std::abs(L.delta())) / 12.0;
    const double quad = std::real(-zc * L.eta_real(zc) / 2.0);
    return -(log_delta + quad + std::real(L.log_sigma(zc))) / (2.0 * pi);
}

cx green_grad(cx z, const Lattice& L) { return -hecke_form(z, L) / (4.0 * pi); }

CriticalSet critical_points(const Lattice& L, int grid, unsigned threads)
{
    if (grid < 32) throw DomainError("critical_points: grid >= 32 required");
    const auto [eta_z, eta_zb] = eta_real_wirtinger(L);
    const std::size_t total = static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
    std::vector<SeedResult> results(total);

    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const int i = static_cast<int>(k / static_cast<std::size_t>(grid));
            const int j = static_cast<int>(k % static_cast<std::size_t>(grid));
            const cx seed = L.from_coords((i + 0.5) / grid, (j + 0.5) / grid);
            results[k] = polish(seed, L, eta_z, eta_zb);
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (total + threads - 1) / threads;
        for (std::size_t b = 0; b < total; b += chunk) pool.emplace_back(work, b, std::min(total, b + chunk));
    }

    // deduplicate mod the lattice, in seed order so the outcome is deterministic
    std::vector<cx> found;
    std::vector<Coords> found_c;
    for (const auto& r : results) {
        if (!r.converged) continue;
        const Coords c = L.canonical_coords(r.z);
        bool dup = false;
        for (const auto& f : found_c)
            if (torus_distance(c, f) < 1e-6) {
                dup = true;
                break;
            }
        if (!dup) {
            found.push_back(L.canonical(r.z));
            found_c.push_back(c);
        }
    }
    for (const auto& r : results) {
        if (r.converged || r.best_norm > 1e-8) continue;
        const Coords c = L.canonical_coords(r.best_z);
        bool near = false;
        for (const auto& f : found_c) near = near || torus_distance(c, f) < 1e-4;
        if (!near) throw AmbiguityError("critical_points: near-zero of the Hecke form that Newton could not confirm");
    }

    const Coords halves[3] = {{0.5, 0.0}, {0.0, 0.5}, {0.5, 0.5}};
    CriticalSet out;
    for (const auto& h : halves) out.points.push_back(L.from_coords(h.s, h.t));
    std::vector<cx> extra;
    for (std::size_t k = 0; k < found.size(); ++k) {
        double dh = INFINITY;
        for (const auto& h : halves) dh = std::min(dh, torus_distance(found_c[k], h));
        if (dh < 1e-6) continue;
        if (dh < 1e-5) {
            out.near_degenerate = true;
            continue;
        }
        extra.push_back(found[k]);
    }
    // the zero set is symmetric under z -> -z; make sure both members are present
    std::vector<cx> closed;
    for (const auto& p : extra) {
        for (const cx q : {p, L.canonical(-p)}) {
            bool dup = false;
            for (const auto& c : closed) dup = dup || torus_distance(L.canonical_coords(c), L.canonical_coords(q)) < 1e-6;
            if (!dup) closed.push_back(q);
        }
    }
    if (closed.size() > 2)
        throw AmbiguityError("critical_points: found " + std::to_string(3 + closed.size()) + " critical points; at most 5 can exist");
    std::sort(closed.begin(), closed.end(), [&](cx a, cx b) {
        const Coords ca = L.canonical_coords(a), cb = L.canonical_coords(b);
        return ca.s != cb.s ? ca.s < cb.s : ca.t < cb.t;
    });
    if (closed.size() == 2) out.extra_pair = std::make_pair(closed[0], closed[1]);
    out.points.insert(out.points.end(), closed.begin(), closed.end());
    out.count = static_cast<int>(out.points.size());
    for (const auto& p : out.points) out.max_residual = std::max(out.max_residual, std::abs(green_grad(p, L)));
    return out;
}

} // namespace lame
