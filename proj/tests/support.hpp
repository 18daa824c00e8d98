#pragma once

// Shared generators and brute-force oracles for the test programs.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "lame/lattice.hpp"

namespace lame::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
inline int uniform_int(Rng& g, int a, int b) { return std::uniform_int_distribution<int>(a, b)(g); }

// tau in the standard fundamental domain, Im tau <= 2
inline cx random_tau(Rng& g)
{
    for (;;) {
        const cx t(uniform(g, -0.5, 0.5), uniform(g, 0.8, 2.0));
        if (std::abs(t) >= 1.0) return t;
    }
}

// a positively oriented but unreduced basis, to exercise the reduction
inline Lattice random_lattice(Rng& g)
{
    const cx tau = random_tau(g);
    const cx scale = std::polar(uniform(g, 0.5, 2.0), uniform(g, -3.0, 3.0));
    const int k = uniform_int(g, -2, 2);
    return Lattice(scale, scale * (tau + static_cast<double>(k)));
}

inline cx random_point(Rng& g, const Lattice& L, double margin = 0.05)
{
    return L.from_coords(uniform(g, margin, 1.0 - margin), uniform(g, margin, 1.0 - margin));
}

inline double rel(cx a, cx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// divisor sums sigma_p(n)
inline double divisor_sum(int n, int p)
{
    double s = 0.0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += std::pow(static_cast<double>(d), p);
    return s;
}

// G_2 and G_3 of Z w1 + Z w2 from the q-expansions of E_4 and E_6.
inline std::pair<cx, cx> eisenstein_q(cx w1, cx w2)
{
    const double pi = std::numbers::pi;
    const cx tau = w2 / w1;
    const cx q = std::exp(cx(0.0, 2.0 * pi) * tau);
    cx e4 = 1.0, e6 = 1.0, qn = 1.0;
    for (int n = 1; n < 60; ++n) {
        qn *= q;
        e4 += 240.0 * divisor_sum(n, 3) * qn;
        e6 -= 504.0 * divisor_sum(n, 5) * qn;
        if (std::abs(qn) < 1e-20) break;
    }
    return {std::pow(pi, 4) / 45.0 * e4 / std::pow(w1, 4), 2.0 * std::pow(pi, 6) / 945.0 * e6 / std::pow(w1, 6)};
}

// wp by direct summation over a (2N+1)^2 box. The z^2 and z^4 terms of each
// summand are removed (their sums converge slowly) and restored from the
// Eisenstein values above; what remains decays like |w|^-8.
inline cx wp_lattice_sum(cx z, cx w1, cx w2, int N = 40)
{
    const auto [G2, G3] = eisenstein_q(w1, w2);
    const cx z2 = z * z;
    cx acc = 1.0 / z2 + 3.0 * G2 * z2 + 5.0 * G3 * z2 * z2;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            const cx w = static_cast<double>(m) * w1 + static_cast<double>(n) * w2;
            const cx iw2 = 1.0 / (w * w);
            const cx d = z - w;
            acc += 1.0 / (d * d) - iw2 - 3.0 * z2 * iw2 * iw2 - 5.0 * z2 * z2 * iw2 * iw2 * iw2;
        }
    return acc;
}

} // namespace lame::testing
