#pragma once

#include <vector>

#include "lame/spectral.hpp"

namespace lame {

// (2n - 1) * sum wp(a_i)
cx B_of(const DivisorList& d);

// Hermite-Halphen ansatz e^{z sum zeta(a_i)} prod sigma(z - a_i) / sigma(z)^n.
// The overload taking raw points keeps the caller's representatives, which
// only changes w by a constant factor.
cx log_w_ansatz(const Lattice& L, const std::vector<cx>& a, cx z);
cx w_ansatz(const Lattice& L, const std::vector<cx>& a, cx z);
cx w_ansatz(const DivisorList& d, cx z);

struct LameResidual {
    double ode = 0.0;      // max |w'' - (n(n+1) wp + B) w| / |w| over the samples
    double yn = 0.0;       // residual of the Y_n equations
    bool in_yn = false;
};

// w'' by a 5-point central difference with step h.
LameResidual lame_residual(const DivisorList& d, const std::vector<cx>& samples, double h = 1e-4);
// Same, against a prescribed accessory parameter instead of B_of(d).
LameResidual lame_residual(const DivisorList& d, cx B, const std::vector<cx>& samples, double h = 1e-4);
// A few sample points kept away from 0 and from the points of d.
std::vector<cx> default_samples(const DivisorList& d, int count = 6);

// Character of the translation action on w_a: w_a(z + w) = chi(w) w_a(z).
cx monodromy(const DivisorList& d, long m, long n);
cx monodromy(const DivisorList& d, cx omega);

// Developing map (-1)^n e^{2z sum zeta(a_i)} prod sigma(z - a_i)/sigma(z + a_i); f(0) = 1.
cx f_dev(const DivisorList& d, cx z);
// f' = f * sum wp'(a_i)/(wp(z) - wp(a_i)), exact rather than differenced
cx f_dev_prime(const DivisorList& d, cx z);

// Order of vanishing of f' at 0 from the log-log slope between two radii.
int ord_zero_check(const DivisorList& d, double r1 = 1e-2, double r2 = 1e-3);

// Max over samples of |S(f)(z) + 2 (n(n+1) wp(z) + B)|, S by finite differences.
double schwarzian_residual(const DivisorList& d, const std::vector<cx>& samples, double h = 1e-3);

// sum dG/dz(p_i)
cx green_eq_residual(const DivisorList& d);

struct SweepSpec {
    cx center = 0.0;
    double half_width = 0.0;  // 0: chosen from the lattice scale
    int grid = 8;
};

struct TypeIIHit {
    SpectralPoint point;
    DivisorList divisor;
    double residual = 0.0;
};

// Zeros of B -> green_eq_residual(fiber(n, B)) along the spectral curve, each
// validated (X_n membership, [a] and [-a] disjoint, residual < 1e-8).
// Seeds are independent; the sweep runs on `threads` workers.
std::vector<TypeIIHit> typeII_search(int n, const Lattice& L, const SweepSpec& sweep = {}, unsigned threads = 0);

// log(8 e^{2 lambda} |f'|^2 / (1 + e^{2 lambda} |f|^2)^2)
double u_eval(const DivisorList& d, double lambda, cx z);
// -log|f(0)| for the normalization used by f_dev
double lambda_star(const DivisorList& d);
// midpoint rule for the integral of e^u over the torus on an N x N grid
double integral_exp_u(const DivisorList& d, double lambda, int N = 96);

} // namespace lame
