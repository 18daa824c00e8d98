#pragma once

#include <array>
#include <complex>
#include <vector>

#include "lame/poly.hpp"

namespace lame {

// Real coordinates of a point with respect to a lattice basis: z = s*w1 + t*w2.
struct Coords {
    double s = 0.0;
    double t = 0.0;
};

// A flat torus C/L given by a positively oriented basis (w1, w2).
//
// Evaluation runs on an internally reduced basis (tau moved into the standard
// fundamental domain) so the theta series converge fast for every input. All
// quantities reported through the accessors refer to the basis the caller
// supplied.
class Lattice {
public:
    Lattice(cx omega1, cx omega2);

    cx omega1() const { return w1_; }
    cx omega2() const { return w2_; }
    cx omega3() const { return -w1_ - w2_; }
    cx tau() const { return w2_ / w1_; }
    cx q() const;
    cx g2() const { return g2_; }
    cx g3() const { return g3_; }
    cx e1() const { return e_[0]; }
    cx e2() const { return e_[1]; }
    cx e3() const { return e_[2]; }
    const std::array<cx, 3>& es() const { return e_; }
    cx eta1() const { return eta1_; }
    cx eta2() const { return eta2_; }
    cx delta() const { return g2_ * g2_ * g2_ - 27.0 * g3_ * g3_; }
    // max |e_i|; the natural magnitude of wp-values and of B
    double scale() const { return scale_; }
    double area() const { return std::imag(std::conj(w1_) * w2_); }

    Coords coords(cx z) const;
    cx from_coords(double s, double t) const { return s * w1_ + t * w2_; }
    // representative with coordinates in [0,1)
    cx canonical(cx z) const;
    Coords canonical_coords(cx z) const;
    // representative with coordinates in [-1/2,1/2)
    cx centered(cx z) const;
    bool on_lattice(cx z, double tol = 1e-12) const;

    cx eta_of(long m, long n) const { return static_cast<double>(m) * eta1_ + static_cast<double>(n) * eta2_; }
    // throws DomainError if omega is not a lattice vector
    cx eta_of(cx omega) const;
    // R-linear extension of eta in lattice coordinates
    cx eta_real(cx z) const;

    cx wp(cx z) const;
    cx wp_prime(cx z) const;
    cx zeta(cx z) const;
    cx sigma(cx z) const;
    // principal-ish log of sigma; only exp(log_sigma) and its real part are meaningful
    cx log_sigma(cx z) const;

    // wp, wp' and zeta from one theta evaluation
    struct Values {
        cx wp, wp_prime, zeta;
    };
    Values all(cx z) const;

    // Basis vectors actually used for evaluation.
    cx reduced_omega1() const { return r1_; }
    cx reduced_omega2() const { return r2_; }

private:
    struct Theta {
        cx th;  // theta_1(v)
        cx l1;  // (log theta_1)'
        cx l2;  // (log theta_1)''
        cx l3;  // (log theta_1)'''
    };
    struct Split {
        cx z0;
        long m = 0, n = 0;  // z = z0 + m*r1 + n*r2
    };

    Split split(cx z) const;
    Theta theta(cx v) const;
    cx zeta_cell(cx z0) const;
    cx log_sigma_cell(cx z0) const;
    void check_pole(const Split& sp, const char* what) const;

    cx w1_, w2_;
    cx r1_, r2_, rtau_;
    // user basis in terms of the reduced one: w1 = a r1 + b r2, w2 = c r1 + d r2
    long a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    std::vector<cx> nome_terms_;  // 2 (-1)^k q^{(k+1/2)^2}, q = exp(i pi rtau)
    cx th1p0_;                    // theta_1'(0)
    cx reta1_, reta2_;
    cx g2_, g3_;
    std::array<cx, 3> e_{};
    cx eta1_, eta2_;
    double scale_ = 1.0;
};

// Free-function spellings of the evaluators.
inline cx wp(cx z, const Lattice& L) { return L.wp(z); }
inline cx wp_prime(cx z, const Lattice& L) { return L.wp_prime(z); }
inline cx zeta_w(cx z, const Lattice& L) { return L.zeta(z); }
inline cx sigma_w(cx z, const Lattice& L) { return L.sigma(z); }
inline cx eta_of(cx omega, const Lattice& L) { return L.eta_of(omega); }

// |wp'(u)/(wp(z)-wp(u)) - (zeta(z-u) - zeta(z+u) + 2 zeta(u))|
double addition_residual(cx z, cx u, const Lattice& L);

// Laurent coefficients of wp at 0: wp = z^-2 + sum_{k>=2} c_k z^{2k-2}; index k.
std::vector<cx> wp_laurent(const Lattice& L, int kmax);
// Eisenstein sums G_k = sum' w^{-2k}, k >= 2, from the Laurent coefficients.
cx eisenstein(const Lattice& L, int k);

// sigma(z+w) = sign * exp(eta(w)(z + w/2)) sigma(z) for w = m w1 + n w2
inline double sigma_sign(long m, long n) { return ((m + n + m * n) % 2 == 0) ? 1.0 : -1.0; }

} // namespace lame
