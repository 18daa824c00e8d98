#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lame/cyclotomic.hpp"
#include "lame/lattice.hpp"
#include "lame/poly.hpp"
#include "lame/symbolic.hpp"

namespace lame {

// Unordered list of n nonzero points of C/L. Points are stored as canonical
// representatives (coordinates in [0,1)) sorted lexicographically by (s, t),
// so two lists describing the same divisor compare equal.
class DivisorList {
public:
    DivisorList(const Lattice& L, std::vector<cx> points);

    int n() const { return static_cast<int>(pts_.size()); }
    const std::vector<cx>& points() const { return pts_; }
    const Lattice& lattice() const { return L_; }
    std::vector<Coords> coords() const;

    DivisorList negated() const;
    // same unordered list up to tolerance in canonical coordinates (mod 1)
    bool same_as(const DivisorList& o, double tol) const;
    // distance between the two lists, matched in canonical order, mod 1
    double coord_distance(const DivisorList& o) const;

private:
    Lattice L_;
    std::vector<cx> pts_;
};

// Distance mod 1 between two canonical coordinate pairs.
double torus_distance(const Coords& a, const Coords& b);

struct Membership {
    bool member = false;
    double residual = 0.0;
    std::string violated;  // non-empty when a structural precondition fails
};

Membership is_in_Yn(const DivisorList& d);
Membership is_in_Xn(const DivisorList& d);

struct SpectralPoint {
    int n = 1;
    cx B;
    cx C;
};

// s_0..s_n at a numeric B
std::vector<cx> s_coeffs(int n, cx B, const Lattice& L);
// s_0..s_n as polynomials in B
std::vector<CxPoly> s_polys(int n, const Lattice& L);
// s_0..s_n with B, g2, g3 indeterminate
std::vector<SymPoly> s_symbolic(int n);

CxPoly ell_poly(int n, const Lattice& L);
SymPoly ell_symbolic(int n);
cx disc_ell(int n, const Lattice& L);

// Polynomial whose roots are wp(a_i) for the divisor over B (monic form).
CxPoly x_poly(int n, cx B, const Lattice& L);

// Inverse of wp: some a with wp(a) = x. Newton seeded from a coarse grid.
cx wp_inverse(cx x, const Lattice& L);

struct Fiber {
    SpectralPoint point;
    bool ramified = false;
    // two sheets ([a], [-a]); one entry at a ramification point
    std::vector<DivisorList> sheets;
};

// Divisor over (B, C) on the sheet selected by C.
DivisorList lift(int n, cx B, cx C, const Lattice& L);
Fiber fiber(int n, cx B, const Lattice& L);

struct InfinityTangent {
    int n = 2;
    std::vector<Rational> tau;  // tau_0..tau_n with tau_1 = 1
    std::vector<Rational> sbar;  // limiting X coefficients
    std::vector<cx> t;           // canonical: sum t_i = 1, sorted by (arg, |t|)
    double power_residual = 0.0;  // max_k |sum t_i^{2k+1}|, k = 1..n-1
    double min_abs_t = 0.0;
    double min_pair_sum = 0.0;   // min |t_i + t_j|, i < j
};

InfinityTangent infinity_tangent(int n);
// t-vector from roots of G in the given order, then canonicalized
std::vector<cx> tangent_from_roots(const std::vector<cx>& us);
std::vector<cx> canonicalize_tangent(std::vector<cx> t);

struct LinearSystemReport {
    int n = 0;
    int rank_A = 0;
    double kernel_angle = 0.0;    // between ker A_n and ker B_n
    double formula_angle = 0.0;   // between ker A_n and the closed-form kernel vector
    double minor_residual = 0.0;  // max relative error of the signed minors vs the closed form
    cx d_n;                       // determinant of the leading block times prod(x_k - x_n)
};

LinearSystemReport linear_system_equiv(const std::vector<cx>& xs);
// Same determinant in exact arithmetic.
Rational d_n_exact(const std::vector<Rational>& xs);
// x_i = zeta^i for a primitive n-th root of unity, computed in Q(zeta).
Cyclotomic d_n_roots_of_unity(int n);

} // namespace lame
