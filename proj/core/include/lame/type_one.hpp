#pragma once

#include <vector>

#include "lame/lattice.hpp"
#include "lame/symbolic.hpp"

namespace lame {

// Monic polynomial in B of degree n+1 from the Brioschi-Halphen recursion; p_0 = B.
CxPoly p_poly(int n, const Lattice& L);
SymPoly p_symbolic(int n);
// leading coefficient of the unnormalized recursion output (before making it monic)
Rational p_normalizer(int n);

// Laurent coefficients of wp with g2, g3 indeterminate, index k as in wp_laurent.
std::vector<SymPoly> wp_laurent_symbolic(int kmax);

struct TypeIConstants {
    int n = 0;
    Lattice doubled;  // Z w1 + Z 2 w2
    cx e1, e2, e3;    // wp(w1/2), wp(w2), wp(w1/2 + w2) on the doubled lattice
    cx mu;            // (e1 - e2)(e3 - e2)
    // sum x_i^j - sum xt_i^j = cs[j-1] for x = wp(p_i), xt = wp(p_i + w2)
    std::vector<cx> cs;
    // the same system in z = x - e2; these are the constants paired with z zt = mu
    std::vector<cx> Cs;
};

TypeIConstants typeI_constants(int n, const Lattice& L);

struct TypeISolution {
    std::vector<cx> zs;   // wp(p_i) - e2
    std::vector<cx> zts;  // wp(p_i + w2) - e2
    std::vector<cx> points;  // p_i on the doubled lattice
    int multiplicity = 1;
    double residual = 0.0;
};

// Direct solver for n <= 2. Solutions are listed up to permutation of the p_i.
std::vector<TypeISolution> typeI_solve(int n, const Lattice& L);

// max of the power-sum and product equations at a candidate
double typeI_residual(const TypeIConstants& k, const std::vector<cx>& zs, const std::vector<cx>& zts);

// Taylor coefficients of g' through order 2n-1 at 0 for the point set
// {+-p_i, w1/2}, read off a contour; all vanish for a genuine solution.
// Returned relative to the size of g' on the contour.
double evenness_residual(const TypeIConstants& k, const TypeISolution& s);

// (e3 - e1)^2 + 16 (e1 - e2)(e3 - e2) of the doubled lattice; zero when the
// two n = 1 solutions collide
cx typeI_n1_discriminant(const Lattice& L);

// Distinct roots of p_n. Roots are grouped at 1e-7 times the lattice scale,
// and nearby groups are merged when the merged multiple root is consistent
// with the coefficients to working precision.
int count_typeI(int n, const Lattice& L);
std::vector<std::pair<cx, int>> distinct_roots(const CxPoly& p, double scale);

cx j_invariant(const Lattice& L);

} // namespace lame
