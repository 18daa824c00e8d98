#pragma once

#include <limits>
#include <vector>

#include "lame/poly.hpp"

namespace lame {

// Sturm chains and sign-variation counts in exact rational arithmetic.
// Double inputs are converted exactly (every finite double is a rational).

struct SturmChain {
    std::vector<QPoly> polys;  // f_0 .. f_m
};

QPoly to_rational(const RealPoly& p);
// Real part of a numerically real polynomial. Coefficients below chop_rel
// times the largest are set to zero; a sizeable imaginary part is a DomainError.
QPoly to_rational(const CxPoly& p, double chop_rel = 1e-14);

Rational eval(const QPoly& p, const Rational& x);
QPoly derivative(const QPoly& p);
// monic gcd
QPoly gcd(QPoly a, QPoly b);

// f_0 = p, f_1 = p', f_{k+1} = -rem(f_{k-1}, f_k) down to the last nonzero remainder
SturmChain sturm_chain(const QPoly& p);
SturmChain sturm_chain(const RealPoly& p);
// f_0 = p, f_1 = p' / gcd(p, p'), then the same recursion. Coprime by
// construction, so it is a valid chain even when p has repeated roots.
SturmChain reduced_chain(const QPoly& p);

// conditions (i)-(ii) on (a, b]: last member has no zero there, and every
// consecutive triple satisfies f_{i-1} = q f_i - c f_{i+1} with c > 0
bool is_sturm_sequence(const SturmChain& c, double a, double b);

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
constexpr double pos_inf = std::numeric_limits<double>::infinity();

// Sign variations of (f_0(xi+), ..., f_m(xi+)); leading signs at +-infinity.
int sigma_count(const SturmChain& c, double xi);

// Number of distinct real roots in (a, b].
int count_roots(const QPoly& p, double a = neg_inf, double b = pos_inf);
int count_roots(const RealPoly& p, double a = neg_inf, double b = pos_inf);
int count_roots(const CxPoly& p, double a = neg_inf, double b = pos_inf);

// sigma(a) - sigma(b) for reduced_chain(p): odd-multiplicity roots in (a, b]
// counted with the local index of f_0 against f_1; even ones contribute 0.
int signed_count(const QPoly& p, double a = neg_inf, double b = pos_inf);
int signed_count(const RealPoly& p, double a = neg_inf, double b = pos_inf);

} // namespace lame
