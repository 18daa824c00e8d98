#pragma once

#include <array>
#include <map>
#include <string>

#include "lame/poly.hpp"

namespace lame {

// Polynomial in (B, g2, g3) with exact rational coefficients.
class SymPoly {
public:
    using Monomial = std::array<int, 3>;  // exponents of B, g2, g3

    SymPoly() = default;
    SymPoly(const Rational& c);  // NOLINT: constants convert implicitly
    SymPoly(long c) : SymPoly(Rational(c)) {}

    static SymPoly B() { return var(0); }
    static SymPoly g2() { return var(1); }
    static SymPoly g3() { return var(2); }

    const std::map<Monomial, Rational>& terms() const { return t_; }
    Rational coeff(int b, int i, int j) const;
    int degree_in_B() const;
    bool is_zero() const { return t_.empty(); }

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rational& s);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator-(SymPoly a) { return a *= Rational(-1); }
    friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
    friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.t_ == b.t_; }

    cx eval(cx b, cx g2, cx g3) const;
    // collapse to a polynomial in B with numeric g2, g3
    CxPoly in_B(cx g2, cx g3) const;
    // leading coefficient in B, itself a polynomial in g2, g3
    SymPoly leading_in_B() const;

    // e.g. "4/81*B^5 - 7/27*g2*B^3 + ..." (descending B-degree)
    std::string to_string() const;

private:
    static SymPoly var(int which);
    std::map<Monomial, Rational> t_;
};

} // namespace lame
