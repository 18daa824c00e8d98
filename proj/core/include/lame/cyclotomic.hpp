#pragma once

#include <memory>

#include "lame/poly.hpp"

namespace lame {

// Element of Q(zeta_m) = Q[x]/Phi_m(x). Integer constants carry no modulus and
// pick one up from the other operand.
class Cyclotomic {
public:
    Cyclotomic(long c = 0) : v_(QPoly::constant(Rational(c))) {}  // NOLINT
    static Cyclotomic generator(int m);

    const QPoly& value() const { return v_; }
    bool is_rational() const { return v_.degree() <= 0; }
    Rational rational() const { return v_[0]; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.v_ == b.v_; }

private:
    Cyclotomic(QPoly v, std::shared_ptr<const QPoly> mod);
    static std::shared_ptr<const QPoly> pick(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic inverse() const;

    QPoly v_;
    std::shared_ptr<const QPoly> mod_;
};

// m-th cyclotomic polynomial
QPoly cyclotomic_poly(int m);

} // namespace lame
