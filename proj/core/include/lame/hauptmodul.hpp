#pragma once

#include <array>
#include <string>
#include <vector>

#include "lame/lattice.hpp"

namespace lame {

// Truncated power series sum_{k<=K} c_k x^k.
class PowerSeries {
public:
    PowerSeries(int K, char var = 'z') : c_(static_cast<std::size_t>(K) + 1, cx(0.0)), var_(var) {}
    PowerSeries(std::vector<cx> c, char var = 'z');

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    char variable() const { return var_; }
    const std::vector<cx>& coeffs() const { return c_; }
    cx operator[](int k) const { return k >= 0 && k <= truncation() ? c_[static_cast<std::size_t>(k)] : cx(0.0); }
    cx& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

    cx operator()(cx x) const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    // a(b(x)); requires b[0] == 0
    friend PowerSeries compose(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<cx> c_;
    char var_;
};

// Normalized developing map f(z; tau) on Z + Z tau for the unique solution
// at the lowest level; f(0) is a Hauptmodul of level 4.
class DevMap4Pi {
public:
    explicit DevMap4Pi(cx tau);

    cx tau() const { return tau_; }
    const Lattice& lattice() const { return L_; }

    // wp-quotient form; PoleError at z = +-(1/2 + tau) mod 2 Lambda
    cx operator()(cx z) const;
    // sigma-quotient form with the exp(eta(tau)(1 + tau)/4) prefactor
    cx sigma_form(cx z) const;
    cx at_zero() const { return A_; }
    // distance from 0 to the nearest pole
    double pole_distance() const;

private:
    cx tau_;
    Lattice L_;
    cx wq_, wqt_;  // wp(1/4), wp(1/4 + tau/2)
    cx A_;
};

cx f4pi(cx z, cx tau);
cx hauptmodul(cx tau);

enum class Transform { T, S };

// Max over sample points of the residual of
//   T: f(z; tau+1) = i f(z; tau)
//   S: f(-z/tau; -1/tau) = -(f(z; tau) - 1)/(f(z; tau) + 1)
// relative to max(1, |f|).
double transform_check(cx tau, Transform which);

using Mobius = std::array<cx, 4>;  // [[a, b], [c, d]] row-major

Mobius mobius_of(Transform which);
cx act(const Mobius& m, cx f);

struct WordReport {
    cx tau_end;
    cx z_end;
    Mobius action;  // f(z_end; tau_end) = action . f(z; tau)
    double residual = 0.0;
};

// Follow a word in {T, S} (applied left to right) from (z, tau), composing
// the Mobius actions of the two laws, and compare against direct evaluation.
WordReport word_check(cx tau, cx z, const std::string& word);

// a_0 .. a_K of f(z; tau) from a discrete contour integral. The radius is
// half the distance to the nearest pole; 256 samples.
PowerSeries a_coeffs(cx tau, int K);

} // namespace lame
