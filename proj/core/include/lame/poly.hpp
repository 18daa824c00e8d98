#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lame/error.hpp"

namespace lame {

using cx = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial, coefficients stored from the constant term up.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(int deg, const T& v = T(1))
    {
        std::vector<T> c(static_cast<std::size_t>(deg) + 1, T(0));
        c.back() = v;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](int k) const
    {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : T(0);
    }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U>
    auto operator()(const U& x) const
    {
        using R = decltype(T(0) * x);
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s)
    {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Euclidean division over a field: a = q*b + r with deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<T> r = a.c_;
        const int db = b.degree();
        if (a.degree() < db) return {Polynomial{}, a};
        std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
        const T lead = b.c_.back();
        for (int k = a.degree(); k >= db; --k) {
            const T f = r[static_cast<std::size_t>(k)] / lead;
            q[static_cast<std::size_t>(k - db)] = f;
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(k)] = T(0);
        }
        r.resize(static_cast<std::size_t>(db));
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    Polynomial monic() const
    {
        if (is_zero()) return {};
        Polynomial p = *this;
        const T lead = c_.back();
        for (auto& v : p.c_) v = v / lead;
        return p;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using CxPoly = Polynomial<cx>;
using RealPoly = Polynomial<double>;
using QPoly = Polynomial<Rational>;

// Drops leading coefficients below rel * max|coeff|.
CxPoly chop(const CxPoly& p, double rel);

// All complex roots, with multiplicity, by simultaneous (Aberth) iteration and
// Newton polishing on the original polynomial.
std::vector<cx> roots(const CxPoly& p);

// Groups roots closer than `radius` and returns one representative (the
// cluster mean) per group, with its multiplicity.
std::vector<std::pair<cx, int>> cluster_roots(const std::vector<cx>& rs, double radius);

// Discriminant, Res(p, p') up to sign, from the roots of p. The resultant itself
// is a Sylvester determinant.
cx discriminant(const CxPoly& p);
cx resultant(const CxPoly& a, const CxPoly& b);

// Monic polynomial whose roots are the given values.
CxPoly from_roots(const std::vector<cx>& rs);

} // namespace lame
