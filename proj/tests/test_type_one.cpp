#include <doctest.h>

#include <numbers>

#include "lame/type_one.hpp"
#include "support.hpp"

using namespace lame;
using namespace lame::testing;

namespace {

const cx I(0.0, 1.0);
const cx hex = std::polar(1.0, std::numbers::pi / 3.0);
const SymPoly B = SymPoly::B(), g2 = SymPoly::g2(), g3 = SymPoly::g3();

Rational q(long a, long b = 1) { return Rational(a, b); }

// roots of z^2 + (e1 - e3)/2 z - mu, i.e. wp(a) - e2 in closed form
std::pair<cx, cx> n1_roots(const TypeIConstants& k)
{
    const cx root = std::sqrt((k.e3 - k.e1) * (k.e3 - k.e1) + 16.0 * (k.e1 - k.e2) * (k.e3 - k.e2));
    const cx base = 0.25 * (k.e3 - k.e1);
    return {base + 0.25 * root, base - 0.25 * root};
}

} // namespace

TEST_CASE("recursion polynomials in closed form")
{
    CHECK(p_symbolic(0) == B);
    CHECK(p_symbolic(1) == B * B - q(3, 4) * g2);
    CHECK(p_symbolic(2) == B * B * B - q(7) * g2 * B + q(20) * g3);
    for (int n = 0; n <= 6; ++n) {
        const SymPoly p = p_symbolic(n);
        CHECK(p.degree_in_B() == n + 1);
        CHECK(p.leading_in_B() == SymPoly(1));
        // every term has weight n + 1 in (B, g2, g3) = (1, 2, 3)
        for (const auto& [m, c] : p.terms()) CHECK(m[0] + 2 * m[1] + 3 * m[2] == n + 1);
    }
    CHECK_THROWS_AS(p_symbolic(-1), DomainError);
}

TEST_CASE("numeric recursion polynomials")
{
    const Lattice L(1.0, cx(0.3, 1.1));
    for (int n = 0; n <= 4; ++n) {
        const CxPoly a = p_poly(n, L), b = p_symbolic(n).in_B(L.g2(), L.g3());
        for (int k = 0; k <= n + 1; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10 * std::max(1.0, std::abs(b[k])));
    }
    // p_n(t^-2 B; tL) = t^{-2(n+1)} p_n(B; L)
    const Lattice M(2.0, 2.0 * cx(0.3, 1.1));
    for (int n = 1; n <= 4; ++n) {
        const CxPoly a = p_poly(n, L), b = p_poly(n, M);
        for (int k = 0; k <= n + 1; ++k) {
            const cx want = std::pow(2.0, -2.0 * (n + 1) + 2.0 * k) * a[k];
            CHECK(std::abs(b[k] - want) < 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("symbolic Laurent coefficients of wp")
{
    const auto c = wp_laurent_symbolic(5);
    CHECK(c[2] == q(1, 20) * g2);
    CHECK(c[3] == q(1, 28) * g3);
    CHECK(c[4] == q(1, 1200) * g2 * g2);
    const Lattice L(1.0, cx(-0.1, 1.2));
    const auto num = wp_laurent(L, 5);
    for (int k = 2; k <= 5; ++k) CHECK(rel(num[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)].eval(0.0, L.g2(), L.g3())) < 1e-12);
}

TEST_CASE("system constants")
{
    Rng g(61);
    for (int trial = 0; trial < 10; ++trial) {
        const Lattice L(1.0, random_tau(g));
        const auto k = typeI_constants(2, L);
        CHECK(rel(k.cs[0], -0.5 * (k.e1 - k.e3)) < 1e-12);
        CHECK(rel(k.cs[1], -0.5 * (k.e1 * k.e1 - k.e3 * k.e3)) < 1e-12);
        if (std::abs(k.e1 + k.e3) > 1e-3) CHECK(rel(k.cs[1] / k.cs[0], k.e1 + k.e3) < 1e-10);
        CHECK(rel(k.mu, 2.0 * k.e2 * k.e2 + k.e1 * k.e3) < 1e-12);
        // e_i of the doubled lattice at its half periods
        CHECK(rel(k.doubled.wp(L.omega1() / 2.0), k.e1) < 1e-12);
        CHECK(rel(k.doubled.wp(L.omega2()), k.e2) < 1e-12);
    }
}

TEST_CASE("solutions for n = 1 match the quadratic formula")
{
    for (const cx tau : {I, cx(0.3, 1.1), cx(-0.4, 0.95)}) {
        const Lattice L(1.0, tau);
        const auto k = typeI_constants(1, L);
        const auto sols = typeI_solve(1, L);
        REQUIRE(sols.size() == 2);
        const auto [r1, r2] = n1_roots(k);
        const cx a = sols[0].zs[0], b = sols[1].zs[0];
        const double d = std::min(std::abs(a - r1) + std::abs(b - r2), std::abs(a - r2) + std::abs(b - r1));
        CHECK(d < 1e-9 * std::max(1.0, L.scale()));
        for (const auto& s : sols) {
            CHECK(s.residual < 1e-10);
            // the point really has wp - e2 equal to z on the doubled lattice
            CHECK(rel(k.doubled.wp(s.points[0]) - k.e2, s.zs[0]) < 1e-9);
            CHECK(evenness_residual(k, s) < 1e-8);
        }
    }
}

TEST_CASE("collision of the n = 1 solutions")
{
    const Lattice H(1.0, hex);
    CHECK(std::abs(typeI_n1_discriminant(H)) < 1e-9 * H.scale() * H.scale());
    const cx j = j_invariant(Lattice(1.0, 2.0 * hex));
    CHECK(std::abs(j - 54000.0) < 1e-6 * 54000.0);
    CHECK(std::abs(j_invariant(Lattice(1.0, I)) - 1728.0) < 1e-8);
    CHECK(std::abs(typeI_n1_discriminant(Lattice(1.0, I))) > 1e-3);
}

TEST_CASE("three solutions for n = 2")
{
    const Lattice L(1.0, cx(0.3, 1.1));
    const auto k = typeI_constants(2, L);
    const auto sols = typeI_solve(2, L);
    CHECK(sols.size() == 3);
    for (const auto& s : sols) {
        CHECK(s.multiplicity == 1);
        CHECK(s.residual < 1e-8);
        CHECK(typeI_residual(k, s.zs, s.zts) == s.residual);
        CHECK(evenness_residual(k, s) < 1e-8);
    }
    CHECK_THROWS_AS(typeI_solve(3, L), DomainError);
}

TEST_CASE("evenness residual rejects a wrong candidate")
{
    const Lattice L(1.0, cx(0.3, 1.1));
    const auto k = typeI_constants(1, L);
    auto s = typeI_solve(1, L).at(0);
    s.points[0] += cx(0.05, 0.02);
    CHECK(evenness_residual(k, s) > 1e-3);
}

TEST_CASE("number of distinct roots of the recursion polynomial")
{
    CHECK(count_typeI(1, Lattice(1.0, I)) == 2);
    CHECK(count_typeI(2, Lattice(1.0, I)) == 3);
    CHECK(count_typeI(1, Lattice(1.0, hex)) == 1);
    for (int n = 1; n <= 4; ++n) CHECK(count_typeI(n, Lattice(1.0, cx(0.3, 1.1))) == n + 1);

    const auto rs = distinct_roots(from_roots({1.0, 1.0, 1.0, 2.0}), 1.0);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].second + rs[1].second == 4);
}
