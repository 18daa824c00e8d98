#include <doctest.h>

#include <numbers>

#include "lame/lattice.hpp"
#include "support.hpp"

using namespace lame;
using namespace lame::testing;

namespace {
const cx I(0.0, 1.0);
const cx hex = std::polar(1.0, std::numbers::pi / 3.0);
} // namespace

TEST_CASE("invariants of the square and hexagonal tori")
{
    const Lattice sq(1.0, I);
    CHECK(std::abs(sq.g3()) < 1e-12);
    CHECK(std::abs(sq.g2()) > 1.0);
    // |eta1 i - eta2 - 2 pi i|
    CHECK(std::abs(sq.eta1() * I - sq.eta2() - cx(0.0, 2.0 * std::numbers::pi)) < 1e-10);

    const Lattice hx(1.0, hex);
    CHECK(std::abs(hx.g2()) < 1e-10);
    CHECK(std::abs(hx.g3()) > 1.0);
}

TEST_CASE("eta values are twice zeta at half periods")
{
    for (const cx tau : {I, hex, cx(0.31, 1.7)}) {
        const Lattice L(1.0, tau);
        CHECK(std::abs(L.eta1() - 2.0 * L.zeta(0.5)) < 1e-10);
        CHECK(std::abs(L.eta2() - 2.0 * L.zeta(tau / 2.0)) < 1e-10);
        CHECK(std::abs(L.eta_of(L.omega1()) - L.eta1()) < 1e-14);
        CHECK(std::abs(L.eta_of(L.omega1() + L.omega2()) - L.eta1() - L.eta2()) < 1e-12);
        CHECK(std::abs(L.eta_of(2.0 * L.omega2()) - 2.0 * L.eta2()) < 1e-12);
    }
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(Lattice(1.0, -I), OrientationError);
    CHECK_THROWS_AS(Lattice(1.0, 2.0), OrientationError);
    const Lattice L(1.0, I);
    CHECK_THROWS_AS(L.wp(0.0), PoleError);
    CHECK_THROWS_AS(L.zeta(1.0 + I), PoleError);
    CHECK_THROWS_AS(L.wp_prime(-I), PoleError);
    CHECK(std::abs(L.sigma(0.0)) == 0.0);
    CHECK_THROWS_AS(L.eta_of(cx(0.5, 0.0)), DomainError);
    const cx z(0.21, 0.37);
    CHECK_THROWS_AS(addition_residual(z, z, L), DomainError);
    CHECK_THROWS_AS(addition_residual(z, 1.0 - z, L), DomainError);
}

TEST_CASE("e_i are wp at half periods in the caller's labeling")
{
    Rng g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Lattice L = random_lattice(g);
        CHECK(rel(L.wp(L.omega1() / 2.0), L.e1()) < 1e-10);
        CHECK(rel(L.wp(L.omega2() / 2.0), L.e2()) < 1e-10);
        CHECK(rel(L.wp(L.omega3() / 2.0), L.e3()) < 1e-10);
        CHECK(std::abs(L.e1() + L.e2() + L.e3()) < 1e-10 * L.scale());
    }
}

TEST_CASE("wp agrees with a brute-force lattice sum")
{
    const Lattice L(1.0, I);
    const cx z(0.3, 0.4);
    CHECK(rel(L.wp(z), wp_lattice_sum(z, 1.0, I)) < 1e-9);

    Rng g(12);
    for (int trial = 0; trial < 10; ++trial) {
        const cx tau = random_tau(g);
        const Lattice M(1.0, tau);
        const cx u = M.from_coords(uniform(g, -0.5, 0.5), uniform(g, -0.5, 0.5));
        if (std::abs(u) < 0.05) continue;
        CHECK(rel(M.wp(u), wp_lattice_sum(u, 1.0, tau)) < 1e-9);
    }
}

TEST_CASE("g2 and g3 match the Eisenstein q-expansion")
{
    Rng g(13);
    for (int trial = 0; trial < 10; ++trial) {
        const cx tau = random_tau(g);
        const Lattice L(1.0, tau);
        const auto [G2, G3] = eisenstein_q(1.0, tau);
        CHECK(rel(L.g2(), 60.0 * G2) < 1e-10);
        CHECK(rel(L.g3(), 140.0 * G3) < 1e-10);
        CHECK(rel(eisenstein(L, 2), G2) < 1e-10);
    }
}

TEST_CASE("parity, periodicity and the differential equation")
{
    Rng g(14);
    for (int trial = 0; trial < 50; ++trial) {
        const Lattice L = random_lattice(g);
        const cx z = random_point(g, L);
        const double S = L.scale();
        CHECK(std::abs(L.wp(-z) - L.wp(z)) < 1e-9 * std::abs(L.wp(z)));
        CHECK(std::abs(L.zeta(-z) + L.zeta(z)) < 1e-9 * std::max(1.0, std::abs(L.zeta(z))));
        CHECK(std::abs(L.sigma(-z) + L.sigma(z)) < 1e-9 * std::abs(L.sigma(z)));
        for (const cx w : {L.omega1(), L.omega2()}) {
            CHECK(rel(L.wp(z + w), L.wp(z)) < 1e-9);
            CHECK(std::abs(L.zeta(z + w) - L.zeta(z) - L.eta_of(w)) < 1e-9 * std::max(1.0, std::abs(L.zeta(z))));
        }
        const cx P = L.wp(z), Pp = L.wp_prime(z);
        CHECK(std::abs(Pp * Pp - (4.0 * P * P * P - L.g2() * P - L.g3())) < 1e-8 * std::max(S * S * S, std::abs(Pp * Pp)));
        const auto all = L.all(z);
        CHECK(all.wp == P);
        CHECK(all.wp_prime == Pp);
    }
}

TEST_CASE("sigma transformation law")
{
    Rng g(15);
    for (int trial = 0; trial < 50; ++trial) {
        const Lattice L = random_lattice(g);
        const cx z = random_point(g, L);
        const long m = uniform_int(g, -2, 2), n = uniform_int(g, -2, 2);
        const cx w = static_cast<double>(m) * L.omega1() + static_cast<double>(n) * L.omega2();
        const cx expect = sigma_sign(m, n) * std::exp(L.eta_of(m, n) * (z + w / 2.0)) * L.sigma(z);
        CHECK(std::abs(L.sigma(z + w) - expect) < 1e-8 * std::abs(expect));
    }
}

TEST_CASE("zeta is the derivative of log sigma")
{
    Rng g(16);
    const double h = 1e-4;
    for (int trial = 0; trial < 20; ++trial) {
        const Lattice L = random_lattice(g);
        const cx z = random_point(g, L, 0.2);
        const cx d = (L.log_sigma(z + h) - L.log_sigma(z - h)) / (2.0 * h);
        CHECK(std::abs(d - L.zeta(z)) < 1e-6 * std::max(1.0, std::abs(L.zeta(z))));
    }
}

TEST_CASE("addition formula residual")
{
    Rng g(17);
    const Lattice L(1.0, I);
    for (int trial = 0; trial < 50; ++trial) {
        const cx z = random_point(g, L), u = random_point(g, L);
        if (!L.on_lattice(z - u, 0.05) && !L.on_lattice(z + u, 0.05)) CHECK(addition_residual(z, u, L) < 1e-9);
    }
}

TEST_CASE("Laurent coefficients of wp")
{
    const Lattice L(1.0, cx(0.2, 1.3));
    const auto c = wp_laurent(L, 6);
    CHECK(rel(c[2], L.g2() / 20.0) < 1e-12);
    CHECK(rel(c[3], L.g3() / 28.0) < 1e-12);
    const cx z(0.01, 0.02);
    cx series = 1.0 / (z * z);
    for (int k = 2; k <= 6; ++k) series += c[static_cast<std::size_t>(k)] * std::pow(z, 2 * k - 2);
    CHECK(rel(series, L.wp(z)) < 1e-12);
}

TEST_CASE("reduction returns quantities in the caller's basis")
{
    const Lattice a(1.0, cx(0.1, 1.2));
    const Lattice b(1.0, cx(3.1, 1.2));  // same lattice, unreduced basis
    CHECK(rel(a.g2(), b.g2()) < 1e-10);
    CHECK(rel(a.g3(), b.g3()) < 1e-10);
    CHECK(std::abs(b.eta2() - (a.eta2() + 3.0 * a.eta1())) < 1e-9);
    const cx z(0.37, 0.21);
    CHECK(rel(a.wp(z), b.wp(z)) < 1e-10);
    const Coords c = b.canonical_coords(z + 5.0 * b.omega2());
    CHECK(c.s >= 0.0);
    CHECK(c.s < 1.0);
    CHECK(c.t >= 0.0);
    CHECK(c.t < 1.0);
}
