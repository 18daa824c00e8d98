#include <doctest.h>

#include <numbers>

#include "lame/hauptmodul.hpp"
#include "support.hpp"

using namespace lame;
using namespace lame::testing;

namespace {
const cx I(0.0, 1.0);
} // namespace

TEST_CASE("special values on the square torus")
{
    const DevMap4Pi f(I);
    CHECK(std::abs(f(0.5)) < 1e-9);
    CHECK(std::abs(f(I / 2.0) - 1.0) < 1e-9);
    CHECK(std::abs(f((1.0 + I) / 2.0) + I) < 1e-9);
    CHECK(std::abs(hauptmodul(I) - (std::sqrt(2.0) - 1.0)) < 1e-12);
}

TEST_CASE("special values and symmetries for random tau")
{
    Rng g(81);
    for (int trial = 0; trial < 10; ++trial) {
        const cx tau = random_tau(g);
        const DevMap4Pi f(tau);
        CHECK(std::abs(f(0.5)) < 1e-9);
        CHECK(std::abs(f(tau / 2.0) - 1.0) < 1e-9);
        CHECK(std::abs(f((1.0 + tau) / 2.0) + I) < 1e-9);
        const cx z = f.lattice().from_coords(uniform(g, -0.3, 0.3), uniform(g, -0.3, 0.3));
        CHECK(rel(f.sigma_form(z), f(z)) < 1e-10);
        CHECK(rel(f(-z), f(z)) < 1e-10);
        CHECK(std::abs(f(z + 1.0) + f(z)) < 1e-9 * std::max(1.0, std::abs(f(z))));
        CHECK(std::abs(f(z + tau) * f(z) - 1.0) < 1e-9);

        const cx h = hauptmodul(tau);
        for (const cx excluded : {cx(0.0), cx(1.0), cx(-1.0), I, -I}) CHECK(std::abs(h - excluded) > 1e-6);
        CHECK(std::abs(hauptmodul(tau + 1.0) - I * h) < 1e-9);
    }
    CHECK(std::abs(hauptmodul(cx(0.0, 20.0))) < 1e-3);
}

TEST_CASE("poles of the developing map")
{
    const cx tau(0.1, 1.2);
    const DevMap4Pi f(tau);
    CHECK_THROWS_AS(f(0.5 + tau), PoleError);
    double near = 1e300;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) near = std::min(near, std::abs(0.5 + tau + 2.0 * (static_cast<double>(m) + static_cast<double>(n) * tau)));
    CHECK(std::abs(f.pole_distance() - near) < 1e-12);
}

TEST_CASE("modular transformation laws")
{
    CHECK(transform_check(cx(0.2, 1.1), Transform::T) < 1e-8);
    CHECK(transform_check(I, Transform::S) < 1e-8);
    Rng g(82);
    for (int trial = 0; trial < 10; ++trial) {
        const cx tau = random_tau(g);
        CHECK(transform_check(tau, Transform::T) < 1e-8);
        CHECK(transform_check(tau, Transform::S) < 1e-8);
    }
    CHECK_THROWS_AS(transform_check(cx(0.3, -1.0), Transform::T), DomainError);
}

TEST_CASE("words in the generators")
{
    const auto w = word_check(cx(0.1, 1.2), cx(0.13, 0.07), "STSTST");
    CHECK(w.residual < 1e-9);
    CHECK(std::abs(w.tau_end - cx(0.1, 1.2)) < 1e-12);
    // (ST)^3 = -I acts trivially on f
    CHECK(std::abs(w.action[1]) < 1e-12);
    CHECK(std::abs(w.action[2]) < 1e-12);
    CHECK(std::abs(w.action[0] - w.action[3]) < 1e-12);
    CHECK(word_check(cx(0.3, 0.9), cx(0.05, 0.11), "TTTT").residual < 1e-9);
    CHECK(word_check(cx(-0.2, 1.4), cx(0.07, 0.02), "TSTTS").residual < 1e-9);
    CHECK_THROWS_AS(word_check(I, 0.1, "TX"), DomainError);
    CHECK(std::abs(act(mobius_of(Transform::T), 1.0) - I) < 1e-15);
}

TEST_CASE("power series arithmetic")
{
    const PowerSeries a(std::vector<cx>{1.0, 1.0, 0.0, 0.0});
    const PowerSeries b(std::vector<cx>{0.0, 2.0, 0.0, 0.0});
    const PowerSeries s = a * a;
    CHECK(s[2] == cx(1.0));
    CHECK((a + b)[1] == cx(3.0));
    // (1 + x) o (2x) = 1 + 2x
    const PowerSeries c = compose(a, b);
    CHECK(c[0] == cx(1.0));
    CHECK(c[1] == cx(2.0));
    CHECK(c[2] == cx(0.0));
    CHECK_THROWS_AS(compose(b, a), DomainError);
    CHECK(a(cx(0.5)) == cx(1.5));
}

TEST_CASE("Taylor coefficients in z")
{
    const cx tau(0.1, 1.05);
    const PowerSeries A = a_coeffs(tau, 8);
    CHECK(std::abs(A[0] - hauptmodul(tau)) < 1e-9);
    for (int k = 1; k <= 7; k += 2) CHECK(std::abs(A[k]) < 1e-9);
    const cx z(0.05, 0.03);
    CHECK(std::abs(A(z) - f4pi(z, tau)) < 1e-7);

    const PowerSeries P = a_coeffs(tau + 4.0, 8);
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(P[k] - A[k]) < 1e-8);

    // gamma = [[1, 0], [4, 1]] in Gamma(4)
    const cx t(-0.25, 0.25);
    const cx gt = t / (4.0 * t + 1.0);
    const PowerSeries X = a_coeffs(t, 8), Y = a_coeffs(gt, 8);
    const cx j = 4.0 * t + 1.0;
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(Y[k] - std::pow(j, k) * X[k]) < 1e-7);

    CHECK_THROWS_AS(a_coeffs(tau, 33), DomainError);
}
