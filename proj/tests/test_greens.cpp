#include <doctest.h>

#include <numbers>

#include "lame/greens.hpp"
#include "lame/spectral.hpp"
#include "support.hpp"

using namespace lame;
using namespace lame::testing;

namespace {
const cx I(0.0, 1.0);
const cx hex = std::polar(1.0, std::numbers::pi / 3.0);
} // namespace

TEST_CASE("Green's function symmetries")
{
    Rng g(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Lattice L = random_lattice(g);
        const cx z = random_point(g, L);
        const double G = green(z, L);
        CHECK(std::abs(green(z + L.omega1(), L) - G) < 1e-9);
        CHECK(std::abs(green(z - L.omega2(), L) - G) < 1e-9);
        CHECK(std::abs(green(-z, L) - G) < 1e-9);
    }
}

TEST_CASE("Green's function has zero mean")
{
    const Lattice L(1.0, cx(0.2, 1.1));
    for (int N : {40, 80}) {
        double sum = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) sum += green(L.from_coords((i + 0.5) / N, (j + 0.5) / N), L);
        CHECK(std::abs(sum / (N * N)) < 1.0 / N);
    }
}

TEST_CASE("gradient matches a central difference")
{
    const Lattice L(1.0, cx(0.5, 1.0));
    Rng g(32);
    const double h = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
        const cx z = random_point(g, L, 0.15);
        const double gx = (green(z + h, L) - green(z - h, L)) / (2.0 * h);
        const double gy = (green(z + cx(0.0, h), L) - green(z - cx(0.0, h), L)) / (2.0 * h);
        // d/dz = (d/dx - i d/dy) / 2
        const cx fd = 0.5 * cx(gx, -gy);
        CHECK(std::abs(green_grad(z, L) - fd) < 1e-6);
    }
}

TEST_CASE("Hecke form is periodic, odd, and vanishes at half periods")
{
    Rng g(33);
    for (int trial = 0; trial < 30; ++trial) {
        const Lattice L = random_lattice(g);
        const cx z = random_point(g, L);
        const cx Z = hecke_form(z, L);
        CHECK(std::abs(hecke_form(z + L.omega1(), L) - Z) < 1e-9 * std::max(1.0, std::abs(Z)));
        CHECK(std::abs(hecke_form(z + L.omega2(), L) - Z) < 1e-9 * std::max(1.0, std::abs(Z)));
        CHECK(std::abs(hecke_form(-z, L) + Z) < 1e-9 * std::max(1.0, std::abs(Z)));
        for (const cx h : {L.omega1() / 2.0, L.omega2() / 2.0, (L.omega1() + L.omega2()) / 2.0})
            CHECK(std::abs(green_grad(h, L)) < 1e-10);
    }
}

TEST_CASE("critical points of the square and hexagonal tori")
{
    const auto sq = critical_points(Lattice(1.0, I));
    CHECK(sq.count == 3);
    CHECK(sq.points.size() == 3);
    CHECK_FALSE(sq.extra_pair.has_value());
    CHECK(sq.max_residual < 1e-10);

    const Lattice H(1.0, hex);
    const auto hx = critical_points(H);
    CHECK(hx.count == 5);
    REQUIRE(hx.extra_pair.has_value());
    CHECK(hx.max_residual < 1e-10);
    // the extra pair sits at the centroids (1 + tau)/3 and 2 (1 + tau)/3
    const Coords a = H.canonical_coords(hx.extra_pair->first);
    const Coords b = H.canonical_coords(hx.extra_pair->second);
    const double d1 = torus_distance(a, {1.0 / 3.0, 1.0 / 3.0}) + torus_distance(b, {2.0 / 3.0, 2.0 / 3.0});
    const double d2 = torus_distance(a, {2.0 / 3.0, 2.0 / 3.0}) + torus_distance(b, {1.0 / 3.0, 1.0 / 3.0});
    CHECK(std::min(d1, d2) < 1e-9);

    CHECK_THROWS_AS(critical_points(H, 16), DomainError);
}

TEST_CASE("critical point search is independent of thread count")
{
    const Lattice L(1.0, cx(0.45, 0.9));
    const auto one = critical_points(L, 32, 1);
    const auto many = critical_points(L, 32, 4);
    CHECK(one.count == many.count);
    REQUIRE(one.points.size() == many.points.size());
    for (std::size_t k = 0; k < one.points.size(); ++k) CHECK(one.points[k] == many.points[k]);
}
