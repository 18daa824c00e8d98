#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lame/lattice.hpp"

namespace lame {

// zeta(z) - eta_R(z); doubly periodic and odd.
cx hecke_form(cx z, const Lattice& L);

// Zero-mean Green's function of the flat torus; real-valued.
double green(cx z, const Lattice& L);
// dG/dz = -(zeta(z) - eta_R(z)) / (4 pi)
cx green_grad(cx z, const Lattice& L);

struct CriticalSet {
    std::vector<cx> points;  // canonical representatives; half-periods first
    int count = 0;
    std::optional<std::pair<cx, cx>> extra_pair;
    bool near_degenerate = false;
    double max_residual = 0.0;  // max |dG/dz| over reported points
};

// Newton-polished zeros of dG/dz from a grid x grid sweep of the fundamental
// domain. Threads share no mutable state; the result does not depend on the
// number of threads.
CriticalSet critical_points(const Lattice& L, int grid = 32, unsigned threads = 0);

} // namespace lame
