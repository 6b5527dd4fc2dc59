#pragma once

#include "zwire/field.hpp"
#include "zwire/scattering.hpp"

namespace zwire {

// Tight-binding reference solver, independent of the Berry and transfer code.
// Sites y_n = n a on [0, L] with hopping 1/a^2 and onsite Zeeman term
// [h(y_n - a/4) + h(y_n + a/4)] / 2; the leads are matched with exact lattice
// Bloch modes at n <= 0 and n >= M. Flux normalization uses lattice group
// velocities 2 sin(k a) / a. The spacing is adjusted so that L / a is an integer.
ScatterResult fd_scattering(const PlanarField& field, double E, double a);

// Same with an explicit number of lattice cells M = L / a.
ScatterResult fd_scattering_cells(const PlanarField& field, double E, int cells);

}  // namespace zwire
