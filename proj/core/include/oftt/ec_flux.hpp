#ifndef OFTT_EC_FLUX_HPP
#define OFTT_EC_FLUX_HPP

#include <span>

#include "oftt/state.hpp"
#include "oftt/types.hpp"

namespace oftt {

// Logarithmic mean (a_r - a_l)/(ln a_r - ln a_l), with a series branch when
// the arguments are close. Requires positive inputs.
double log_mean(double a_l, double a_r);

// Second-order entropy-conservative two-point flux.
Vec5 ec_flux(const Prim& wl, const Prim& wr, const GasParams& g, Axis d);

// Fourth-order entropy-conservative flux for the interface between
// stencil[1] and stencil[2]; stencil holds four consecutive cell states.
Vec5 ec_flux4(std::span<const Prim, 4> stencil, const GasParams& g, Axis d);

// Two-point numerical entropy flux V_bar . f_tilde - F_bar paired with ec_flux.
double ec_entropy_flux(const Prim& wl, const Prim& wr, const GasParams& g, Axis d);

// Fourth-order numerical entropy flux paired with ec_flux4 (same affine
// combination of two-point entropy fluxes).
double ec_entropy_flux4(std::span<const Prim, 4> stencil, const GasParams& g, Axis d);

}  // namespace oftt

#endif
