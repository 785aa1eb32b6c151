#ifndef OFTT_NONCONS_HPP
#define OFTT_NONCONS_HPP

#include <span>

#include "oftt/state.hpp"
#include "oftt/types.hpp"

namespace oftt {

// Coefficient matrix C_d of the non-conservative product. Satisfies
// V(W)^T C_d(W) = 0, so the product does not enter the entropy balance.
Mat5 noncons_matrix(const Prim& w, const GasParams& g, Axis d);

// Central difference of per-cell 5-vectors at the window center.
// order 2 expects a window of >= 3 samples, order 4 of >= 5, centered on the
// target cell (window.size() must be odd).
Vec5 central_diff(std::span<const Vec5> window, int order, double h);

// C_x(U) dU/dx + C_y(U) dU/dy at the center of the given windows. Pass an
// empty y-window for one-dimensional fields.
Vec5 noncons_term(std::span<const Vec5> window_x, std::span<const Vec5> window_y,
                  const Prim& w_center, const GasParams& g, int order, double hx, double hy);

}  // namespace oftt

#endif
