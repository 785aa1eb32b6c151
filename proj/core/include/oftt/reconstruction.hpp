#ifndef OFTT_RECONSTRUCTION_HPP
#define OFTT_RECONSTRUCTION_HPP

#include <span>

#include "oftt/state.hpp"
#include "oftt/types.hpp"

namespace oftt {

double minmod(double a, double b);

enum class InterfaceSide { Left, Right };

// Classic ENO reconstruction from cell values (unit cells, sample m on cell m).
// Returns the value of the adaptive-stencil reconstruction polynomial of the
// given degree for cell `cell_index` at its left or right interface. The
// adaptive stencil is clamped to the sample range; ties between candidate
// extensions prefer the left-biased stencil. Two neighboring cells that select
// the same stencil share the same polynomial, so their interface values agree
// exactly.
double eno_reconstruct(std::span<const double> samples, int degree, int cell_index,
                       InterfaceSide side);

// Sign-stable reconstructed jump of scaled entropy variables at the interface
// between cells `left` and `left+1` of a stencil of entropy-variable vectors.
// All stencil values are mapped into the scaled space of this one interface,
// w_j = R~^T v_j with R~ the interface scaling matrix, and the jump is the
// right cell's left-interface trace minus the left cell's right-interface
// trace of the scaled data. k=2 uses MinMod-limited slopes (needs cells
// left-1..left+2), k=3/4 ENO of degree 2/3 (needs left+1-k..left+k).
Vec5 reconstruct_scaled_jump(std::span<const Vec5> vvars, std::size_t left,
                             const Mat5& r_tilde_transpose, int k);

}  // namespace oftt

#endif
