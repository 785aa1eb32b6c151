#ifndef OFTT_DIAGNOSTICS_HPP
#define OFTT_DIAGNOSTICS_HPP

#include <vector>

#include "oftt/cases.hpp"
#include "oftt/grid.hpp"
#include "oftt/state.hpp"

namespace oftt {

// Index into the primitive tuple (rho, vx, vy, pe, pi).
enum class PrimComponent { Rho = 0, Vx, Vy, Pe, Pi };

double prim_component(const Prim& w, PrimComponent c);

// Mean absolute error against the exact solution of a smooth case:
// (1/N) sum_cells |w - w_exact|, i.e. the L1 norm divided by the domain
// measure.
double l1_error(const Field& f, const CaseSpec& spec, double t, PrimComponent c);

// log2(e_coarse / e_fine) for a refinement ratio of 2.
double convergence_order(double e_coarse, double e_fine);

// Total mathematical entropy sum_cells (-rho s) * dx * dy.
double total_entropy(const Field& f, const GasParams& g);

// One row of the entropy log. eq25_change is the fully discrete total entropy
// change over the step including the numerical entropy flux through the
// interfaces, which entropy stability bounds by zero.
struct EntropyRecord {
    int step = 0;
    double t = 0, dt = 0;
    double total_entropy = 0;
    double eq25_change = 0;
};

}  // namespace oftt

#endif
