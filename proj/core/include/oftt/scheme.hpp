#ifndef OFTT_SCHEME_HPP
#define OFTT_SCHEME_HPP

#include <span>
#include <vector>

#include "oftt/grid.hpp"
#include "oftt/state.hpp"
#include "oftt/types.hpp"

namespace oftt {

struct SchemeConfig {
    int k = 2;            // spatial order, 2..4
    bool ec_only = false; // disable the dissipation operator
};

// Entropy-stable interface flux between cells[left] and cells[left+1]:
// EC flux (two-point for k=2, fourth-order for k=3,4) minus half the
// Rusanov-type dissipation applied to the sign-stable reconstructed jump of
// scaled entropy variables. If qhat is non-null it receives the matching
// numerical entropy flux.
Vec5 interface_flux(std::span<const Prim> cells, std::size_t left, const GasParams& g,
                    const SchemeConfig& cfg, Axis d, double* qhat = nullptr);

// Semi-discrete right-hand side of the finite difference scheme on the
// interior cells, ghosts assumed filled. dudt is indexed j*nx + i. When
// entropy_flux_div is non-null it receives
// sum_cells [ (qhat_{i+1/2}-qhat_{i-1/2})/dx + (qhat_{j+1/2}-qhat_{j-1/2})/dy ].
void compute_rhs(const Field& f, const GasParams& g, const SchemeConfig& cfg,
                 std::vector<Vec5>& dudt, double* entropy_flux_div = nullptr);

// Throws AdmissibilityError with the offending cell index if any interior
// state has nonpositive density or recovered pressures.
void check_admissible(const Field& f, const GasParams& g);

}  // namespace oftt

#endif
