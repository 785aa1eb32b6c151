#ifndef OFTT_EIGENSYSTEM_HPP
#define OFTT_EIGENSYSTEM_HPP

#include "oftt/state.hpp"
#include "oftt/types.hpp"

namespace oftt {

// Wave speeds (v_d, v_d, v_d, v_d - c, v_d + c) of the full quasilinear
// system, c = sqrt((gamma_e pe + gamma_i pi)/rho).
Vec5 wave_speeds_full(const Prim& w, const GasParams& g, Axis d);

// Wave speeds of the conservative-part flux Jacobian,
// c = sqrt(2 pe (2 gamma_e - 1)/rho).
Vec5 wave_speeds_cons(const Prim& w, const GasParams& g, Axis d);

double max_abs_speed_full(const Prim& w, const GasParams& g, Axis d);
double max_abs_speed_cons(const Prim& w, const GasParams& g, Axis d);

// Entropy-scaled right eigenvectors of the conservative-part Jacobian:
// R_tilde R_tilde^T = dU/dV.
struct ScaledEigs {
    Mat5 R_tilde;
    double lam_max;
};

ScaledEigs scaled_eigenvectors(const Prim& w, const GasParams& g, Axis d);

// Change-of-variables Jacobian d(rho, rho vx, rho vy, E, pi)/d(rho, vx, vy, pe, pi).
Mat5 dU_dW(const Prim& w, const GasParams& g);

// Scaled right-eigenvector matrix expressed in primitive variables; the
// conservative-variable matrix is dU_dW * this.
Mat5 scaled_eigenvectors_prim(const Prim& w, const GasParams& g, Axis d);

// Rusanov-type dissipation R_tilde * Lambda * z for a jump z already expressed
// in scaled coordinates. The eigensystem and Lambda = lam_max I are both
// evaluated at the arithmetic mean of wl and wr.
Vec5 diffusion_apply(const Prim& wl, const Prim& wr, const GasParams& g, Axis d,
                     const Vec5& scaled_jump);

// Interface dissipation coefficient used by diffusion_apply.
double interface_lam_max(const Prim& wl, const Prim& wr, const GasParams& g, Axis d);

// Diagnostic: H - H^T with H = (df_x/dU + C_x) dU/dV, both Jacobians computed
// by central finite differences. Nonzero whenever pe != pi.
Mat5 symmetrizability_defect(const Prim& w, const GasParams& g);

// Finite-difference Jacobians used by the defect diagnostic (also handy as
// oracles in tests).
Mat5 fd_flux_jacobian(const Prim& w, const GasParams& g, Axis d);
Mat5 fd_dV_dU(const Prim& w, const GasParams& g);

}  // namespace oftt

#endif
