#include "oftt/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oftt/noncons.hpp"

namespace oftt {

namespace {

Vec5 wave_speeds(const Prim& w, Axis d, double c) {
    const double vd = velocity_component(w, d);
    return {vd, vd, vd, vd - c, vd + c};
}

}  // namespace

Vec5 wave_speeds_full(const Prim& w, const GasParams& g, Axis d) {
    return wave_speeds(w, d, std::sqrt((g.gamma_e * w.pe + g.gamma_i * w.pi) / w.rho));
}

Vec5 wave_speeds_cons(const Prim& w, const GasParams& g, Axis d) {
    return wave_speeds(w, d, std::sqrt(2.0 * w.pe * (2.0 * g.gamma_e - 1.0) / w.rho));
}

double max_abs_speed_full(const Prim& w, const GasParams& g, Axis d) {
    return std::abs(velocity_component(w, d)) +
           std::sqrt((g.gamma_e * w.pe + g.gamma_i * w.pi) / w.rho);
}

double max_abs_speed_cons(const Prim& w, const GasParams& g, Axis d) {
    return std::abs(velocity_component(w, d)) +
           std::sqrt(2.0 * w.pe * (2.0 * g.gamma_e - 1.0) / w.rho);
}

Mat5 dU_dW(const Prim& w, const GasParams& g) {
    Mat5 m = Mat5::zero();
    m(0, 0) = 1.0;
    m(1, 0) = w.vx;
    m(1, 1) = w.rho;
    m(2, 0) = w.vy;
    m(2, 2) = w.rho;
    m(3, 0) = 0.5 * (w.vx * w.vx + w.vy * w.vy);
    m(3, 1) = w.rho * w.vx;
    m(3, 2) = w.rho * w.vy;
    m(3, 3) = 1.0 / (g.gamma_e - 1.0);
    m(3, 4) = 1.0 / (g.gamma_i - 1.0);
    m(4, 4) = 1.0;
    return m;
}

Mat5 scaled_eigenvectors_prim(const Prim& w, const GasParams& g, Axis d) {
    const double ge = g.gamma_e, gi = g.gamma_i;
    const double rho = w.rho, pe = w.pe, pi = w.pi;
    const double tg = 2.0 * ge - 1.0;

    const double theta1 = std::sqrt((ge - 1.0) * (gi - 1.0) * tg);
    const double theta_sq =
        (2.0 * pi * rho * theta1 - pi * pi * (ge + gi - 2.0 * ge * gi) + rho * rho * (ge - 1.0)) /
        (rho * tg);
    if (!(theta_sq > 0.0))
        throw std::domain_error("scaled_eigenvectors: nonpositive scaling radicand");
    const double theta = std::sqrt(theta_sq);

    const double a = std::sqrt(rho / (4.0 * tg));            // density entry of acoustic columns
    const double b = std::sqrt(0.5 * pe) / rho;              // velocity entry of acoustic columns
    const double c = 0.5 * pe * std::sqrt(tg / rho);         // pe entry of acoustic columns
    const double e = 0.5 * pi * std::sqrt(1.0 / (tg * rho)); // pi entry of acoustic columns
    const double t22 = (pi * theta1 + rho * (ge - 1.0)) / (tg * theta);
    const double t24 = pi * (ge - 1.0) / (tg * theta);
    const double t44 = (pi * pi * (-gi + ge * (2.0 * gi - 1.0)) + pi * rho * theta1) /
                       (rho * tg * theta);

    // Columns ordered (v_d - c_f, v_d, v_d, v_d, v_d + c_f).
    Mat5 r = Mat5::zero();
    const int vel = d == Axis::X ? 1 : 2;
    const int shear = d == Axis::X ? 2 : 1;
    r(0, 0) = a;   r(0, 1) = t22; r(0, 3) = t24; r(0, 4) = a;
    r(vel, 0) = -b;                              r(vel, 4) = b;
    r(shear, 2) = std::sqrt(pe) / rho;
    r(3, 0) = c;                                 r(3, 4) = c;
    r(4, 0) = e;   r(4, 1) = t24; r(4, 3) = t44; r(4, 4) = e;
    return r;
}

ScaledEigs scaled_eigenvectors(const Prim& w, const GasParams& g, Axis d) {
    require_admissible(w);
    ScaledEigs out;
    out.R_tilde = dU_dW(w, g) * scaled_eigenvectors_prim(w, g, d);
    out.lam_max = max_abs_speed_cons(w, g, d);
    return out;
}

double interface_lam_max(const Prim& wl, const Prim& wr, const GasParams& g, Axis d) {
    const Prim wm{0.5 * (wl.rho + wr.rho), 0.5 * (wl.vx + wr.vx), 0.5 * (wl.vy + wr.vy),
                  0.5 * (wl.pe + wr.pe), 0.5 * (wl.pi + wr.pi)};
    return max_abs_speed_cons(wm, g, d);
}

Vec5 diffusion_apply(const Prim& wl, const Prim& wr, const GasParams& g, Axis d,
                     const Vec5& scaled_jump) {
    const Prim wm{0.5 * (wl.rho + wr.rho), 0.5 * (wl.vx + wr.vx), 0.5 * (wl.vy + wr.vy),
                  0.5 * (wl.pe + wr.pe), 0.5 * (wl.pi + wr.pi)};
    const ScaledEigs eigs = scaled_eigenvectors(wm, g, d);
    return eigs.R_tilde * (eigs.lam_max * scaled_jump);
}

namespace {

// Central difference step per conserved component, scaled by magnitude.
double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

}  // namespace

Mat5 fd_flux_jacobian(const Prim& w, const GasParams& g, Axis d) {
    const Cons u0 = prim_to_cons(w, g);
    Mat5 jac;
    for (int c = 0; c < 5; ++c) {
        Vec5 up = u0.as_vec(), um = u0.as_vec();
        const double h = fd_step(up[c]);
        up[c] += h;
        um[c] -= h;
        const Vec5 fp = physical_flux(cons_to_prim(Cons::from_vec(up), g), g, d);
        const Vec5 fm = physical_flux(cons_to_prim(Cons::from_vec(um), g), g, d);
        for (int r = 0; r < 5; ++r) jac(r, c) = (fp[r] - fm[r]) / (2.0 * h);
    }
    return jac;
}

Mat5 fd_dV_dU(const Prim& w, const GasParams& g) {
    const Cons u0 = prim_to_cons(w, g);
    Mat5 jac;
    for (int c = 0; c < 5; ++c) {
        Vec5 up = u0.as_vec(), um = u0.as_vec();
        const double h = fd_step(up[c]);
        up[c] += h;
        um[c] -= h;
        const Vec5 vp = entropy_vars(cons_to_prim(Cons::from_vec(up), g), g);
        const Vec5 vm = entropy_vars(cons_to_prim(Cons::from_vec(um), g), g);
        for (int r = 0; r < 5; ++r) jac(r, c) = (vp[r] - vm[r]) / (2.0 * h);
    }
    return jac;
}

Mat5 symmetrizability_defect(const Prim& w, const GasParams& g) {
    Mat5 sum = fd_flux_jacobian(w, g, Axis::X);
    const Mat5 c = noncons_matrix(w, g, Axis::X);
    for (std::size_t i = 0; i < 25; ++i) sum.a[i] += c.a[i];
    const Mat5 H = sum * inverse(fd_dV_dU(w, g));
    return H - H.transpose();
}

}  // namespace oftt
