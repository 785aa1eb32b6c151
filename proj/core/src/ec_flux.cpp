#include "oftt/ec_flux.hpp"

#include <cmath>
#include <stdexcept>

namespace oftt {

double log_mean(double a_l, double a_r) {
    if (!(a_l > 0.0) || !(a_r > 0.0))
        throw std::domain_error("log_mean: arguments must be positive");
    const double zeta = a_l / a_r;
    if (std::abs(zeta - 1.0) < 1e-2) {
        // (a_r - a_l)/ln(a_r/a_l) = (a_l + a_r)/(2 F(u)), u = f^2, f = (zeta-1)/(zeta+1),
        // F(u) = 1 + u/3 + u^2/5 + u^3/7 + ...
        const double f = (zeta - 1.0) / (zeta + 1.0);
        const double u = f * f;
        const double F = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0)));
        return (a_l + a_r) / (2.0 * F);
    }
    return (a_r - a_l) / std::log(a_r / a_l);
}

namespace {

struct PairAverages {
    double rho_ln, rho_bar;
    double vx_bar, vy_bar, v2_bar;
    double be_bar, be_ln, bi_ln;
};

PairAverages pair_averages(const Prim& wl, const Prim& wr) {
    const double be_l = wl.rho / wl.pe, be_r = wr.rho / wr.pe;
    const double bi_l = wl.rho / wl.pi, bi_r = wr.rho / wr.pi;
    PairAverages a;
    a.rho_ln = log_mean(wl.rho, wr.rho);
    a.rho_bar = 0.5 * (wl.rho + wr.rho);
    a.vx_bar = 0.5 * (wl.vx + wr.vx);
    a.vy_bar = 0.5 * (wl.vy + wr.vy);
    a.v2_bar = 0.5 * (wl.vx * wl.vx + wl.vy * wl.vy + wr.vx * wr.vx + wr.vy * wr.vy);
    a.be_bar = 0.5 * (be_l + be_r);
    a.be_ln = log_mean(be_l, be_r);
    a.bi_ln = log_mean(bi_l, bi_r);
    return a;
}

}  // namespace

Vec5 ec_flux(const Prim& wl, const Prim& wr, const GasParams& g, Axis d) {
    require_admissible(wl);
    require_admissible(wr);
    const PairAverages a = pair_averages(wl, wr);

    const double vd_bar = d == Axis::X ? a.vx_bar : a.vy_bar;
    Vec5 f;
    f[0] = a.rho_ln * vd_bar;
    const double pressure_term = 2.0 * a.rho_bar / a.be_bar;
    if (d == Axis::X) {
        f[1] = pressure_term + a.vx_bar * f[0];
        f[2] = a.vy_bar * f[0];
    } else {
        f[1] = a.vx_bar * f[0];
        f[2] = pressure_term + a.vy_bar * f[0];
    }
    f[4] = f[0] / a.bi_ln;
    f[3] = (1.0 / ((g.gamma_e - 1.0) * a.be_ln) - 0.5 * a.v2_bar) * f[0] +
           a.vx_bar * f[1] + a.vy_bar * f[2] + f[4] / (g.gamma_i - 1.0);
    return f;
}

Vec5 ec_flux4(std::span<const Prim, 4> w, const GasParams& g, Axis d) {
    const Vec5 inner = ec_flux(w[1], w[2], g, d);
    const Vec5 wide_l = ec_flux(w[0], w[2], g, d);
    const Vec5 wide_r = ec_flux(w[1], w[3], g, d);
    return (4.0 / 3.0) * inner - (1.0 / 6.0) * (wide_l + wide_r);
}

double ec_entropy_flux(const Prim& wl, const Prim& wr, const GasParams& g, Axis d) {
    const Vec5 v_bar = 0.5 * (entropy_vars(wl, g) + entropy_vars(wr, g));
    const double F_bar = 0.5 * (entropy_potential(wl, d) + entropy_potential(wr, d));
    return dot(v_bar, ec_flux(wl, wr, g, d)) - F_bar;
}

double ec_entropy_flux4(std::span<const Prim, 4> w, const GasParams& g, Axis d) {
    return (4.0 / 3.0) * ec_entropy_flux(w[1], w[2], g, d) -
           (1.0 / 6.0) * (ec_entropy_flux(w[0], w[2], g, d) + ec_entropy_flux(w[1], w[3], g, d));
}

}  // namespace oftt
