#include "oftt/noncons.hpp"

#include <stdexcept>

namespace oftt {

Mat5 noncons_matrix(const Prim& w, const GasParams& g, Axis d) {
    const double ge1 = g.gamma_e - 1.0;
    const double gi1 = g.gamma_i - 1.0;
    const double v2 = w.vx * w.vx + w.vy * w.vy;
    const double dp = (w.pi - w.pe) / w.rho;
    const double vd = velocity_component(w, d);

    // Row shared by the momentum component along d and (times v_d) the energy row.
    const Vec5 mom_row = {-0.5 * ge1 * v2, ge1 * w.vx, ge1 * w.vy, -ge1, ge1 / gi1 + 1.0};

    Mat5 c = Mat5::zero();
    const int mom = d == Axis::X ? 1 : 2;
    for (int col = 0; col < 5; ++col) {
        c(mom, col) = mom_row[col];
        c(3, col) = vd * mom_row[col];
    }
    // The (pi - pe)/rho contributions in the energy row.
    c(3, 0) -= dp * vd;
    c(3, mom) += dp;
    // Ion pressure row.
    c(4, 0) = -gi1 * w.pi * vd / w.rho;
    c(4, mom) = gi1 * w.pi / w.rho;
    return c;
}

Vec5 central_diff(std::span<const Vec5> window, int order, double h) {
    if (order != 2 && order != 4) throw std::invalid_argument("central_diff: order must be 2 or 4");
    if (window.size() < static_cast<std::size_t>(order + 1) || window.size() % 2 == 0)
        throw std::invalid_argument("central_diff: window too small or not centered");
    const std::size_t c = window.size() / 2;
    if (order == 2)
        return (1.0 / (2.0 * h)) * (window[c + 1] - window[c - 1]);
    return (1.0 / (12.0 * h)) *
           ((-1.0) * window[c + 2] + 8.0 * window[c + 1] - 8.0 * window[c - 1] + window[c - 2]);
}

Vec5 noncons_term(std::span<const Vec5> window_x, std::span<const Vec5> window_y,
                  const Prim& w_center, const GasParams& g, int order, double hx, double hy) {
    Vec5 out = noncons_matrix(w_center, g, Axis::X) * central_diff(window_x, order, hx);
    if (!window_y.empty())
        out += noncons_matrix(w_center, g, Axis::Y) * central_diff(window_y, order, hy);
    return out;
}

}  // namespace oftt
