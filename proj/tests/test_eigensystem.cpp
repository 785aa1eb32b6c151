#include <cmath>
#include <random>

#include "doctest.h"
#include "oftt/eigensystem.hpp"
#include "test_util.hpp"

using namespace oftt;
using oftt::testing::random_gas;
using oftt::testing::random_state;

namespace {

double max_abs(const Mat5& m) {
    double v = 0.0;
    for (double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

}  // namespace

TEST_CASE("scaled eigenvectors satisfy R R^T = dU/dV") {
    std::mt19937 rng(41);
    for (Axis d : {Axis::X, Axis::Y}) {
        for (int it = 0; it < 200; ++it) {
            const GasParams g = random_gas(rng);
            const Prim w = random_state(rng, 0.3, 3.0);
            const Mat5 r = scaled_eigenvectors(w, g, d).R_tilde;
            const Mat5 lhs = r * r.transpose();
            const Mat5 rhs = inverse(fd_dV_dU(w, g));
            CHECK(max_abs(lhs - rhs) <= 1e-6 * std::max(1.0, max_abs(rhs)));
        }
    }
}

TEST_CASE("columns are right eigenvectors of the flux Jacobian") {
    std::mt19937 rng(42);
    for (Axis d : {Axis::X, Axis::Y}) {
        for (int it = 0; it < 50; ++it) {
            const GasParams g = random_gas(rng);
            const Prim w = random_state(rng, 0.5, 2.0);
            const Mat5 r = dU_dW(w, g) * scaled_eigenvectors_prim(w, g, d);
            const Mat5 jac = fd_flux_jacobian(w, g, d);
            const double vd = velocity_component(w, d);
            const double cf = std::sqrt(2.0 * w.pe * (2.0 * g.gamma_e - 1.0) / w.rho);
            const double lam[5] = {vd - cf, vd, vd, vd, vd + cf};
            for (int col = 0; col < 5; ++col) {
                double resid = 0.0, norm = 0.0;
                for (int row = 0; row < 5; ++row) {
                    double jr = 0.0;
                    for (int k = 0; k < 5; ++k) jr += jac(row, k) * r(k, col);
                    resid = std::max(resid, std::abs(jr - lam[col] * r(row, col)));
                    norm = std::max(norm, std::abs(r(row, col)));
                }
                CHECK(resid <= 1e-5 * std::max(1.0, norm));
            }
        }
    }
}

TEST_CASE("x and y eigensystems coincide after swapping the velocity components") {
    std::mt19937 rng(43);
    for (int it = 0; it < 100; ++it) {
        const GasParams g = random_gas(rng);
        const Prim w = random_state(rng, 0.3, 3.0);
        const Prim sw{w.rho, w.vy, w.vx, w.pe, w.pi};
        const Mat5 ry = scaled_eigenvectors_prim(w, g, Axis::Y);
        const Mat5 rxs = scaled_eigenvectors_prim(sw, g, Axis::X);
        // Swapping rows vx <-> vy of the x matrix at the swapped state must
        // reproduce the y matrix.
        for (int row = 0; row < 5; ++row) {
            const int src = row == 1 ? 2 : row == 2 ? 1 : row;
            for (int col = 0; col < 5; ++col)
                CHECK(ry(row, col) == doctest::Approx(rxs(src, col)).epsilon(1e-13));
        }
    }
}

TEST_CASE("dissipation quadratic form is nonnegative") {
    std::mt19937 rng(44);
    for (int it = 0; it < 500; ++it) {
        const GasParams g = random_gas(rng);
        const Prim wl = random_state(rng, 0.2, 5.0);
        const Prim wr = random_state(rng, 0.2, 5.0);
        for (Axis d : {Axis::X, Axis::Y}) {
            const Prim wm{0.5 * (wl.rho + wr.rho), 0.5 * (wl.vx + wr.vx),
                          0.5 * (wl.vy + wr.vy), 0.5 * (wl.pe + wr.pe),
                          0.5 * (wl.pi + wr.pi)};
            const Vec5 dv = entropy_vars(wr, g) - entropy_vars(wl, g);
            const Mat5 rt = scaled_eigenvectors(wm, g, d).R_tilde.transpose();
            const Vec5 z = rt * dv;
            const double q = dot(dv, diffusion_apply(wl, wr, g, d, z));
            CHECK(q >= -1e-12 * std::max(1.0, dot(z, z)));
        }
    }
}

TEST_CASE("interface dissipation speed is consistent at equal states") {
    const GasParams g{1.4, 1.67};
    const Prim w{1.5, 0.8, -0.4, 1.1, 0.7};
    for (Axis d : {Axis::X, Axis::Y})
        CHECK(interface_lam_max(w, w, g, d) ==
              doctest::Approx(max_abs_speed_cons(w, g, d)).epsilon(1e-14));
}

TEST_CASE("symmetrizability defect vanishes exactly at pressure equilibrium") {
    const GasParams g{1.4, 1.4};
    const Prim weq{1.2, 0.6, -0.3, 0.9, 0.9};
    CHECK(max_abs(symmetrizability_defect(weq, g)) <= 5e-6);
    const Prim wneq{1.2, 0.6, -0.3, 0.9, 1.4};
    CHECK(max_abs(symmetrizability_defect(wneq, g)) > 1e-2);
}
