#include <cmath>

#include "doctest.h"
#include "oftt/cases.hpp"
#include "oftt/time_integrator.hpp"

using namespace oftt;

namespace {

// Scalar ODE adapter for the generic stepper.
struct ScalarOps {
    double (*f)(double);
    double rhs(double& u) const { return f(u); }
    void combine(double& dst, double a, const double& src, double b) const {
        dst = a * dst + b * src;
    }
    void add(double& dst, double c, double d) const { dst += c * d; }
};

double step_to(double u0, double t_final, int steps, int order, double (*f)(double)) {
    const double dt = t_final / steps;
    double u = u0;
    for (int s = 0; s < steps; ++s) u = ssp_rk_generic(u, ScalarOps{f}, dt, order);
    return u;
}

}  // namespace

TEST_CASE("stages reduce to the identity when the rhs vanishes") {
    auto zero = +[](double) { return 0.0; };
    for (int order : {2, 3, 4})
        CHECK(step_to(1.7320508, 1.0, 7, order, zero) ==
              doctest::Approx(1.7320508).epsilon(1e-13));
}

TEST_CASE("measured order on a nonlinear scalar ODE") {
    // u' = -u^2, u(0)=1, u(t) = 1/(1+t).
    auto f = +[](double u) { return -u * u; };
    const double exact = 1.0 / 3.0;
    for (int order : {2, 3, 4}) {
        const double e1 = std::abs(step_to(1.0, 2.0, 20, order, f) - exact);
        const double e2 = std::abs(step_to(1.0, 2.0, 40, order, f) - exact);
        const double p = std::log2(e1 / e2);
        CHECK(p == doctest::Approx(order).epsilon(0.1 / order));
    }
}

TEST_CASE("SSP coefficients form convex combinations") {
    for (int order : {2, 3}) {
        const RKScheme rk = RKScheme::make(order);
        for (const auto& row : rk.mu) {
            double s = 0.0;
            for (double m : row) s += m;
            CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    using namespace rk4;
    CHECK(a20 + a21 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a30 + a32 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a40 + a43 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b0 + b2 + b3 + b4 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("CFL step matches the hand-computed value on a uniform field") {
    const CaseSpec spec = case_spec("accuracy1d_I");
    Field f = init_case(spec, 32, 1);
    // Make the field uniform so the cell maximum is trivial.
    const Prim w{1.0, 1.0, 0.0, 2.0, 2.0};
    for (int i = -kGhostWidth; i < 32 + kGhostWidth; ++i)
        f.at(i, 0) = prim_to_cons(w, spec.gas);
    const double c_full =
        std::sqrt((spec.gas.gamma_e * w.pe + spec.gas.gamma_i * w.pi) / w.rho);
    const double c_cons =
        std::sqrt(2.0 * w.pe * (2.0 * spec.gas.gamma_e - 1.0) / w.rho);
    const double lam = std::abs(w.vx) + std::max(c_full, c_cons);
    const double dx = f.grid().dx();
    CHECK(cfl_dt(f, spec.gas, 0.475) == doctest::Approx(0.475 * dx / lam).epsilon(1e-13));
    CHECK(default_cfl(false) == 0.475);
    CHECK(default_cfl(true) == 0.3);
}
