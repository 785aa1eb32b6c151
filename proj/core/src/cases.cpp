#include "oftt/cases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oftt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BoundarySet all_of(BcKind k) { return {k, k, k, k}; }

}  // namespace

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names = {
        "accuracy1d_I", "accuracy1d_II", "double_rarefaction", "sod",         "lax",
        "accuracy2d",   "riemann2d",     "shock_bubble",       "richtmyer_meshkov"};
    return names;
}

CaseSpec case_spec(const std::string& name) {
    CaseSpec c;
    c.name = name;
    if (name == "accuracy1d_I") {
        c.gas = {1.4, 1.4};
        c.t_final = 1.3;
        c.x0 = 0.0;
        c.x1 = kTwoPi;
        c.smooth = true;
        c.bcs = all_of(BcKind::Periodic);
        c.default_nx = 20;
    } else if (name == "accuracy1d_II") {
        c.gas = {5.0 / 3.0, 5.0 / 3.0};
        c.t_final = 1.0;
        c.x0 = 0.0;
        c.x1 = 2.0;
        c.smooth = true;
        c.bcs = all_of(BcKind::Periodic);
        c.default_nx = 40;
    } else if (name == "double_rarefaction") {
        c.gas = {1.4, 1.67};
        c.t_final = 2.0;
        c.x0 = -5.0;
        c.x1 = 5.0;
        c.bcs = all_of(BcKind::Neumann);
        c.default_nx = 2000;
    } else if (name == "sod") {
        c.gas = {1.4, 1.4};
        c.t_final = 2.0;
        c.x0 = -5.0;
        c.x1 = 5.0;
        c.bcs = all_of(BcKind::Neumann);
        c.default_nx = 2000;
    } else if (name == "lax") {
        c.gas = {1.4, 1.67};
        c.t_final = 1.4;
        c.x0 = -5.0;
        c.x1 = 5.0;
        c.bcs = all_of(BcKind::Neumann);
        c.default_nx = 2000;
    } else if (name == "accuracy2d") {
        c.gas = {1.4, 1.4};
        c.t_final = 1.3;
        c.x0 = 0.0;
        c.x1 = kTwoPi;
        c.y0 = 0.0;
        c.y1 = kTwoPi;
        c.two_dimensional = true;
        c.smooth = true;
        c.bcs = all_of(BcKind::Periodic);
        c.default_nx = 24;
        c.default_ny = 24;
    } else if (name == "riemann2d") {
        c.gas = {1.4, 1.4};
        c.t_final = 0.75;
        c.x0 = 0.0;
        c.x1 = 1.0;
        c.y0 = 0.0;
        c.y1 = 1.0;
        c.two_dimensional = true;
        c.bcs = all_of(BcKind::Neumann);
        c.default_nx = 400;
        c.default_ny = 400;
    } else if (name == "shock_bubble") {
        c.gas = {1.4, 1.4};
        c.t_final = 7.1571;
        c.x0 = 0.0;
        c.x1 = 6.5;
        c.y0 = 0.0;
        c.y1 = 0.89;
        c.two_dimensional = true;
        c.bcs = {BcKind::Dirichlet, BcKind::Dirichlet, BcKind::Reflective, BcKind::Reflective};
        c.default_nx = 400;
        c.default_ny = 144;
    } else if (name == "richtmyer_meshkov") {
        c.gas = {1.4, 1.67};
        c.t_final = 17.46;
        c.x0 = -12.0;
        c.x1 = 12.0;
        c.y0 = -12.0;
        c.y1 = 12.0;
        c.two_dimensional = true;
        c.bcs = all_of(BcKind::Neumann);
        c.default_nx = 800;
        c.default_ny = 800;
    } else {
        throw std::invalid_argument("unknown case: " + name);
    }
    return c;
}

Prim initial_state(const CaseSpec& spec, double x, double y) {
    const std::string& n = spec.name;
    if (n == "accuracy1d_I") return {1.0 + 0.2 * std::sin(x), 1.0, 0.0, 2.0, 2.0};
    if (n == "accuracy1d_II") {
        const double s = 0.1 * std::sin(std::numbers::pi * x);
        return {1.0 + s, 1.0, 0.0, 0.6 + s, 0.4 - s};
    }
    if (n == "double_rarefaction")
        return x <= 0.0 ? Prim{2.0, -1.0, 0.0, 0.6, 0.4} : Prim{2.0, 1.0, 0.0, 0.4, 0.6};
    if (n == "sod")
        return x <= 0.0 ? Prim{1.0, 0.0, 0.0, 0.4, 0.6} : Prim{0.125, 0.0, 0.0, 0.06, 0.04};
    if (n == "lax")
        return x <= 0.0 ? Prim{0.445, 0.689, 0.0, 1.764, 1.764}
                        : Prim{0.5, 0.0, 0.0, 0.2855, 0.2855};
    if (n == "accuracy2d") return {1.0 + 0.2 * std::sin(x + y), 0.5, 0.5, 2.0, 2.0};
    if (n == "riemann2d") {
        if (x > 0.8 && y > 0.8) return {1.5, 0.0, 0.0, 0.75, 0.75};
        if (x <= 0.8 && y > 0.8) return {0.5323, 1.206, 0.0, 0.15, 0.15};
        if (x <= 0.8 && y <= 0.8) return {0.138, 1.206, 1.206, 0.0145, 0.0145};
        return {0.5323, 0.0, 1.206, 0.15, 0.15};
    }
    if (n == "shock_bubble") {
        const double r2 = (x - 3.5) * (x - 3.5) + y * y;
        if (r2 < 0.25) return {0.1819, 0.0, 0.0, 0.220458, 0.220458};
        if (x < 4.5) return {1.0, 0.0, 0.0, 0.3571425, 0.3571425};
        return {1.3764, -0.3336, 0.0, 0.560643, 0.560643};
    }
    if (n == "richtmyer_meshkov") {
        const double r2 = x * x + y * y;
        const double theta = std::atan2(y, x);
        const double rc = 7.162 + 0.24 * std::cos(12.0 * theta);
        if (r2 < rc * rc) return {5.04, 0.0, 0.0, 0.6, 0.4};
        if (r2 < 7.5 * 7.5) return {1.0, 0.0, 0.0, 0.6, 0.4};
        return {1.479, -0.518 * std::cos(theta), -0.518 * std::sin(theta), 1.041, 0.788};
    }
    throw std::invalid_argument("unknown case: " + n);
}

Field init_case(const CaseSpec& spec, int nx, int ny) {
    if (nx <= 0 || ny <= 0) throw std::invalid_argument("init_case: bad resolution");
    if (!spec.two_dimensional && ny != 1)
        throw std::invalid_argument("init_case: " + spec.name + " is one-dimensional");
    Grid grid{nx, ny, spec.x0, spec.x1, spec.y0, spec.y1};
    Field f(grid, spec.bcs);
    const int g = kGhostWidth;
    const int jlo = ny > 1 ? -g : 0;
    const int jhi = ny > 1 ? ny + g : 1;
    for (int j = jlo; j < jhi; ++j)
        for (int i = -g; i < nx + g; ++i) {
            const Prim w = initial_state(spec, grid.x_center(i), grid.y_center(j));
            require_admissible(w);
            f.at(i, j) = prim_to_cons(w, spec.gas);
        }
    f.freeze_dirichlet_states();
    apply_boundary(f);
    return f;
}

Prim exact_solution(const CaseSpec& spec, double x, double y, double t) {
    if (spec.name == "accuracy1d_I") return {1.0 + 0.2 * std::sin(x - t), 1.0, 0.0, 2.0, 2.0};
    if (spec.name == "accuracy1d_II") return initial_state(spec, x - t, y);
    if (spec.name == "accuracy2d")
        return {1.0 + 0.2 * std::sin(x + y - t), 0.5, 0.5, 2.0, 2.0};
    throw std::invalid_argument("exact_solution: no closed form for " + spec.name);
}

}  // namespace oftt
