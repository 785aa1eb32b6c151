#include "oftt/scheme.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "oftt/ec_flux.hpp"
#include "oftt/eigensystem.hpp"
#include "oftt/noncons.hpp"
#include "oftt/reconstruction.hpp"

namespace oftt {

namespace {

// Per-row (or per-column) precomputed data: primitive states, entropy
// variables, and per interface the scaling matrix (with its transpose, which
// maps the reconstruction stencil into that interface's scaled space) and the
// dissipation speed. Interface j+1/2, between cells j and j+1, carries index j.
struct RowWorkspace {
    std::vector<Prim> prim;
    std::vector<Vec5> vvars;
    std::vector<Mat5> r_if, rt_if;
    std::vector<double> lam_if;

    void build(std::span<const Prim> cells, const GasParams& g, Axis d, bool with_scaling) {
        const std::size_t n = cells.size();
        prim.assign(cells.begin(), cells.end());
        vvars.resize(n);
        for (std::size_t j = 0; j < n; ++j) vvars[j] = entropy_vars(prim[j], g);
        if (!with_scaling) return;

        r_if.resize(n - 1);
        rt_if.resize(n - 1);
        lam_if.resize(n - 1);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const Prim& wl = prim[j];
            const Prim& wr = prim[j + 1];
            const Prim wm{0.5 * (wl.rho + wr.rho), 0.5 * (wl.vx + wr.vx),
                          0.5 * (wl.vy + wr.vy), 0.5 * (wl.pe + wr.pe), 0.5 * (wl.pi + wr.pi)};
            r_if[j] = dU_dW(wm, g) * scaled_eigenvectors_prim(wm, g, d);
            rt_if[j] = r_if[j].transpose();
            lam_if[j] = max_abs_speed_cons(wm, g, d);
        }
    }

    Vec5 flux(std::size_t left, const GasParams& g, const SchemeConfig& cfg, Axis d,
              double* qhat) const {
        Vec5 f;
        if (cfg.k == 2) {
            f = ec_flux(prim[left], prim[left + 1], g, d);
            if (qhat) *qhat = ec_entropy_flux(prim[left], prim[left + 1], g, d);
        } else {
            const std::span<const Prim, 4> four(prim.data() + left - 1, 4);
            f = ec_flux4(four, g, d);
            if (qhat) *qhat = ec_entropy_flux4(four, g, d);
        }
        if (cfg.ec_only) return f;

        const Vec5 jump = reconstruct_scaled_jump(vvars, left, rt_if[left], cfg.k);
        const Vec5 diss = r_if[left] * (lam_if[left] * jump);
        f -= 0.5 * diss;
        if (qhat) {
            const Vec5 v_bar = 0.5 * (vvars[left] + vvars[left + 1]);
            *qhat -= 0.5 * dot(v_bar, diss);
        }
        return f;
    }
};

}  // namespace

Vec5 interface_flux(std::span<const Prim> cells, std::size_t left, const GasParams& g,
                    const SchemeConfig& cfg, Axis d, double* qhat) {
    if (left + 1 >= cells.size()) throw std::invalid_argument("interface_flux: bad interface index");
    RowWorkspace ws;
    ws.build(cells, g, d, !cfg.ec_only);
    return ws.flux(left, g, cfg, d, qhat);
}

void compute_rhs(const Field& f, const GasParams& g, const SchemeConfig& cfg,
                 std::vector<Vec5>& dudt, double* entropy_flux_div) {
    const Grid& grid = f.grid();
    const int nx = grid.nx, ny = grid.ny, gw = kGhostWidth;
    const double dx = grid.dx(), dy = grid.dy();
    const int diff_order = cfg.k == 2 ? 2 : 4;
    const int diff_reach = diff_order / 2;
    const bool monitor = entropy_flux_div != nullptr;

    dudt.assign(static_cast<std::size_t>(nx) * ny, Vec5{});
    double ent_div = 0.0;

    // X sweep, one row at a time.
#pragma omp parallel for reduction(+ : ent_div) schedule(static)
    for (int j = 0; j < ny; ++j) {
        std::vector<Prim> cells(static_cast<std::size_t>(nx + 2 * gw));
        for (int ii = -gw; ii < nx + gw; ++ii)
            cells[static_cast<std::size_t>(ii + gw)] = cons_to_prim_unchecked(f.at(ii, j), g);
        RowWorkspace ws;
        ws.build(cells, g, Axis::X, !cfg.ec_only);

        std::vector<Vec5> flux(static_cast<std::size_t>(nx + 1));
        std::vector<double> qhat(monitor ? flux.size() : 0);
        for (int i = -1; i < nx; ++i)
            flux[static_cast<std::size_t>(i + 1)] =
                ws.flux(static_cast<std::size_t>(i + gw), g, cfg, Axis::X,
                        monitor ? &qhat[static_cast<std::size_t>(i + 1)] : nullptr);
        for (int i = 0; i < nx; ++i) {
            Vec5& out = dudt[static_cast<std::size_t>(j) * nx + i];
            out -= (1.0 / dx) *
                   (flux[static_cast<std::size_t>(i + 1)] - flux[static_cast<std::size_t>(i)]);
            if (monitor)
                ent_div += (qhat[static_cast<std::size_t>(i + 1)] -
                            qhat[static_cast<std::size_t>(i)]) /
                           dx;
        }
        // Non-conservative term, x part.
        for (int i = 0; i < nx; ++i) {
            std::array<Vec5, 5> win;
            for (int m = -diff_reach; m <= diff_reach; ++m)
                win[static_cast<std::size_t>(m + diff_reach)] = f.at(i + m, j).as_vec();
            const Vec5 dudx = central_diff(
                std::span<const Vec5>(win.data(), static_cast<std::size_t>(2 * diff_reach + 1)),
                diff_order, dx);
            dudt[static_cast<std::size_t>(j) * nx + i] -=
                noncons_matrix(ws.prim[static_cast<std::size_t>(i + gw)], g, Axis::X) * dudx;
        }
    }

    if (ny > 1) {
        // Y sweep, one column at a time.
#pragma omp parallel for reduction(+ : ent_div) schedule(static)
        for (int i = 0; i < nx; ++i) {
            std::vector<Prim> cells(static_cast<std::size_t>(ny + 2 * gw));
            for (int jj = -gw; jj < ny + gw; ++jj)
                cells[static_cast<std::size_t>(jj + gw)] = cons_to_prim_unchecked(f.at(i, jj), g);
            RowWorkspace ws;
            ws.build(cells, g, Axis::Y, !cfg.ec_only);

            std::vector<Vec5> flux(static_cast<std::size_t>(ny + 1));
            std::vector<double> qhat(monitor ? flux.size() : 0);
            for (int j = -1; j < ny; ++j)
                flux[static_cast<std::size_t>(j + 1)] =
                    ws.flux(static_cast<std::size_t>(j + gw), g, cfg, Axis::Y,
                            monitor ? &qhat[static_cast<std::size_t>(j + 1)] : nullptr);
            for (int j = 0; j < ny; ++j) {
                Vec5& out = dudt[static_cast<std::size_t>(j) * nx + i];
                out -= (1.0 / dy) *
                       (flux[static_cast<std::size_t>(j + 1)] - flux[static_cast<std::size_t>(j)]);
                if (monitor)
                    ent_div += (qhat[static_cast<std::size_t>(j + 1)] -
                                qhat[static_cast<std::size_t>(j)]) /
                               dy;
                // Non-conservative term, y part.
                std::array<Vec5, 5> win;
                for (int m = -diff_reach; m <= diff_reach; ++m)
                    win[static_cast<std::size_t>(m + diff_reach)] = f.at(i, j + m).as_vec();
                const Vec5 dudy = central_diff(
                    std::span<const Vec5>(win.data(), static_cast<std::size_t>(2 * diff_reach + 1)),
                    diff_order, dy);
                out -= noncons_matrix(ws.prim[static_cast<std::size_t>(j + gw)], g, Axis::Y) * dudy;
            }
        }
    }

    if (monitor) *entropy_flux_div = ent_div;
}

void check_admissible(const Field& f, const GasParams& g) {
    for (int j = 0; j < f.ny(); ++j)
        for (int i = 0; i < f.nx(); ++i) {
            const Cons& u = f.at(i, j);
            if (!(u.rho > 0.0)) throw AdmissibilityError("nonpositive density", i, j);
            const Prim w = cons_to_prim_unchecked(u, g);
            if (!is_admissible(w))
                throw AdmissibilityError("inadmissible state (pe=" + std::to_string(w.pe) +
                                             ", pi=" + std::to_string(w.pi) + ")",
                                         i, j);
        }
}

}  // namespace oftt
