#include "oftt/reconstruction.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oftt {

double minmod(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

namespace {

// Divided difference of cell values l..r at unit spacing.
double divided_diff(std::span<const double> s, int l, int r) {
    if (l == r) return s[static_cast<std::size_t>(l)];
    return (divided_diff(s, l + 1, r) - divided_diff(s, l, r - 1)) / static_cast<double>(r - l);
}

}  // namespace

int eno_select_stencil(std::span<const double> samples, int degree, int cell_index) {
    const int n = static_cast<int>(samples.size());
    if (degree < 1 || cell_index < 0 || cell_index >= n)
        throw std::invalid_argument("eno stencil: bad degree or cell index");
    if (n < degree + 1) throw std::invalid_argument("eno stencil: too few samples");

    // Adaptive stencil of degree+1 cells, grown towards the smoother side as
    // measured by divided differences of the cell values.
    int lo = cell_index, hi = cell_index;
    for (int step = 0; step < degree; ++step) {
        const bool can_left = lo > 0;
        const bool can_right = hi < n - 1;
        bool take_left;
        if (can_left && can_right) {
            take_left = std::abs(divided_diff(samples, lo - 1, hi)) <=
                        std::abs(divided_diff(samples, lo, hi + 1));
        } else {
            take_left = can_left;
        }
        if (take_left)
            --lo;
        else
            ++hi;
    }
    return lo;
}

double reconstruct_on_stencil(std::span<const double> samples, int lo, int degree, int cell_index,
                              InterfaceSide side) {
    const int hi = lo + degree;
    // Reconstruct through the primitive function: cell m spans [m, m+1], so
    // P(j) = sum of cells below j interpolated at the stencil's interface
    // nodes lo..hi+1, and the cell polynomial is P'. Only divided differences
    // of P relative to P(lo) matter, so the sum starts at lo.
    const int m = hi - lo + 1;
    std::array<double, 8> nodes{}, prim{};
    prim[0] = 0.0;
    for (int j = 0; j < m; ++j) {
        nodes[static_cast<std::size_t>(j)] = lo + j;
        prim[static_cast<std::size_t>(j + 1)] =
            prim[static_cast<std::size_t>(j)] + samples[static_cast<std::size_t>(lo + j)];
    }
    nodes[static_cast<std::size_t>(m)] = lo + m;

    // Newton divided differences of the primitive on m+1 nodes.
    std::array<double, 8> dd = prim;
    for (int lvl = 1; lvl <= m; ++lvl)
        for (int j = m; j >= lvl; --j)
            dd[static_cast<std::size_t>(j)] =
                (dd[static_cast<std::size_t>(j)] - dd[static_cast<std::size_t>(j - 1)]) /
                static_cast<double>(lvl);

    // Derivative of the Newton-form interpolant at the requested interface.
    const double x = cell_index + (side == InterfaceSide::Right ? 1.0 : 0.0);
    double value = 0.0;
    for (int kk = 1; kk <= m; ++kk) {
        // d/dx prod_{l<kk} (x - nodes[l]), expanded as a sum of partial products.
        double deriv = 0.0;
        for (int skip = 0; skip < kk; ++skip) {
            double term = 1.0;
            for (int l = 0; l < kk; ++l)
                if (l != skip) term *= x - nodes[static_cast<std::size_t>(l)];
            deriv += term;
        }
        value += dd[static_cast<std::size_t>(kk)] * deriv;
    }
    return value;
}

double eno_reconstruct(std::span<const double> samples, int degree, int cell_index,
                       InterfaceSide side) {
    const int lo = eno_select_stencil(samples, degree, cell_index);
    return reconstruct_on_stencil(samples, lo, degree, cell_index, side);
}

Vec5 reconstruct_scaled_jump(std::span<const Vec5> vvars, std::size_t left,
                             const Mat5& r_tilde_transpose, int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("reconstruct_scaled_jump: k must be 2, 3 or 4");
    // Window of cells whose scaled values any stencil of this interface can
    // touch: `reach` cells left of the interface's left cell and `reach`
    // right of its right cell.
    const std::size_t reach = static_cast<std::size_t>(k == 2 ? 1 : k - 1);
    if (left < reach || left + 1 + reach >= vvars.size())
        throw std::invalid_argument("reconstruct_scaled_jump: stencil too narrow");

    std::array<Vec5, 8> w{};
    const std::size_t win = 2 * reach + 2;
    const std::size_t base = left - reach;
    for (std::size_t j = 0; j < win; ++j) w[j] = r_tilde_transpose * vvars[base + j];
    const std::size_t c = reach;  // local index of the interface's left cell

    Vec5 jump{};
    if (k == 2) {
        for (int m = 0; m < 5; ++m) {
            const double wl = w[c][m], wr = w[c + 1][m];
            const double dl = wl - w[c - 1][m], dc = wr - wl, dr = w[c + 2][m] - wr;
            const double slope_l = minmod(dl, dc);
            const double slope_r = minmod(dc, dr);
            jump[m] = (wr - 0.5 * slope_r) - (wl + 0.5 * slope_l);
        }
        return jump;
    }

    const int degree = k - 1;
    std::array<double, 8> samples{};
    for (int m = 0; m < 5; ++m) {
        for (std::size_t j = 0; j < win; ++j) samples[j] = w[j][m];
        const std::span<const double> s(samples.data(), win);
        const int lo_l = eno_select_stencil(s, degree, static_cast<int>(c));
        const int lo_r = eno_select_stencil(s, degree, static_cast<int>(c + 1));
        const double trace_l =
            reconstruct_on_stencil(s, lo_l, degree, static_cast<int>(c), InterfaceSide::Right);
        const double trace_r =
            reconstruct_on_stencil(s, lo_r, degree, static_cast<int>(c + 1), InterfaceSide::Left);
        jump[m] = trace_r - trace_l;
    }
    return jump;
}

}  // namespace oftt
