#include "oftt/grid.hpp"

#include <stdexcept>

namespace oftt {

Field::Field(const Grid& grid, BoundarySet bcs) : grid_(grid), bcs_(bcs) {
    if (grid.nx <= 0 || grid.ny <= 0) throw std::invalid_argument("Field: nonpositive cell count");
    const bool px = bcs.left == BcKind::Periodic, qx = bcs.right == BcKind::Periodic;
    const bool py = bcs.bottom == BcKind::Periodic, qy = bcs.top == BcKind::Periodic;
    if (px != qx || (grid.ny > 1 && py != qy))
        throw std::invalid_argument("Field: periodic boundaries must come in matching pairs");
    stride_ = static_cast<std::size_t>(grid.nx + 2 * kGhostWidth);
    data_.assign(stride_ * static_cast<std::size_t>(grid.ny + 2 * kGhostWidth), Cons{});
}

void Field::freeze_dirichlet_states() { dirichlet_ = data_; }

void Field::axpy(double a, double b, const Field& other) {
    for (int j = 0; j < ny(); ++j)
        for (int i = 0; i < nx(); ++i) {
            Cons& u = at(i, j);
            const Cons& v = other.at(i, j);
            u.rho = a * u.rho + b * v.rho;
            u.mx = a * u.mx + b * v.mx;
            u.my = a * u.my + b * v.my;
            u.E = a * u.E + b * v.E;
            u.pi = a * u.pi + b * v.pi;
        }
}

void Field::add_scaled(double c, const std::vector<Vec5>& rhs) {
    std::size_t m = 0;
    for (int j = 0; j < ny(); ++j)
        for (int i = 0; i < nx(); ++i, ++m) {
            Cons& u = at(i, j);
            u.rho += c * rhs[m][0];
            u.mx += c * rhs[m][1];
            u.my += c * rhs[m][2];
            u.E += c * rhs[m][3];
            u.pi += c * rhs[m][4];
        }
}

namespace {

Cons reflect(const Cons& u, Axis normal) {
    Cons r = u;
    if (normal == Axis::X)
        r.mx = -r.mx;
    else
        r.my = -r.my;
    return r;
}

}  // namespace

void apply_boundary(Field& f) {
    const int nx = f.nx(), ny = f.ny(), g = kGhostWidth;
    const BoundarySet& bc = f.bcs();

    // x direction: fill ghost columns of the interior rows first; the y pass
    // then fills whole ghost rows (corners included) from them.
    for (int j = 0; j < ny; ++j) {
        for (int layer = 1; layer <= g; ++layer) {
            const int il = -layer, ir = nx - 1 + layer;
            switch (bc.left) {
                case BcKind::Periodic: f.at(il, j) = f.at(nx - layer, j); break;
                case BcKind::Neumann: f.at(il, j) = f.at(0, j); break;
                case BcKind::Dirichlet: f.at(il, j) = f.dirichlet_[f.index(il, j)]; break;
                case BcKind::Reflective: f.at(il, j) = reflect(f.at(layer - 1, j), Axis::X); break;
            }
            switch (bc.right) {
                case BcKind::Periodic: f.at(ir, j) = f.at(layer - 1, j); break;
                case BcKind::Neumann: f.at(ir, j) = f.at(nx - 1, j); break;
                case BcKind::Dirichlet: f.at(ir, j) = f.dirichlet_[f.index(ir, j)]; break;
                case BcKind::Reflective: f.at(ir, j) = reflect(f.at(nx - layer, j), Axis::X); break;
            }
        }
    }
    if (ny == 1) return;

    // y direction: includes the corner blocks, using the already-filled x ghosts.
    for (int i = -g; i < nx + g; ++i) {
        for (int layer = 1; layer <= g; ++layer) {
            const int jb = -layer, jt = ny - 1 + layer;
            switch (bc.bottom) {
                case BcKind::Periodic: f.at(i, jb) = f.at(i, ny - layer); break;
                case BcKind::Neumann: f.at(i, jb) = f.at(i, 0); break;
                case BcKind::Dirichlet: f.at(i, jb) = f.dirichlet_[f.index(i, jb)]; break;
                case BcKind::Reflective: f.at(i, jb) = reflect(f.at(i, layer - 1), Axis::Y); break;
            }
            switch (bc.top) {
                case BcKind::Periodic: f.at(i, jt) = f.at(i, layer - 1); break;
                case BcKind::Neumann: f.at(i, jt) = f.at(i, ny - 1); break;
                case BcKind::Dirichlet: f.at(i, jt) = f.dirichlet_[f.index(i, jt)]; break;
                case BcKind::Reflective: f.at(i, jt) = reflect(f.at(i, ny - layer), Axis::Y); break;
            }
        }
    }
}

}  // namespace oftt
