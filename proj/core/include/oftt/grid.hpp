#ifndef OFTT_GRID_HPP
#define OFTT_GRID_HPP

#include <vector>

#include "oftt/state.hpp"

namespace oftt {

// Stencil reach needed anywhere in the scheme: 4th-order EC flux (2),
// 4th-order central differences (2), and the degree-3 ENO window of the
// outermost interface, which reaches three cells past its left cell (4).
inline constexpr int kGhostWidth = 4;

struct Grid {
    int nx = 0, ny = 1;
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;

    double dx() const { return (x1 - x0) / nx; }
    double dy() const { return ny > 1 ? (y1 - y0) / ny : 1.0; }
    double x_center(int i) const { return x0 + (i + 0.5) * dx(); }
    double y_center(int j) const { return ny > 1 ? y0 + (j + 0.5) * dy() : 0.0; }
    bool is_1d() const { return ny == 1; }
    double cell_measure() const { return dx() * dy(); }
};

enum class BcKind { Periodic, Neumann, Dirichlet, Reflective };

struct BoundarySet {
    BcKind left = BcKind::Periodic;
    BcKind right = BcKind::Periodic;
    BcKind bottom = BcKind::Periodic;
    BcKind top = BcKind::Periodic;
};

// Conserved states on an (nx + 2g) x (ny + 2g) block, g = kGhostWidth.
// Indexing is by interior cell coordinates: i in [-g, nx+g), j in [-g, ny+g).
class Field {
public:
    Field() = default;
    Field(const Grid& grid, BoundarySet bcs);

    const Grid& grid() const { return grid_; }
    const BoundarySet& bcs() const { return bcs_; }

    Cons& at(int i, int j) { return data_[index(i, j)]; }
    const Cons& at(int i, int j) const { return data_[index(i, j)]; }

    std::vector<Cons>& raw() { return data_; }
    const std::vector<Cons>& raw() const { return data_; }

    // Snapshot the current contents (including ghosts) as the frozen states
    // used by Dirichlet boundaries.
    void freeze_dirichlet_states();

    // Interior linear combination: this = a*this + b*other (+ c*rhs), ghosts untouched.
    void axpy(double a, double b, const Field& other);
    void add_scaled(double c, const std::vector<Vec5>& rhs);

    int nx() const { return grid_.nx; }
    int ny() const { return grid_.ny; }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j + kGhostWidth) * stride_ +
               static_cast<std::size_t>(i + kGhostWidth);
    }

    Grid grid_;
    BoundarySet bcs_;
    std::size_t stride_ = 0;
    std::vector<Cons> data_;
    std::vector<Cons> dirichlet_;

    friend void apply_boundary(Field& f);
};

// Fill all ghost layers according to the field's boundary conditions.
// Periodic wraps, Neumann copies the nearest interior cell, Dirichlet restores
// the frozen snapshot, Reflective mirrors the interior with the normal
// velocity negated.
void apply_boundary(Field& f);

}  // namespace oftt

#endif
