#ifndef OFTT_STATE_HPP
#define OFTT_STATE_HPP

#include <stdexcept>
#include <string>

#include "oftt/types.hpp"

namespace oftt {

// Specific heat ratios for electrons and ions. Both must exceed one.
struct GasParams {
    double gamma_e = 1.4;
    double gamma_i = 1.4;
};

// Primitive state W = (rho, vx, vy, pe, pi). Admissible iff rho, pe, pi > 0.
struct Prim {
    double rho = 0, vx = 0, vy = 0, pe = 0, pi = 0;
};

// Conserved state U = (rho, rho*vx, rho*vy, E, pi). The ion pressure is
// evolved directly; the electron pressure is recovered from the total energy.
struct Cons {
    double rho = 0, mx = 0, my = 0, E = 0, pi = 0;

    Vec5 as_vec() const { return {rho, mx, my, E, pi}; }
    static Cons from_vec(const Vec5& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
};

class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
    AdmissibilityError(const std::string& what, int i, int j)
        : std::runtime_error(what + " at cell (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          cell_i(i), cell_j(j) {}
    int cell_i = -1;
    int cell_j = -1;
};

bool is_admissible(const Prim& w);
void require_admissible(const Prim& w);

Cons prim_to_cons(const Prim& w, const GasParams& g);
Prim cons_to_prim(const Cons& u, const GasParams& g);
// As above but does not validate positivity of the recovered state.
Prim cons_to_prim_unchecked(const Cons& u, const GasParams& g);

// Physical specific entropy s and the entropy function -rho*s.
struct EntropyPair {
    double s;
    double ent;
};
EntropyPair physical_entropy(const Prim& w, const GasParams& g);

// Entropy flux q_d = -rho v_d s.
double entropy_flux(const Prim& w, const GasParams& g, Axis d);

// Entropy variables V = d(-rho s)/dU.
Vec5 entropy_vars(const Prim& w, const GasParams& g);

// Entropy potential F_d = V.f_d - q_d = 2 rho v_d.
double entropy_potential(const Prim& w, Axis d);

// Flux of the reformulated conservative part (momentum carries 2*pe).
Vec5 physical_flux(const Prim& w, const GasParams& g, Axis d);

double velocity_component(const Prim& w, Axis d);

}  // namespace oftt

#endif
