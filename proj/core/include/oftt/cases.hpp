#ifndef OFTT_CASES_HPP
#define OFTT_CASES_HPP

#include <string>
#include <vector>

#include "oftt/grid.hpp"
#include "oftt/state.hpp"

namespace oftt {

// Static description of a catalog problem: domain, gas constants, boundary
// conditions, final time and the resolution used for the reference runs.
struct CaseSpec {
    std::string name;
    GasParams gas;
    double t_final = 1.0;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool two_dimensional = false;
    bool smooth = false;  // exact solution available
    BoundarySet bcs;
    int default_nx = 100, default_ny = 1;
};

const std::vector<std::string>& case_names();
CaseSpec case_spec(const std::string& name);

// Cell-center samples of the initial primitive state.
Prim initial_state(const CaseSpec& spec, double x, double y);

// Field initialized from the case's data on the given resolution, ghosts
// included (Dirichlet boundaries freeze the sampled ghost values).
Field init_case(const CaseSpec& spec, int nx, int ny);

// Exact primitive state for the smooth accuracy cases; throws
// std::invalid_argument for any other case.
Prim exact_solution(const CaseSpec& spec, double x, double y, double t);

}  // namespace oftt

#endif
