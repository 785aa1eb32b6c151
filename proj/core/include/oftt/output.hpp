#ifndef OFTT_OUTPUT_HPP
#define OFTT_OUTPUT_HPP

#include <string>
#include <vector>

#include "oftt/diagnostics.hpp"
#include "oftt/grid.hpp"
#include "oftt/state.hpp"

namespace oftt {

// 1D line output: header "x,rho,vx,vy,pe,pi,E", one row per interior cell,
// 17 significant digits. Throws std::runtime_error if the file cannot be opened.
void write_csv_1d(const std::string& path, const Field& f, const GasParams& g);

// Legacy VTK STRUCTURED_POINTS file with cell-centered point data, one
// SCALARS array per primitive component plus total energy.
void write_vtk(const std::string& path, const Field& f, const GasParams& g);

// Entropy log: header "step,t,dt,total_entropy,entropy_change_eq25".
void write_entropy_log(const std::string& path, const std::vector<EntropyRecord>& records);

}  // namespace oftt

#endif
