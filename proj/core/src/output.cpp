#include "oftt/output.hpp"

#include <fstream>
#include <functional>
#include <stdexcept>

namespace oftt {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.precision(17);
    return out;
}

double total_energy(const Cons& u) { return u.E; }

}  // namespace

void write_csv_1d(const std::string& path, const Field& f, const GasParams& g) {
    auto out = open_or_throw(path);
    out << "x,rho,vx,vy,pe,pi,E\n";
    const Grid& grid = f.grid();
    for (int i = 0; i < grid.nx; ++i) {
        const Cons& u = f.at(i, 0);
        const Prim w = cons_to_prim(u, g);
        out << grid.x_center(i) << ',' << w.rho << ',' << w.vx << ',' << w.vy << ',' << w.pe
            << ',' << w.pi << ',' << total_energy(u) << '\n';
    }
}

void write_vtk(const std::string& path, const Field& f, const GasParams& g) {
    auto out = open_or_throw(path);
    const Grid& grid = f.grid();
    out << "# vtk DataFile Version 3.0\n"
        << "two-temperature euler solution\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << grid.nx << ' ' << grid.ny << " 1\n"
        << "ORIGIN " << grid.x_center(0) << ' ' << grid.y_center(0) << " 0\n"
        << "SPACING " << grid.dx() << ' ' << grid.dy() << " 1\n"
        << "POINT_DATA " << static_cast<long>(grid.nx) * grid.ny << '\n';

    const auto scalars = [&](const char* name, const std::function<double(const Prim&, const Cons&)>& get) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i) {
                const Cons& u = f.at(i, j);
                out << get(cons_to_prim(u, g), u) << '\n';
            }
    };
    scalars("rho", [](const Prim& w, const Cons&) { return w.rho; });
    scalars("vx", [](const Prim& w, const Cons&) { return w.vx; });
    scalars("vy", [](const Prim& w, const Cons&) { return w.vy; });
    scalars("pe", [](const Prim& w, const Cons&) { return w.pe; });
    scalars("pi", [](const Prim& w, const Cons&) { return w.pi; });
    scalars("E", [](const Prim&, const Cons& u) { return u.E; });
}

void write_entropy_log(const std::string& path, const std::vector<EntropyRecord>& records) {
    auto out = open_or_throw(path);
    out << "step,t,dt,total_entropy,entropy_change_eq25\n";
    for (const EntropyRecord& r : records)
        out << r.step << ',' << r.t << ',' << r.dt << ',' << r.total_entropy << ','
            << r.eq25_change << '\n';
}

}  // namespace oftt
