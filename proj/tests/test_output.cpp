#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oftt/cases.hpp"
#include "oftt/output.hpp"

using namespace oftt;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("/tmp/oftt_test_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("1d csv round-trips the state values") {
    const CaseSpec spec = case_spec("sod");
    const Field f = init_case(spec, 8, 1);
    TempFile tmp("out.csv");
    write_csv_1d(tmp.path, f, spec.gas);
    const auto lines = read_lines(tmp.path);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "x,rho,vx,vy,pe,pi,E");
    for (int i = 0; i < 8; ++i) {
        std::istringstream row(lines[static_cast<std::size_t>(i + 1)]);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
        REQUIRE(vals.size() == 7);
        const Prim w = cons_to_prim(f.at(i, 0), spec.gas);
        // 17 significant digits round-trip binary64 exactly.
        CHECK(vals[0] == f.grid().x_center(i));
        CHECK(vals[1] == w.rho);
        CHECK(vals[4] == w.pe);
        CHECK(vals[5] == w.pi);
        CHECK(vals[6] == f.at(i, 0).E);
    }
}

TEST_CASE("vtk file declares the grid and carries one record per cell") {
    const CaseSpec spec = case_spec("riemann2d");
    const Field f = init_case(spec, 12, 10);
    TempFile tmp("out.vtk");
    write_vtk(tmp.path, f, spec.gas);
    const auto lines = read_lines(tmp.path);
    REQUIRE(lines.size() > 8);
    CHECK(lines[3] == "DATASET STRUCTURED_POINTS");
    CHECK(lines[4] == "DIMENSIONS 12 10 1");
    CHECK(lines[7].substr(0, 10) == "POINT_DATA");
    CHECK(lines[7] == "POINT_DATA 120");
    int scalar_blocks = 0, records = 0;
    for (std::size_t i = 8; i < lines.size(); ++i) {
        if (lines[i].rfind("SCALARS", 0) == 0)
            ++scalar_blocks;
        else if (lines[i].rfind("LOOKUP_TABLE", 0) != 0 && !lines[i].empty())
            ++records;
    }
    CHECK(scalar_blocks == 6);
    CHECK(records == 6 * 120);
}

TEST_CASE("entropy log format") {
    std::vector<EntropyRecord> recs{{1, 0.1, 0.1, -3.5, -1e-12}, {2, 0.2, 0.1, -3.6, -2e-12}};
    TempFile tmp("ent.csv");
    write_entropy_log(tmp.path, recs);
    const auto lines = read_lines(tmp.path);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "step,t,dt,total_entropy,entropy_change_eq25");
    CHECK(lines[1].substr(0, 2) == "1,");
}

TEST_CASE("unwritable paths are reported") {
    const CaseSpec spec = case_spec("sod");
    const Field f = init_case(spec, 4, 1);
    CHECK_THROWS_AS(write_csv_1d("/nonexistent_dir/x.csv", f, spec.gas), std::runtime_error);
}
