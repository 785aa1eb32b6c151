#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oftt/reconstruction.hpp"

using namespace oftt;

TEST_CASE("minmod basics") {
    CHECK(minmod(1.0, 2.0) == 1.0);
    CHECK(minmod(-3.0, -0.5) == -0.5);
    CHECK(minmod(-1.0, 2.0) == 0.0);
    CHECK(minmod(0.0, 5.0) == 0.0);
}

TEST_CASE("reconstruction is exact for cell averages of polynomials") {
    // Samples are cell averages over unit cells [m, m+1]; the interface trace
    // of the degree-d reconstruction must match the underlying polynomial.
    for (int degree : {1, 2, 3}) {
        std::vector<double> coeff(static_cast<std::size_t>(degree) + 1);
        std::mt19937 rng(51u + static_cast<unsigned>(degree));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (double& c : coeff) c = u(rng);
        auto point = [&](double x) {
            double v = 0.0, p = 1.0;
            for (double c : coeff) {
                v += c * p;
                p *= x;
            }
            return v;
        };
        auto primitive = [&](double x) {
            double v = 0.0, p = x;
            for (std::size_t m = 0; m < coeff.size(); ++m) {
                v += coeff[m] * p / static_cast<double>(m + 1);
                p *= x;
            }
            return v;
        };
        std::vector<double> avg(8);
        for (int m = 0; m < 8; ++m)
            avg[static_cast<std::size_t>(m)] = primitive(m + 1.0) - primitive(m);
        for (int cell = degree; cell < 8 - degree; ++cell) {
            const double left = eno_reconstruct(avg, degree, cell, InterfaceSide::Left);
            const double right = eno_reconstruct(avg, degree, cell, InterfaceSide::Right);
            CHECK(left == doctest::Approx(point(cell)).epsilon(1e-11));
            CHECK(right == doctest::Approx(point(cell + 1.0)).epsilon(1e-11));
        }
    }
}

TEST_CASE("adjacent cells sharing a stencil agree at the common interface") {
    // Smooth data away from a kink: both cells around an interior interface
    // pick the same stencil, so the two one-sided traces coincide exactly.
    std::vector<double> s{0.0, 0.1, 0.3, 0.6, 1.0, 8.0, 30.0, 80.0};
    for (int degree : {2, 3}) {
        const double a = eno_reconstruct(s, degree, 1, InterfaceSide::Right);
        const double b = eno_reconstruct(s, degree, 2, InterfaceSide::Left);
        CHECK(a == doctest::Approx(b).epsilon(1e-14));
    }
}

TEST_CASE("sign property of the reconstructed scaled jump") {
    // 1e4 random stencils per order; the reconstructed jump never opposes the
    // sign of the first-order jump, the sufficient condition for entropy
    // stability of the dissipation operator.
    std::mt19937 rng(52);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> spike(-20.0, 20.0);
    const Mat5 id = Mat5::identity();
    for (int k : {2, 3, 4}) {
        const std::size_t reach = static_cast<std::size_t>(k == 2 ? 1 : k - 1);
        const std::size_t win = 2 * reach + 2;
        for (int it = 0; it < 10000; ++it) {
            std::vector<Vec5> v(win);
            for (auto& x : v)
                for (int m = 0; m < 5; ++m)
                    x[m] = (it % 3 == 0) ? spike(rng) : n(rng);
            const Vec5 jump = reconstruct_scaled_jump(v, reach, id, k);
            for (int m = 0; m < 5; ++m) {
                const double d0 = v[reach + 1][m] - v[reach][m];
                CHECK(jump[m] * d0 >= -1e-14 * std::abs(d0));
            }
        }
    }
}

TEST_CASE("scaled jump vanishes on smooth polynomial data") {
    // Data polynomial in the cell index stays polynomial after the linear
    // scaling map, so both one-sided traces reproduce it exactly.
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat5 rt = Mat5::identity();
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) rt(r, c) += 0.2 * u(rng);
    for (int k : {3, 4}) {
        const std::size_t reach = static_cast<std::size_t>(k - 1);
        const std::size_t win = 2 * reach + 2;
        std::vector<Vec5> v(win);
        for (std::size_t j = 0; j < win; ++j) {
            const double x = static_cast<double>(j);
            for (int m = 0; m < 5; ++m) {
                double val = 0.5 + 0.3 * (m + 1) * x;
                for (int p = 2; p <= k - 1; ++p) val += 0.05 * m * std::pow(x, p);
                v[j][m] = val;
            }
        }
        const Vec5 jump = reconstruct_scaled_jump(v, reach, rt, k);
        for (int m = 0; m < 5; ++m) CHECK(std::abs(jump[m]) <= 1e-10);
    }
}

TEST_CASE("second-order jump reduces to the first-order jump at extrema") {
    // Around a local extremum MinMod slopes vanish, leaving the raw jump.
    std::vector<Vec5> v(4);
    for (int m = 0; m < 5; ++m) {
        v[0][m] = 1.0;
        v[1][m] = 2.0 + 0.1 * m;
        v[2][m] = 1.5;
        v[3][m] = 3.0;
    }
    const Vec5 jump = reconstruct_scaled_jump(v, 1, Mat5::identity(), 2);
    for (int m = 0; m < 5; ++m)
        CHECK(jump[m] == doctest::Approx(v[2][m] - v[1][m]).epsilon(1e-14));
}
