#include <doctest.h>

#include <cmath>
#include <random>

#include "fatgasket/error.hpp"
#include "fatgasket/ulam.hpp"
#include "oracles.hpp"

using namespace fatgasket;

namespace {

double row_sum(const TransitionMatrix& m, Eigen::Index r) {
    double s = 0.0;
    for (TransitionMatrix::InnerIterator it(m, r); it; ++it) s += it.value();
    return s;
}

int greedy_oracle_digit(double b, Point z) {
    const std::string r = oracle::region(b, z);
    if (r[0] == 'E') return r[1] - '0';
    return r.back() - '0';
}

}  // namespace

TEST_CASE("triangulation") {
    const Beta b = Beta::make(1.4);
    for (int n : {2, 5, 32}) {
        const UlamGrid g = UlamGrid::triangulate(b, n);
        CHECK(g.size() == static_cast<std::size_t>(n) * n);
        double total = 0.0;
        for (const Cell& c : g.cells()) {
            CHECK(c.area == doctest::Approx(b.leg() * b.leg() / (2.0 * n * n)).epsilon(1e-12));
            total += c.area;
        }
        CHECK(total == doctest::Approx(b.leg() * b.leg() / 2).epsilon(1e-12));
    }
}

TEST_CASE("locate finds the containing cell") {
    const Beta b = Beta::make(1.4);
    const UlamGrid g = UlamGrid::triangulate(b, 16);
    std::mt19937_64 r(3);
    for (int n = 0; n < 20000; ++n) {
        const Point z = oracle::uniform_in_hull(r, 1.4);
        CHECK(contains_closed(g.cells()[g.locate(z)].shape, z, 1e-12));
    }
    CHECK(g.locate({2.5, 0}) < g.size());
    CHECK(g.locate({0, 2.5}) < g.size());
    CHECK(g.locate({1.25, 1.25}) < g.size());
}

TEST_CASE("Ulam rows are stochastic") {
    const Beta b = Beta::make(1.4);
    for (const UlamMap& m :
         {UlamMap::greedy(), UlamMap::lazy(), UlamMap::random_map(RandomMapSpec::make(b, 0.3, 0.2, 0.5))}) {
        const UlamGrid g = build_ulam(b, m, 12, 25, 1);
        for (Eigen::Index r = 0; r < g.matrix().rows(); ++r) CHECK(std::abs(row_sum(g.matrix(), r) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(build_ulam(b, UlamMap::greedy(), 1, 25, 1), BadConfig);
    CHECK_THROWS_AS(build_ulam(b, UlamMap::greedy(), 8, 4, 1), BadConfig);
}

TEST_CASE("Ulam matrix matches brute-force sampling") {
    const double bv = 1.4;
    const Beta b = Beta::make(bv);
    const UlamGrid g = build_ulam(b, UlamMap::greedy(), 2, 4096, 7);
    const auto& cells = g.cells();
    std::mt19937_64 r(77);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::vector<double> hits(cells.size(), 0.0);
        const int n = 100000;
        const Triangle& t = cells[c].shape;
        for (int i = 0; i < n; ++i) {
            double a = u(r), e = u(r);
            if (a + e > 1) {
                a = 1 - a;
                e = 1 - e;
            }
            const Point z = t.v[0] + a * (t.v[1] - t.v[0]) + e * (t.v[2] - t.v[0]);
            const Point w = bv * z - oracle::digit_point(greedy_oracle_digit(bv, z));
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (contains_closed(cells[k].shape, w, 1e-9)) {
                    hits[k] += 1;
                    break;
                }
            }
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
            CHECK(std::abs(g.matrix().coeff(c, k) - hits[k] / n) < 0.01);
        }
    }
}

TEST_CASE("Ulam matrix does not depend on the worker count") {
    const Beta b = Beta::make(1.3);
    const auto a = build_ulam(b, UlamMap::lazy(), 10, 36, 5, 1);
    const auto c = build_ulam(b, UlamMap::lazy(), 10, 36, 5, 3);
    CHECK((a.matrix() - c.matrix()).norm() == 0.0);
}

TEST_CASE("stationary density of a swap") {
    const Cell one{{{Point{0, 0}, Point{1, 0}, Point{0, 1}}}, 0.5, {1.0 / 3, 1.0 / 3}};
    const Cell two{{{Point{1, 1}, Point{0, 1}, Point{1, 0}}}, 0.5, {2.0 / 3, 2.0 / 3}};
    TransitionMatrix m(2, 2);
    m.insert(0, 1) = 1.0;
    m.insert(1, 0) = 1.0;
    const UlamGrid g({one, two}, m);
    const auto res = stationary_density(g);
    CHECK(res.density[0] == doctest::Approx(1.0));
    CHECK(res.density[1] == doctest::Approx(1.0));
}

TEST_CASE("greedy stationary density") {
    const Beta b = Beta::make(1.4);
    const UlamGrid g = build_ulam(b, UlamMap::greedy(), 64, 64, 1);
    const auto res = stationary_density(g, 1e-10, 10000);
    CHECK(res.residual < 1e-8);
    double mass = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(res.density[i] >= 0.0);
        mass += res.density[i] * g.cells()[i].area;
    }
    CHECK(std::abs(mass - 1.0) < 1e-9);

    std::vector<double> f = res.density;
    for (int it = 0; it < 5; ++it) f = g.transfer(f);
    const auto m0 = g.mass(res.density), m1 = g.mass(f);
    double diff = 0.0;
    for (std::size_t i = 0; i < m0.size(); ++i) diff += std::abs(m0[i] - m1[i]);
    CHECK(diff < 1e-8);

    CHECK_THROWS_AS(stationary_density(g, 1e-14, 2), NoConvergence);
}

TEST_CASE("transfer preserves mass") {
    const Beta b = Beta::make(1.25);
    const UlamGrid g = build_ulam(b, UlamMap::random_map(RandomMapSpec::make(b, 0.6, 0.1, 0.7)), 20, 36, 2);
    std::mt19937_64 r(6);
    std::uniform_real_distribution<double> u(0, 5);
    for (int n = 0; n < 20; ++n) {
        std::vector<double> f(g.size());
        for (double& x : f) x = u(r);
        double a = 0, c = 0;
        for (double x : g.mass(f)) a += x;
        for (double x : g.mass(g.transfer(f))) c += x;
        CHECK(std::abs(a - c) < 1e-12 * a);
    }
}

TEST_CASE("total variation") {
    const std::vector<double> a{1, 1, 2}, c{2, 2, 4}, d{0, 0, 1};
    CHECK(tv_distance(a, c) == doctest::Approx(0.0));
    CHECK(tv_distance(a, d) == doctest::Approx(0.5));
}
