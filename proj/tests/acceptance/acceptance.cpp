// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fatgasket/coins.hpp"
#include "fatgasket/error.hpp"
#include "fatgasket/expansions.hpp"
#include "fatgasket/gls.hpp"
#include "fatgasket/radial.hpp"
#include "fatgasket/random_map.hpp"
#include "fatgasket/rng.hpp"
#include "fatgasket/ulam.hpp"
#include "oracles.hpp"

using namespace fatgasket;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::uint8_t> random_tape(std::mt19937_64& g, int alphabet, std::size_t n) {
    std::vector<std::uint8_t> t(n);
    for (auto& s : t) s = static_cast<std::uint8_t>(g() % alphabet);
    return t;
}

const double kTriangleBetas[] = {1.1, 1.25, 1.4, 1.5};

Outcome constants_check() {
    const auto t0 = std::chrono::steady_clock::now();
    const double bs = solve_cubic(1, -1, 0, -1, 1, 2);
    const double bu = solve_cubic(1, -2, 2, -2, 1, 2);
    const double ls = solve_cubic(1, -1, 1, -0.5, 0, 1);
    const double dt = seconds_since(t0);
    const double worst = std::max({std::abs(bs - 1.4656), std::abs(bu - 1.5437), std::abs(ls - 0.6478)});
    const double cons = std::abs(ls * bu - 1.0);
    return {worst < 5e-5 && cons < 1e-4 && dt < 0.01,
            fmt("beta_star=%.6f beta_sup=%.6f lambda_star=%.6f max_dev=%.1e |l*b-1|=%.1e time=%.2fms", bs, bu, ls,
                worst, cons, dt * 1e3)};
}

Outcome psi_conjugacy() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 g(101);
    double worst = 0.0;
    std::size_t used = 0;
    for (double bv : kTriangleBetas) {
        const Beta b = Beta::make(bv);
        for (int n = 0; n < 100000; ++n) {
            const Point z = oracle::uniform_in_hull(g, bv);
            if (oracle::boundary_distance(bv, z) < 1e-7) continue;
            ++used;
            worst = std::max(worst, norm_inf(psi(b, greedy_step(b, z).point) - lazy_step(b, psi(b, z)).point));
        }
    }
    const double dt = seconds_since(t0);
    return {worst < 1e-9 && dt < 2.0, fmt("points=%zu max_err=%.2e time=%.2fs", used, worst, dt)};
}

Outcome reconstruction() {
    std::mt19937_64 g(103);
    std::size_t bad = 0;
    double worst_ratio = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const double bv = kTriangleBetas[n % 4];
        const Beta b = Beta::make(bv);
        const Point z = oracle::uniform_in_hull(g, bv);
        CoinTapes tapes{random_tape(g, 2, 60), random_tape(g, 3, 60), 0, 0};
        const auto rec = expand(b, tapes, z, 60);
        const double bound = 1.0 / ((bv - 1.0) * std::pow(bv, 60)) + 1e-9;
        const double err = norm1(z - expansion_value(b, rec.digits));
        worst_ratio = std::max(worst_ratio, err / bound);
        bad += rec.digits.size() != 60 || err > bound;
    }
    return {bad == 0, fmt("trials=10000 violations=%zu max err/bound=%.3f", bad, worst_ratio)};
}

// A pair of tapes with a <= b lexicographically: common prefix, then either
// equal to the end or 0 < 1 (resp. a smaller ternary symbol) at the split.
std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> ordered_pair(std::mt19937_64& g, int alphabet,
                                                                             std::size_t n) {
    auto a = random_tape(g, alphabet, n);
    auto b = a;
    const std::size_t m = g() % (n + 1);
    if (m < n) {
        const int lo = static_cast<int>(g() % (alphabet - 1));
        const int hi = lo + 1 + static_cast<int>(g() % (alphabet - 1 - lo));
        a[m] = static_cast<std::uint8_t>(lo);
        b[m] = static_cast<std::uint8_t>(hi);
        for (std::size_t i = m + 1; i < n; ++i) b[i] = static_cast<std::uint8_t>(g() % alphabet);
    }
    return {a, b};
}

Outcome monotonicity() {
    std::mt19937_64 g(107);
    std::size_t bad = 0, strict = 0;
    for (int n = 0; n < 10000; ++n) {
        const double bv = kTriangleBetas[n % 4];
        const Beta b = Beta::make(bv);
        const Point z = oracle::uniform_in_hull(g, bv);
        auto [w, w2] = ordered_pair(g, 2, 60);
        auto [u, u2] = ordered_pair(g, 3, 60);
        CoinTapes lo{w, u, 0, 0}, hi{w2, u2, 0, 0};
        const auto da = expand(b, lo, z, 60).digits;
        const auto db = expand(b, hi, z, 60).digits;
        const auto c = compare_digits(da, db);
        bad += c == std::strong_ordering::greater || da.size() != 60 || db.size() != 60;
        strict += c == std::strong_ordering::less;
    }
    return {bad == 0, fmt("trials=10000 violations=%zu strictly_ordered=%zu", bad, strict)};
}

Outcome round_trip() {
    std::mt19937_64 g(109);
    std::size_t mismatch = 0, wrong_step = 0, rejected = 0;
    for (int n = 0; n < 10000; ++n) {
        const double bv = kTriangleBetas[n % 4];
        const Beta b = Beta::make(bv);
        const Point z = oracle::uniform_in_hull(g, bv);
        CoinTapes tapes{random_tape(g, 2, 70), random_tape(g, 3, 70), 0, 0};
        const auto rec = expand(b, tapes, z, 60);
        const auto coins = coins_from_digits(b, z, rec.digits);
        mismatch += coins.omega != std::vector<std::uint8_t>(tapes.omega.begin(), tapes.omega.begin() + tapes.k);
        mismatch +=
            coins.upsilon != std::vector<std::uint8_t>(tapes.upsilon.begin(), tapes.upsilon.begin() + tapes.l);

        // corrupt one digit that has an inadmissible alternative
        Point w = z;
        std::vector<std::pair<std::size_t, Digit>> options;
        CoinTapes replay{tapes.omega, tapes.upsilon, 0, 0};
        for (std::size_t j = 0; j < rec.digits.size(); ++j) {
            const DigitSet set = admissible_digits(b, w);
            for (Digit d : kDigits)
                if (!set.contains(d)) options.emplace_back(j, d);
            w = kbeta_step(b, replay, w).point;
        }
        if (options.empty()) continue;
        const auto [j, d] = options[g() % options.size()];
        auto bad = rec.digits;
        bad[j] = d;
        try {
            coins_from_digits(b, z, bad);
            ++wrong_step;
        } catch (const InadmissibleDigit& e) {
            ++rejected;
            wrong_step += e.step() != j;
        }
    }
    return {mismatch == 0 && wrong_step == 0 && rejected > 0,
            fmt("trials=10000 prefix_mismatches=%zu corrupted=%zu wrong_or_missing_rejections=%zu", mismatch,
                rejected, wrong_step)};
}

Outcome visit_statistics() {
    const auto t0 = std::chrono::steady_clock::now();
    const double bv = 1.4;
    const Beta b = Beta::make(bv);
    const std::size_t len = 5000;
    rng::Stream st(113);
    std::size_t good = 0;
    std::vector<int> digits(len);
    for (int trial = 0; trial < 1000; ++trial) {
        for (int& d : digits) d = static_cast<int>(st.below(3));
        // orbit points z_n = sum_{i>n} a_i beta^(n-i), accumulated from the tail
        std::size_t in_c = 0, in_c012 = 0;
        Point z{};
        for (std::size_t n = len; n-- > 0;) {
            z = (1.0 / bv) * (z + oracle::digit_point(digits[n]));
            if (n + 60 > len) continue;
            const RegionT r = classify_region(b, z);
            in_c012 += r == RegionT::C012;
            in_c += r == RegionT::C01 || r == RegionT::C02 || r == RegionT::C12;
        }
        good += in_c >= 10 && in_c012 >= 10;
    }
    const double dt = seconds_since(t0);
    return {good >= 990 && dt < 30.0, fmt("sequences=1000 both>=10=%zu time=%.2fs", good, dt)};
}

Outcome chain_probabilities() {
    double worst = 0.0;
    const Beta b = Beta::make(1.4);
    for (auto [p, s, t] : {std::array<double, 3>{1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.9, 0.05, 0.05}, {0.2, 0.6, 0.3}}) {
        const auto spec = RandomMapSpec::make(b, p, s, t);
        for (int len = 0; len <= 3; ++len) {
            double total = 0.0;
            std::vector<int> chain(len, 1);
            while (true) {
                total += chain_probability(spec, chain, {0.9, 0.8});
                int i = 0;
                while (i < len && chain[i] == 6) chain[i++] = 1;
                if (i == len) break;
                ++chain[i];
            }
            worst = std::max(worst, std::abs(total - 1.0));
        }
    }
    return {worst < 1e-12, fmt("settings=3 lengths=0..3 max|sum-1|=%.1e", worst)};
}

double max_row_error(const UlamGrid& g) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < g.matrix().rows(); ++r) {
        double s = 0.0;
        for (TransitionMatrix::InnerIterator it(g.matrix(), r); it; ++it) s += it.value();
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

// Masses of a fine stationary density summed into the cells of a coarse grid.
std::vector<double> coarse_mass(const UlamGrid& fine, const std::vector<double>& density, const UlamGrid& coarse) {
    std::vector<double> m(coarse.size(), 0.0);
    for (std::size_t i = 0; i < fine.size(); ++i) {
        m[coarse.locate(fine.cells()[i].centroid)] += density[i] * fine.cells()[i].area;
    }
    return m;
}

Outcome transfer_operator() {
    const double bv = 1.4;
    const Beta b = Beta::make(bv);
    const auto spec = RandomMapSpec::make(b, 1.0 / 3, 1.0 / 3, 1.0 / 3);
    const UlamGrid coarse = UlamGrid::triangulate(b, 32);

    const UlamGrid tg = build_ulam(b, UlamMap::greedy(), 64, 64, 127);
    const UlamGrid rg = build_ulam(b, UlamMap::random_map(spec), 64, 64, 131);
    const double rows = std::max(max_row_error(tg), max_row_error(rg));

    StationaryResult ts{}, rs{};
    bool converged = true;
    try {
        ts = stationary_density(tg, 1e-10, 10000);
        rs = stationary_density(rg, 1e-10, 10000);
    } catch (const NoConvergence&) {
        converged = false;
    }
    if (!converged) return {false, "stationary density did not converge in 10^4 iterations"};

    const std::size_t steps = 10'000'000, burn = 10'000;
    std::vector<double> th(coarse.size(), 0.0), rh(coarse.size(), 0.0);
    Point z{0.3, 0.4};
    for (std::size_t n = 0; n < steps + burn; ++n) {
        z = greedy_step(b, z).point;
        if (n >= burn) th[coarse.locate(z)] += 1;
    }
    std::size_t seen = 0;
    run_R_orbit(spec, {0.3, 0.4}, steps + burn, 137, [&](int, Point p) {
        if (seen++ >= burn) rh[coarse.locate(p)] += 1;
    });

    const double tv_t = tv_distance(coarse_mass(tg, ts.density, coarse), th);
    const double tv_r = tv_distance(coarse_mass(rg, rs.density, coarse), rh);
    return {rows < 1e-12 && ts.residual < 1e-8 && rs.residual < 1e-8 && tv_t < 0.05 && tv_r < 0.05,
            fmt("max|row-1|=%.1e greedy: residual=%.1e iters=%zu TV=%.4f | R: residual=%.1e iters=%zu TV=%.4f", rows,
                ts.residual, ts.iterations, tv_t, rs.residual, rs.iterations, tv_r)};
}

Outcome pushforward() {
    const auto spec = RandomMapSpec::make(Beta::make(1.4), 1.0 / 3, 1.0 / 3, 1.0 / 3);
    const double tv = pushforward_compare(spec, 1'000'000, 139, 32);
    return {tv < 0.02, fmt("N=1000000 bins=32x32 TV=%.4f", tv)};
}

Outcome gls_checks() {
    const auto r = RandomMapSpec::make(Beta::make(1.4), 0.3, 0.2, 0.5);
    const GLSSpec spec = GLSSpec::from_weights(r.weights());
    std::mt19937_64 g(149);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const double w = u(g);
        worst = std::max(worst, std::abs(w - gls_value(spec, gls_digits(spec, w, 40))));
    }
    std::array<double, 6> freq{};
    const int draws = 1'000'000;
    for (int n = 0; n < draws; ++n) freq[gls_step(spec, u(g)).gamma] += 1.0 / draws;
    double dev = 0.0;
    for (int k = 0; k < 6; ++k) dev = std::max(dev, std::abs(freq[k] - spec.weights[k]));

    std::size_t shift_bad = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto gs = gls_digits(spec, u(g), 30);
        const auto full = split_coins(gs);
        const auto tail = split_coins(std::span<const int>(gs).subspan(1));
        shift_bad += tail.omega != std::vector<std::uint8_t>(full.omega.begin() + 1, full.omega.end());
        shift_bad += tail.upsilon != std::vector<std::uint8_t>(full.upsilon.begin() + 1, full.upsilon.end());
    }
    return {worst < 1e-8 && dev < 0.01 && shift_bad == 0,
            fmt("max|w-value|=%.1e max_freq_dev=%.4f shift_mismatches=%zu", worst, dev, shift_bad)};
}

Outcome radial_geometry() {
    std::size_t containment = 0, overlap = 0, in_holes = 0;
    std::string per;
    for (double bv : {1.51, constants().beta_sup}) {
        const Beta b = Beta::make(bv);
        const Triangle hull{{Point{0, 0}, Point{b.leg(), 0}, Point{0, b.leg()}}};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const Digit di = digit_from_index(i), dj = digit_from_index(j);
                const Triangle outer = f_apply(b, dj, hull);
                for (unsigned n = 2; n <= 6; ++n) {
                    const Triangle a = chain_triangle(b, {di, dj, n - 1});
                    for (const Point& v : a.v) containment += !contains_closed(outer, v, 1e-12);
                    overlap += !disjoint(a, chain_triangle(b, {dj, di, n - 1}), 1e-12);
                }
            }
        }
        std::vector<Triangle> holes;
        for (int j = 0; j < 3; ++j)
            for (unsigned n = 0; n <= 8; ++n) holes.push_back(chain_triangle(b, {std::nullopt, digit_from_index(j), n}));
        rng::Stream st(151);
        Point z{};
        std::size_t bad = 0;
        for (int n = 0; n < 1'000'000 + 100; ++n) {
            z = (1.0 / bv) * (z + oracle::digit_point(static_cast<int>(st.below(3))));
            if (n < 100) continue;
            for (const Triangle& h : holes) bad += in_erosion(h, z, 1e-3);
        }
        in_holes += bad;
        per += fmt(" beta=%.7f:%zu", bv, bad);
    }
    return {containment == 0 && overlap == 0 && in_holes == 0,
            fmt("containment_failures=%zu overlaps=%zu chaos_points_in_eroded_holes=%zu (%s )", containment, overlap,
                in_holes, per.c_str())};
}

Outcome mme_digits() {
    const double bv = 1.4;
    const Beta b = Beta::make(bv);
    rng::Stream st(157);
    std::array<double, 3> freq{};
    const std::size_t total = 1'000'000, per_start = 1000;
    for (std::size_t start = 0; start < total / per_start; ++start) {
        Point z = st.in_hull(b.leg());
        CoinTapes tapes;
        tapes.omega.resize(per_start);
        tapes.upsilon.resize(per_start);
        for (auto& o : tapes.omega) o = static_cast<std::uint8_t>(st.below(2));
        for (auto& u : tapes.upsilon) u = static_cast<std::uint8_t>(st.below(3));
        for (std::size_t n = 0; n < per_start; ++n) {
            const Step s = kbeta_step(b, tapes, z);
            freq[index(s.digit)] += 1.0 / total;
            z = s.point;
        }
    }
    const double dev = std::max({std::abs(freq[0] - 1.0 / 3), std::abs(freq[1] - 1.0 / 3), std::abs(freq[2] - 1.0 / 3)});
    return {dev < 0.01, fmt("steps=1000000 freq=(%.4f, %.4f, %.4f) max_dev=%.4f", freq[0], freq[1], freq[2], dev)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"constants", constants_check},
        {"psi conjugacy", psi_conjugacy},
        {"reconstruction", reconstruction},
        {"monotonicity", monotonicity},
        {"coding round trip", round_trip},
        {"visit statistics", visit_statistics},
        {"chain probabilities", chain_probabilities},
        {"transfer operator", transfer_operator},
        {"push-forward identity", pushforward},
        {"GLS coding", gls_checks},
        {"radial geometry", radial_geometry},
        {"digit frequencies", mme_digits},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2zu %-22s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
