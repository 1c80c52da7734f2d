#include "fatgasket/random_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fatgasket/expansions.hpp"
#include "fatgasket/gls.hpp"

namespace fatgasket {

namespace {

bool open_unit(double v) { return v > 0.0 && v < 1.0; }

void require_branch(int k) {
    if (k < 1 || k > 6) throw BadConfig("branch index must be in 1..6, got " + std::to_string(k));
}

}  // namespace

RandomMapSpec::RandomMapSpec(const Beta& beta, double p, double s, double t)
    : beta_(beta), p_(p), s_(s), t_(t) {
    const double r = 1.0 - s - t;
    weights_ = {p * s, p * t, p * r, (1.0 - p) * s, (1.0 - p) * t, (1.0 - p) * r};
    cumulative_[0] = 0.0;
    for (int k = 0; k < 6; ++k) cumulative_[k + 1] = cumulative_[k] + weights_[k];
    cumulative_[6] = 1.0;
}

RandomMapSpec RandomMapSpec::make(const Beta& beta, double p, double s, double t) {
    if (beta.regime() != Regime::Triangle) throw WrongRegime("the random map R needs 1 < beta <= 3/2");
    if (!open_unit(p) || !open_unit(s) || !open_unit(t) || !(s + t < 1.0)) {
        throw BadConfig("need p, s, t in (0,1) with s + t < 1");
    }
    return RandomMapSpec(beta, p, s, t);
}

int RandomMapSpec::branch_for(double u) const {
    for (int k = 1; k < 6; ++k) {
        if (u < cumulative_[k]) return k;
    }
    return 6;
}

Digit tau_digit(const RandomMapSpec& spec, int k, Point z) {
    require_branch(k);
    const RegionT r = classify_region(spec.beta(), z);
    const DigitSet allowed = admissible_set(r);
    switch (allowed.size()) {
        case 1: return allowed.lowest();
        case 2: return k <= 3 ? allowed.lowest() : allowed.highest();
        default:
            if (spec.beta().degenerate_triple()) return Digit::Q0;
            return digit_from_index((k - 1) % 3);
    }
}

Point tau(const RandomMapSpec& spec, int k, Point z) {
    z = snap_to_hull(spec.beta(), z);
    return f_inverse(spec.beta(), tau_digit(spec, k, z), z);
}

void run_R_orbit(const RandomMapSpec& spec, Point z0, std::size_t n, std::uint64_t seed,
                 const std::function<void(int, Point)>& visit) {
    rng::Stream stream(seed);
    Point z = snap_to_hull(spec.beta(), z0);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = spec.branch_for(stream.uniform());
        z = snap_to_hull(spec.beta(), tau(spec, k, z));
        visit(k, z);
    }
}

std::vector<Point> sample_R_orbit(const RandomMapSpec& spec, Point z0, std::size_t n, std::uint64_t seed) {
    std::vector<Point> orbit;
    orbit.reserve(n + 1);
    orbit.push_back(snap_to_hull(spec.beta(), z0));
    run_R_orbit(spec, z0, n, seed, [&](int, Point z) { orbit.push_back(z); });
    return orbit;
}

double chain_probability(const RandomMapSpec& spec, std::span<const int> chain, Point z) {
    z = snap_to_hull(spec.beta(), z);
    double prob = 1.0;
    for (int k : chain) {
        require_branch(k);
        prob *= spec.weights()[k - 1];  // p_k(z) is constant in z
        z = snap_to_hull(spec.beta(), tau(spec, k, z));
    }
    return prob;
}

SkewState skew_step(const RandomMapSpec& spec, SkewState state) {
    const GLSSpec gls = GLSSpec::from_weights(spec.weights());
    const GLSStep g = gls_step(gls, state.w);
    return {tau(spec, g.gamma + 1, state.z), g.w};
}

Point coin_step_for_branch(const RandomMapSpec& spec, int k, Point z) {
    require_branch(k);
    CoinTapes tapes;
    tapes.omega = {static_cast<std::uint8_t>(gls_h1(k - 1))};
    tapes.upsilon = {static_cast<std::uint8_t>(gls_h2(k - 1))};
    return kbeta_step(spec.beta(), tapes, z).point;
}

namespace {

class Histogram {
public:
    Histogram(double leg, int bins) : leg_(leg), bins_(bins), counts_(static_cast<std::size_t>(bins) * bins, 0.0) {}

    void add(Point z) {
        const int a = std::clamp(static_cast<int>(z.x / leg_ * bins_), 0, bins_ - 1);
        const int b = std::clamp(static_cast<int>(z.y / leg_ * bins_), 0, bins_ - 1);
        counts_[static_cast<std::size_t>(b) * bins_ + a] += 1.0;
    }

    const std::vector<double>& counts() const { return counts_; }

private:
    double leg_;
    int bins_;
    std::vector<double> counts_;
};

Histogram push_one_step(PushRoute route, const RandomMapSpec& spec, std::size_t n, std::uint64_t seed, int bins) {
    const Beta& beta = spec.beta();
    // Streams are keyed by route: the same route and seed replays exactly,
    // different routes draw independent samples.
    const auto key = static_cast<std::uint64_t>(route) * 2;
    rng::Stream starts(seed, key);
    rng::Stream coins(seed, key + 1);
    Histogram hist(beta.leg(), bins);
    CoinTapes tapes;
    tapes.omega.resize(1);
    tapes.upsilon.resize(1);
    for (std::size_t i = 0; i < n; ++i) {
        const Point z = starts.in_hull(beta.leg());
        const double u = coins.uniform();
        Point image;
        if (route == PushRoute::BranchSampling) {
            image = tau(spec, spec.branch_for(u), z);
        } else {
            // Independent omega ~ {p, 1-p} and upsilon ~ {s, t, 1-s-t} coins.
            const double v = coins.uniform();
            tapes.omega[0] = u < spec.p() ? 0 : 1;
            tapes.upsilon[0] = v < spec.s() ? 0 : (v < spec.s() + spec.t() ? 1 : 2);
            tapes.k = 0;
            tapes.l = 0;
            image = kbeta_step(beta, tapes, z).point;
        }
        hist.add(image);
    }
    return hist;
}

}  // namespace

double pushforward_tv(PushRoute route_a, const RandomMapSpec& spec_a, PushRoute route_b,
                      const RandomMapSpec& spec_b, std::size_t n, std::uint64_t seed, int bins) {
    if (n < 10000) throw BadConfig("pushforward comparison needs at least 1e4 samples");
    if (spec_a.beta().value() != spec_b.beta().value()) throw BadConfig("pushforward sides differ in beta");
    const Histogram a = push_one_step(route_a, spec_a, n, seed, bins);
    const Histogram b = push_one_step(route_b, spec_b, n, seed, bins);
    double tv = 0.0;
    for (std::size_t i = 0; i < a.counts().size(); ++i) tv += std::abs(a.counts()[i] - b.counts()[i]);
    return 0.5 * tv / static_cast<double>(n);
}

double pushforward_compare(const RandomMapSpec& spec, std::size_t n, std::uint64_t seed, int bins) {
    return pushforward_tv(PushRoute::CoinTapes, spec, PushRoute::BranchSampling, spec, n, seed, bins);
}

}  // namespace fatgasket
