#pragma once

// The six-branch random map R = {tau_1..tau_6; p_1..p_6} on the triangle
// regime. Branches 1-3 take the smaller digit on two-way switch regions and
// branches 4-6 the larger one; on the triple overlap branch k takes
// q_{(k-1) mod 3}. Weights are p*s, p*t, p*(1-s-t), (1-p)*s, (1-p)*t,
// (1-p)*(1-s-t), constant in z.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fatgasket/coins.hpp"
#include "fatgasket/geometry.hpp"
#include "fatgasket/rng.hpp"

namespace fatgasket {

class RandomMapSpec {
public:
    /// Throws BadConfig unless p, s, t lie in (0, 1) with s + t < 1, and
    /// WrongRegime for a radial beta.
    static RandomMapSpec make(const Beta& beta, double p, double s, double t);

    const Beta& beta() const { return beta_; }
    double p() const { return p_; }
    double s() const { return s_; }
    double t() const { return t_; }

    /// Branch weights in order tau_1..tau_6.
    const std::array<double, 6>& weights() const { return weights_; }
    /// Prefix sums of the weights; cumulative()[0] = 0 and cumulative()[6] = 1.
    const std::array<double, 7>& cumulative() const { return cumulative_; }

    /// Branch k in 1..6 owning u in [0,1).
    int branch_for(double u) const;

private:
    RandomMapSpec(const Beta& beta, double p, double s, double t);

    Beta beta_;
    double p_, s_, t_;
    std::array<double, 6> weights_;
    std::array<double, 7> cumulative_;
};

/// Digit used by branch k (1..6) at z.
Digit tau_digit(const RandomMapSpec& spec, int k, Point z);

/// tau_k(z). At beta = 3/2 every branch sends the single triple-overlap point
/// to beta*z.
Point tau(const RandomMapSpec& spec, int k, Point z);

/// Calls visit(branch, point) for each of the n steps of an R-orbit from z0.
void run_R_orbit(const RandomMapSpec& spec, Point z0, std::size_t n, std::uint64_t seed,
                 const std::function<void(int, Point)>& visit);

/// z0 followed by n random images.
std::vector<Point> sample_R_orbit(const RandomMapSpec& spec, Point z0, std::size_t n, std::uint64_t seed);

/// p_{k_1..k_n}(z), evaluated along the orbit tau_{k_{m-1}} o ... o tau_{k_1}(z).
double chain_probability(const RandomMapSpec& spec, std::span<const int> chain, Point z);

/// One step of the skew product R'(z, w) = (tau_k(z), phi_k(w)) with k the
/// branch owning w.
struct SkewState {
    Point z;
    double w;
};
SkewState skew_step(const RandomMapSpec& spec, SkewState state);

/// One step of K_beta with single-symbol tapes omega = {h1(k-1)},
/// upsilon = {h2(k-1)}; agrees with tau_k off beta = 3/2.
Point coin_step_for_branch(const RandomMapSpec& spec, int k, Point z);

enum class PushRoute {
    CoinTapes,       ///< one K_beta step with tapes drawn from the coin weights
    BranchSampling,  ///< one R step with the branch drawn from the six weights
};

/// Total variation between the one-step images of N uniform points of Delta
/// under two routes, binned on a bins x bins square grid over [0, 1/(beta-1)]^2.
/// Each route draws from its own streams, so equal routes with equal seeds
/// replay identically.
double pushforward_tv(PushRoute route_a, const RandomMapSpec& spec_a, PushRoute route_b,
                      const RandomMapSpec& spec_b, std::size_t n, std::uint64_t seed, int bins = 32);

/// pushforward_tv(CoinTapes, spec, BranchSampling, spec, ...).
double pushforward_compare(const RandomMapSpec& spec, std::size_t n, std::uint64_t seed, int bins = 32);

}  // namespace fatgasket
