#pragma once

// Generalized Luroth series coding of [0,1) by the six branch weights, and
// the split of a six-symbol sequence into a binary and a ternary coin tape.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace fatgasket {

struct GLSSpec {
    std::array<double, 6> weights{};
    /// cumulative[k] = weights[0] + ... + weights[k-1]; cumulative[6] = 1.
    std::array<double, 7> cumulative{};

    /// Throws BadConfig unless every weight is positive and they sum to 1
    /// within 1e-12.
    static GLSSpec from_weights(const std::array<double, 6>& weights);
};

/// 0 for symbols 0,1,2 and 1 for 3,4,5.
int gls_h1(int symbol);
/// symbol mod 3.
int gls_h2(int symbol);

struct GLSStep {
    double w;
    int gamma;
};

/// gamma = k-1 for w in I_k = [cumulative[k-1], cumulative[k]), and
/// w' = (w - cumulative[k-1]) / weights[k-1], kept inside [0,1).
GLSStep gls_step(const GLSSpec& spec, double w);

std::vector<int> gls_digits(const GLSSpec& spec, double w, std::size_t n);

/// Sum of h_i / (l_1 ... l_i) over the given digits.
double gls_value(const GLSSpec& spec, std::span<const int> gammas);

struct SplitCoins {
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> upsilon;
};

SplitCoins split_coins(std::span<const int> gammas);

}  // namespace fatgasket
