#include "fatgasket/gls.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fatgasket/error.hpp"

namespace fatgasket {

GLSSpec GLSSpec::from_weights(const std::array<double, 6>& weights) {
    GLSSpec spec;
    spec.weights = weights;
    double total = 0.0;
    for (int k = 0; k < 6; ++k) {
        if (!(weights[k] > 0.0)) throw BadConfig("GLS weights must be positive");
        spec.cumulative[k] = total;
        total += weights[k];
    }
    if (std::abs(total - 1.0) > 1e-12) throw BadConfig("GLS weights must sum to 1");
    spec.cumulative[6] = 1.0;
    return spec;
}

int gls_h1(int symbol) {
    if (symbol < 0 || symbol > 5) throw std::out_of_range("GLS symbol " + std::to_string(symbol));
    return symbol < 3 ? 0 : 1;
}

int gls_h2(int symbol) {
    if (symbol < 0 || symbol > 5) throw std::out_of_range("GLS symbol " + std::to_string(symbol));
    return symbol % 3;
}

GLSStep gls_step(const GLSSpec& spec, double w) {
    int k = 5;
    for (int i = 1; i < 6; ++i) {
        if (w < spec.cumulative[i]) {
            k = i - 1;
            break;
        }
    }
    double next = (w - spec.cumulative[k]) / spec.weights[k];
    if (next < 0.0) next = 0.0;
    if (next >= 1.0) next = std::nextafter(1.0, 0.0);
    return {next, k};
}

std::vector<int> gls_digits(const GLSSpec& spec, double w, std::size_t n) {
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const GLSStep s = gls_step(spec, w);
        out.push_back(s.gamma);
        w = s.w;
    }
    return out;
}

double gls_value(const GLSSpec& spec, std::span<const int> gammas) {
    // h_i / (l_1 ... l_i) = cumulative[g_i] * weights[g_1] ... weights[g_{i-1}]
    double value = 0.0;
    double scale = 1.0;
    for (int g : gammas) {
        value += scale * spec.cumulative[g];
        scale *= spec.weights[g];
    }
    return value;
}

SplitCoins split_coins(std::span<const int> gammas) {
    SplitCoins out;
    out.omega.reserve(gammas.size());
    out.upsilon.reserve(gammas.size());
    for (int g : gammas) {
        out.omega.push_back(static_cast<std::uint8_t>(gls_h1(g)));
        out.upsilon.push_back(static_cast<std::uint8_t>(gls_h2(g)));
    }
    return out;
}

}  // namespace fatgasket
