#pragma once

// Coin-driven random beta-transformation K_beta and the two coding
// directions between coin tapes and digit sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fatgasket/coins.hpp"
#include "fatgasket/geometry.hpp"

namespace fatgasket {

/// Digits that can start a representation of z. In the radial regime this is
/// empty for points in a hole; depth <= 0 selects the default chain depth.
DigitSet admissible_digits(const Beta& beta, Point z, int depth = 0);

/// Region name of z in whichever regime beta belongs to.
std::string region_name(const Beta& beta, Point z, int depth = 0);

struct KStep {
    Point point;
    Digit digit;
    std::optional<Tape> consumed;
};

/// One step of K_beta for either regime. `step` only labels TapeExhausted.
KStep kbeta_advance(const Beta& beta, CoinTapes& tapes, Point z, std::size_t step = 0, int depth = 0);

/// One step of K_beta in the triangle regime; advances the tape cursors.
Step kbeta_step(const Beta& beta, CoinTapes& tapes, Point z);

struct ExpansionRecord {
    std::vector<Digit> digits;
    std::vector<std::size_t> visitsC;
    std::vector<std::size_t> visitsC012;
    Point final;
    /// Set when the run stopped early because a tape ran out.
    std::optional<Tape> exhausted;
};

/// Runs n steps of K_beta from z, advancing the tape cursors.
ExpansionRecord expand(const Beta& beta, CoinTapes& tapes, Point z, std::size_t n, int depth = 0);

std::vector<Digit> greedy_expansion(const Beta& beta, Point z, std::size_t n);
std::vector<Digit> lazy_expansion(const Beta& beta, Point z, std::size_t n);

/// Partial sum of digits[i] / beta^(i+1).
Point expansion_value(const Beta& beta, std::span<const Digit> digits);

/// Lexicographic comparison in the digit order q0 < q1 < q2.
std::strong_ordering compare_digits(std::span<const Digit> a, std::span<const Digit> b);

struct Visit {
    std::size_t step;
    Tape tape;
    std::uint8_t symbol;
};

struct CoinPrefixes {
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> upsilon;
    std::vector<Visit> visits;
};

/// Coin prefixes that make K_beta reproduce the given digits from z. Throws
/// InadmissibleDigit with the first step whose digit cannot start a
/// representation of the current orbit point.
CoinPrefixes coins_from_digits(const Beta& beta, Point z, std::span<const Digit> digits, int depth = 0);

/// Digits written over '0','1','2'; throws BadConfig otherwise.
std::vector<Digit> parse_digits(std::string_view s);
std::string digit_string(std::span<const Digit> digits);

}  // namespace fatgasket
