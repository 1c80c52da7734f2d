#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatgasket/error.hpp"
#include "fatgasket/geometry.hpp"

namespace fatgasket {

/// Finite coin tapes driving the random transformation. omega is the binary
/// tape read on two-way switch regions, upsilon the ternary tape read on the
/// triple overlap. k and l count the symbols consumed so far.
struct CoinTapes {
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> upsilon;
    std::size_t k = 0;
    std::size_t l = 0;

    /// Parses tapes written over '0','1' and '0','1','2'; throws BadConfig
    /// on any other character.
    static CoinTapes from_strings(std::string_view omega, std::string_view upsilon);

    std::size_t omega_left() const { return omega.size() - k; }
    std::size_t upsilon_left() const { return upsilon.size() - l; }
};

std::string tape_string(const std::vector<std::uint8_t>& tape);

/// Picks a digit from the admissible set, consuming one omega symbol on a
/// two-element set (0 -> smaller digit, 1 -> larger) and one upsilon symbol on
/// the full set (symbol i -> q_i). Returns the tape consumed, if any.
/// Throws TapeExhausted tagged with `step` when the needed tape is empty.
struct CoinChoice {
    Digit digit;
    std::optional<Tape> consumed;
};

CoinChoice choose_digit(CoinTapes& tapes, DigitSet admissible, std::size_t step);

}  // namespace fatgasket
