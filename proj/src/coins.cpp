#include "fatgasket/coins.hpp"

namespace fatgasket {

namespace {

std::vector<std::uint8_t> parse_tape(std::string_view s, char max_symbol, const char* name) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > max_symbol) {
            throw BadConfig(std::string(name) + " tape has invalid symbol '" + std::string(1, c) + "'");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

}  // namespace

CoinTapes CoinTapes::from_strings(std::string_view omega, std::string_view upsilon) {
    CoinTapes t;
    t.omega = parse_tape(omega, '1', "omega");
    t.upsilon = parse_tape(upsilon, '2', "upsilon");
    return t;
}

std::string tape_string(const std::vector<std::uint8_t>& tape) {
    std::string s;
    s.reserve(tape.size());
    for (auto sym : tape) s.push_back(static_cast<char>('0' + sym));
    return s;
}

CoinChoice choose_digit(CoinTapes& tapes, DigitSet admissible, std::size_t step) {
    switch (admissible.size()) {
        case 1:
            return {admissible.lowest(), std::nullopt};
        case 2: {
            if (tapes.k >= tapes.omega.size()) throw TapeExhausted(Tape::Omega, step);
            const auto sym = tapes.omega[tapes.k++];
            return {sym == 0 ? admissible.lowest() : admissible.highest(), Tape::Omega};
        }
        case 3: {
            if (tapes.l >= tapes.upsilon.size()) throw TapeExhausted(Tape::Upsilon, step);
            const auto sym = tapes.upsilon[tapes.l++];
            return {digit_from_index(sym), Tape::Upsilon};
        }
        default:
            throw PointInHole("no admissible digit");
    }
}

}  // namespace fatgasket
