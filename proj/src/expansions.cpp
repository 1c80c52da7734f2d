#include "fatgasket/expansions.hpp"

#include "fatgasket/radial.hpp"

namespace fatgasket {

namespace {

int resolve_depth(const Beta& beta, int depth) {
    return depth > 0 ? depth : default_depth(beta);
}

}  // namespace

DigitSet admissible_digits(const Beta& beta, Point z, int depth) {
    if (beta.regime() == Regime::Triangle) return admissible_set(classify_region(beta, z));
    return admissible_set(classify_radial(beta, z, resolve_depth(beta, depth)));
}

std::string region_name(const Beta& beta, Point z, int depth) {
    if (beta.regime() == Regime::Triangle) return std::string(to_string(classify_region(beta, z)));
    return std::string(to_string(classify_radial(beta, z, resolve_depth(beta, depth))));
}

KStep kbeta_advance(const Beta& beta, CoinTapes& tapes, Point z, std::size_t step, int depth) {
    z = snap_to_hull(beta, z);
    const DigitSet allowed = admissible_digits(beta, z, depth);
    if (allowed.empty()) {
        throw PointInHole("(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")");
    }
    const CoinChoice choice = choose_digit(tapes, allowed, step);
    return {f_inverse(beta, choice.digit, z), choice.digit, choice.consumed};
}

Step kbeta_step(const Beta& beta, CoinTapes& tapes, Point z) {
    if (beta.regime() != Regime::Triangle) throw WrongRegime("kbeta_step needs 1 < beta <= 3/2");
    const KStep s = kbeta_advance(beta, tapes, z);
    return {s.point, s.digit};
}

ExpansionRecord expand(const Beta& beta, CoinTapes& tapes, Point z, std::size_t n, int depth) {
    ExpansionRecord rec;
    rec.digits.reserve(n);
    depth = beta.regime() == Regime::Radial ? resolve_depth(beta, depth) : 0;
    for (std::size_t j = 0; j < n; ++j) {
        KStep s{};
        try {
            s = kbeta_advance(beta, tapes, z, j, depth);
        } catch (const TapeExhausted& e) {
            rec.exhausted = e.which();
            break;
        }
        rec.digits.push_back(s.digit);
        if (s.consumed == Tape::Omega) rec.visitsC.push_back(j);
        if (s.consumed == Tape::Upsilon) rec.visitsC012.push_back(j);
        z = s.point;
    }
    rec.final = z;
    return rec;
}

std::vector<Digit> greedy_expansion(const Beta& beta, Point z, std::size_t n) {
    std::vector<Digit> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Step s = greedy_step(beta, z);
        out.push_back(s.digit);
        z = s.point;
    }
    return out;
}

std::vector<Digit> lazy_expansion(const Beta& beta, Point z, std::size_t n) {
    std::vector<Digit> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Step s = lazy_step(beta, z);
        out.push_back(s.digit);
        z = s.point;
    }
    return out;
}

Point expansion_value(const Beta& beta, std::span<const Digit> digits) {
    // Horner from the tail keeps every partial result inside Delta.
    Point v{};
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = f_apply(beta, *it, v);
    return v;
}

std::strong_ordering compare_digits(std::span<const Digit> a, std::span<const Digit> b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return index(a[i]) <=> index(b[i]);
    }
    return a.size() <=> b.size();
}

CoinPrefixes coins_from_digits(const Beta& beta, Point z, std::span<const Digit> digits, int depth) {
    CoinPrefixes out;
    depth = beta.regime() == Regime::Radial ? resolve_depth(beta, depth) : 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        z = snap_to_hull(beta, z);
        const DigitSet allowed = admissible_digits(beta, z, depth);
        const Digit d = digits[j];
        if (!allowed.contains(d)) throw InadmissibleDigit(j);
        if (allowed.size() == 2) {
            const std::uint8_t sym = d == allowed.highest() ? 1 : 0;
            out.omega.push_back(sym);
            out.visits.push_back({j, Tape::Omega, sym});
        } else if (allowed.size() == 3) {
            const auto sym = static_cast<std::uint8_t>(index(d));
            out.upsilon.push_back(sym);
            out.visits.push_back({j, Tape::Upsilon, sym});
        }
        z = f_inverse(beta, d, z);
    }
    return out;
}

std::vector<Digit> parse_digits(std::string_view s) {
    std::vector<Digit> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '2') throw BadConfig("digit string has invalid symbol '" + std::string(1, c) + "'");
        out.push_back(digit_from_index(c - '0'));
    }
    return out;
}

std::string digit_string(std::span<const Digit> digits) {
    std::string s;
    s.reserve(digits.size());
    for (Digit d : digits) s.push_back(static_cast<char>('0' + index(d)));
    return s;
}

}  // namespace fatgasket
