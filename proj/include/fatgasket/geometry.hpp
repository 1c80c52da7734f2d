#pragma once

// Geometry of the three-map IFS f_q(z) = (z + q) / beta on the plane: the
// convex hull Delta, the overlap partition for 1 < beta <= 3/2, the greedy and
// lazy maps, and the involution psi that conjugates them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "fatgasket/error.hpp"

namespace fatgasket {

/// Hull snapping tolerance used when callers do not pass one.
inline constexpr double kHullTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

inline double norm1(Point p) { return std::abs(p.x) + std::abs(p.y); }
inline double norm_inf(Point p) { return std::max(std::abs(p.x), std::abs(p.y)); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Total order on the plane: by x + y, ties broken by y.
bool plane_less(Point a, Point b);

enum class Digit : std::uint8_t { Q0 = 0, Q1 = 1, Q2 = 2 };

inline constexpr std::array<Digit, 3> kDigits = {Digit::Q0, Digit::Q1, Digit::Q2};

constexpr int index(Digit d) { return static_cast<int>(d); }

/// Throws std::out_of_range unless 0 <= i <= 2.
Digit digit_from_index(int i);

constexpr Point value(Digit d) {
    switch (d) {
        case Digit::Q0: return {0.0, 0.0};
        case Digit::Q1: return {1.0, 0.0};
        case Digit::Q2: return {0.0, 1.0};
    }
    return {};
}

/// Small set of digits, iterated in increasing order.
class DigitSet {
public:
    constexpr DigitSet() = default;
    constexpr DigitSet(std::initializer_list<Digit> ds) {
        for (Digit d : ds) insert(d);
    }

    constexpr void insert(Digit d) { bits_ |= static_cast<std::uint8_t>(1u << index(d)); }
    constexpr bool contains(Digit d) const { return (bits_ >> index(d)) & 1u; }
    constexpr int size() const { return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
    constexpr bool empty() const { return bits_ == 0; }

    /// k-th smallest member; precondition k < size().
    Digit nth(int k) const;
    Digit lowest() const { return nth(0); }
    Digit highest() const { return nth(size() - 1); }

    friend constexpr bool operator==(DigitSet, DigitSet) = default;

private:
    std::uint8_t bits_ = 0;
};

enum class Regime { Triangle, Radial };

std::string_view to_string(Regime r);

/// The base beta together with its regime. Valid for 1 < beta <= beta_sup,
/// where beta_sup ~ 1.5437 is the real root of x^3 - 2x^2 + 2x - 2.
class Beta {
public:
    /// Regime detected from the value: Triangle for beta <= 3/2, Radial above.
    static Beta make(double value);
    /// As make(value) but asserts the regime; throws BadConfig if inconsistent.
    static Beta make(double value, Regime expected);

    double value() const { return value_; }
    Regime regime() const { return regime_; }

    double inv() const { return 1.0 / value_; }
    /// Leg length 1/(beta-1) of the hull Delta.
    double leg() const { return 1.0 / (value_ - 1.0); }
    /// The anti-diagonal 1/(beta(beta-1)) bounding f_{q0}(Delta).
    double split() const { return 1.0 / (value_ * (value_ - 1.0)); }

    /// True for beta == 3/2, where the triple overlap is a single point.
    bool degenerate_triple() const { return value_ == 1.5; }

private:
    Beta(double v, Regime r) : value_(v), regime_(r) {}
    double value_;
    Regime regime_;
};

Regime regime_of(double beta);

Point f_apply(const Beta& beta, Digit d, Point z);
Point f_inverse(const Beta& beta, Digit d, Point z);

/// Closed-hull membership with a slack of tol on every side.
bool in_hull(const Beta& beta, Point z, double tol = kHullTol);

/// Moves a point that lies within tol of Delta onto Delta; points already in
/// Delta are returned unchanged. Throws OutsideHull for anything farther out
/// or non-finite.
Point snap_to_hull(const Beta& beta, Point z, double tol = kHullTol);

enum class RegionT { E0, E1, E2, C01, C12, C02, C012 };

inline constexpr std::array<RegionT, 7> kRegionsT = {RegionT::E0,  RegionT::E1,  RegionT::E2,  RegionT::C01,
                                                     RegionT::C12, RegionT::C02, RegionT::C012};

std::string_view to_string(RegionT r);

/// Digits that can start a representation of a point in the region.
DigitSet admissible_set(RegionT r);

/// Region of z in the triangle regime. Throws WrongRegime for a radial beta
/// and OutsideHull if z is not within tol of Delta.
RegionT classify_region(const Beta& beta, Point z, double tol = kHullTol);

struct Step {
    Point point;
    Digit digit;
};

/// Greedy map: the largest admissible digit.
Step greedy_step(const Beta& beta, Point z, double tol = kHullTol);
/// Lazy map: the smallest admissible digit.
Step lazy_step(const Beta& beta, Point z, double tol = kHullTol);

/// psi(x, y) = (x, 1/(beta-1) - x - y); an involution of Delta.
Point psi(const Beta& beta, Point z);

}  // namespace fatgasket
