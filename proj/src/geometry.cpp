#include "fatgasket/geometry.hpp"

#include <stdexcept>

#include "fatgasket/radial.hpp"

namespace fatgasket {

bool plane_less(Point a, Point b) {
    const double sa = a.x + a.y;
    const double sb = b.x + b.y;
    if (sa != sb) return sa < sb;
    return a.y < b.y;
}

Digit digit_from_index(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("digit index " + std::to_string(i));
    return static_cast<Digit>(i);
}

Digit DigitSet::nth(int k) const {
    for (Digit d : kDigits) {
        if (contains(d) && k-- == 0) return d;
    }
    throw std::out_of_range("DigitSet::nth");
}

std::string_view to_string(Regime r) {
    return r == Regime::Triangle ? "triangle" : "radial";
}

Regime regime_of(double beta) {
    return beta <= 1.5 ? Regime::Triangle : Regime::Radial;
}

Beta Beta::make(double value) {
    if (!std::isfinite(value) || value <= 1.0) {
        throw InvalidBeta("beta must exceed 1, got " + std::to_string(value));
    }
    if (value > constants().beta_sup) {
        throw InvalidBeta("beta must not exceed beta_sup ~ 1.5437, got " + std::to_string(value));
    }
    return Beta(value, regime_of(value));
}

Beta Beta::make(double value, Regime expected) {
    Beta b = make(value);
    if (b.regime() != expected) {
        throw BadConfig("beta " + std::to_string(value) + " lies in the " + std::string(to_string(b.regime())) +
                        " regime, not " + std::string(to_string(expected)));
    }
    return b;
}

Point f_apply(const Beta& beta, Digit d, Point z) {
    return (z + value(d)) / beta.value();
}

Point f_inverse(const Beta& beta, Digit d, Point z) {
    return beta.value() * z - value(d);
}

bool in_hull(const Beta& beta, Point z, double tol) {
    return z.x >= -tol && z.y >= -tol && z.x + z.y <= beta.leg() + tol;
}

Point snap_to_hull(const Beta& beta, Point z, double tol) {
    if (!is_finite(z)) throw OutsideHull("non-finite coordinates");
    if (!in_hull(beta, z, tol)) {
        throw OutsideHull("(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")");
    }
    if (z.x < 0.0) z.x = 0.0;
    if (z.y < 0.0) z.y = 0.0;
    const double excess = z.x + z.y - beta.leg();
    if (excess > 0.0) {
        z.x = std::max(0.0, z.x - excess / 2);
        z.y = std::max(0.0, beta.leg() - z.x);
        if (z.x + z.y > beta.leg()) z.y = std::nextafter(z.y, 0.0);
    }
    return z;
}

std::string_view to_string(RegionT r) {
    switch (r) {
        case RegionT::E0: return "E0";
        case RegionT::E1: return "E1";
        case RegionT::E2: return "E2";
        case RegionT::C01: return "C01";
        case RegionT::C12: return "C12";
        case RegionT::C02: return "C02";
        case RegionT::C012: return "C012";
    }
    return "?";
}

DigitSet admissible_set(RegionT r) {
    switch (r) {
        case RegionT::E0: return {Digit::Q0};
        case RegionT::E1: return {Digit::Q1};
        case RegionT::E2: return {Digit::Q2};
        case RegionT::C01: return {Digit::Q0, Digit::Q1};
        case RegionT::C12: return {Digit::Q1, Digit::Q2};
        case RegionT::C02: return {Digit::Q0, Digit::Q2};
        case RegionT::C012: return {Digit::Q0, Digit::Q1, Digit::Q2};
    }
    return {};
}

RegionT classify_region(const Beta& beta, Point z, double tol) {
    if (beta.regime() != Regime::Triangle) throw WrongRegime("classify_region needs 1 < beta <= 3/2");
    z = snap_to_hull(beta, z, tol);

    if (beta.degenerate_triple() && norm_inf(z - Point{2.0 / 3.0, 2.0 / 3.0}) <= 1e-12) return RegionT::C012;

    const double inv = beta.inv();
    const bool right = z.x >= inv;
    const bool top = z.y >= inv;
    const bool outer = z.x + z.y > beta.split();

    if (!right && !top) return RegionT::E0;
    if (right && !top) return outer ? RegionT::E1 : RegionT::C01;
    if (!right && top) return outer ? RegionT::E2 : RegionT::C02;
    return outer ? RegionT::C12 : RegionT::C012;
}

Step greedy_step(const Beta& beta, Point z, double tol) {
    z = snap_to_hull(beta, z, tol);
    const Digit d = admissible_set(classify_region(beta, z, tol)).highest();
    return {f_inverse(beta, d, z), d};
}

Step lazy_step(const Beta& beta, Point z, double tol) {
    z = snap_to_hull(beta, z, tol);
    const Digit d = admissible_set(classify_region(beta, z, tol)).lowest();
    return {f_inverse(beta, d, z), d};
}

Point psi(const Beta& beta, Point z) {
    return {z.x, beta.leg() - z.x - z.y};
}

}  // namespace fatgasket
