#include "fatgasket/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fatgasket {

double solve_cubic(double c3, double c2, double c1, double c0, double lo, double hi) {
    auto p = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    auto dp = [&](double x) { return (3.0 * c3 * x + 2.0 * c2) * x + c1; };

    if (lo > hi) std::swap(lo, hi);
    double plo = p(lo);
    const double phi = p(hi);
    if (plo == 0.0) return lo;
    if (phi == 0.0) return hi;
    if ((plo < 0.0) == (phi < 0.0)) throw NoSignChange();

    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double pm = p(mid);
        if (pm == 0.0) return mid;
        if ((pm < 0.0) == (plo < 0.0)) {
            lo = mid;
            plo = pm;
        } else {
            hi = mid;
        }
    }
    // Newton polish from the bracket midpoint; keep the best residual.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double d = dp(x);
        if (d == 0.0) break;
        const double next = x - p(x) / d;
        if (std::abs(p(next)) >= std::abs(p(x))) break;
        x = next;
    }
    return x;
}

const Constants& constants() {
    static const Constants c{
        solve_cubic(1.0, -1.0, 0.0, -1.0, 1.0, 2.0),
        solve_cubic(1.0, -2.0, 2.0, -2.0, 1.0, 2.0),
        solve_cubic(1.0, -1.0, 1.0, -0.5, 0.0, 1.0),
    };
    return c;
}

Triangle f_apply(const Beta& beta, Digit d, const Triangle& t) {
    return {{f_apply(beta, d, t.v[0]), f_apply(beta, d, t.v[1]), f_apply(beta, d, t.v[2])}};
}

double diameter(const Triangle& t) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Point e = t.v[(i + 1) % 3] - t.v[i];
        d = std::max(d, std::hypot(e.x, e.y));
    }
    return d;
}

double signed_area(const Triangle& t) {
    const Point a = t.v[1] - t.v[0];
    const Point b = t.v[2] - t.v[0];
    return 0.5 * (a.x * b.y - a.y * b.x);
}

namespace {

// Distance of p from edge i's supporting line, positive towards the interior.
double inward_distance(const Triangle& t, int i, Point p) {
    const Point a = t.v[i];
    const Point b = t.v[(i + 1) % 3];
    const Point e = b - a;
    const double len = std::hypot(e.x, e.y);
    const double orient = signed_area(t) >= 0.0 ? 1.0 : -1.0;
    const Point r = p - a;
    return orient * (e.x * r.y - e.y * r.x) / len;
}

bool separated_along_edges_of(const Triangle& a, const Triangle& b, double tol) {
    for (int i = 0; i < 3; ++i) {
        const Point e = a.v[(i + 1) % 3] - a.v[i];
        const double len = std::hypot(e.x, e.y);
        const Point n{-e.y / len, e.x / len};
        double amin = INFINITY, amax = -INFINITY, bmin = INFINITY, bmax = -INFINITY;
        for (const Point& p : a.v) {
            const double s = n.x * p.x + n.y * p.y;
            amin = std::min(amin, s);
            amax = std::max(amax, s);
        }
        for (const Point& p : b.v) {
            const double s = n.x * p.x + n.y * p.y;
            bmin = std::min(bmin, s);
            bmax = std::max(bmax, s);
        }
        if (amax <= bmin + tol || bmax <= amin + tol) return true;
    }
    return false;
}

}  // namespace

bool contains_closed(const Triangle& t, Point p, double tol) {
    for (int i = 0; i < 3; ++i) {
        if (inward_distance(t, i, p) < -tol) return false;
    }
    return true;
}

bool in_erosion(const Triangle& t, Point p, double eps) {
    for (int i = 0; i < 3; ++i) {
        if (inward_distance(t, i, p) <= eps) return false;
    }
    return true;
}

bool disjoint(const Triangle& a, const Triangle& b, double tol) {
    return separated_along_edges_of(a, b, tol) || separated_along_edges_of(b, a, tol);
}

namespace {

void require_radial(const Beta& beta, const char* what) {
    if (beta.regime() != Regime::Radial) throw WrongRegime(std::string(what) + " needs 3/2 < beta <= beta_sup");
}

}  // namespace

Triangle hole_triangle(const Beta& beta) {
    require_radial(beta, "hole_triangle");
    const double inv = beta.inv();
    const double s = beta.split();
    return {{Point{inv, inv}, Point{inv, s - inv}, Point{s - inv, inv}}};
}

bool in_central_hole(const Beta& beta, Point z) {
    const double inv = beta.inv();
    return z.x < inv && z.y < inv && z.x + z.y > beta.split();
}

bool hole_membership(const Beta& beta, Point z, const HoleChain& chain) {
    require_radial(beta, "hole_membership");
    if (chain.head) z = f_inverse(beta, *chain.head, z);
    for (unsigned i = 0; i < chain.n; ++i) z = f_inverse(beta, chain.repeated, z);
    return in_central_hole(beta, z);
}

Triangle chain_triangle(const Beta& beta, const HoleChain& chain) {
    Triangle t = hole_triangle(beta);
    for (unsigned i = 0; i < chain.n; ++i) t = f_apply(beta, chain.repeated, t);
    if (chain.head) t = f_apply(beta, *chain.head, t);
    return t;
}

int default_depth(const Beta& beta) {
    const double diam = std::numbers::sqrt2 * beta.leg();
    return static_cast<int>(std::ceil(std::log(diam / 1e-9) / std::log(beta.value())));
}

std::string_view to_string(RegionR r) {
    switch (r) {
        case RegionR::E0: return "E0";
        case RegionR::E1: return "E1";
        case RegionR::E2: return "E2";
        case RegionR::C01: return "C01";
        case RegionR::C12: return "C12";
        case RegionR::C02: return "C02";
        case RegionR::Hole: return "Hole";
    }
    return "?";
}

DigitSet admissible_set(RegionR r) {
    switch (r) {
        case RegionR::E0: return {Digit::Q0};
        case RegionR::E1: return {Digit::Q1};
        case RegionR::E2: return {Digit::Q2};
        case RegionR::C01: return {Digit::Q0, Digit::Q1};
        case RegionR::C12: return {Digit::Q1, Digit::Q2};
        case RegionR::C02: return {Digit::Q0, Digit::Q2};
        case RegionR::Hole: return {};
    }
    return {};
}

RegionR tilde_region(const Beta& beta, Point z, double tol) {
    require_radial(beta, "tilde_region");
    z = snap_to_hull(beta, z, tol);
    const double inv = beta.inv();
    const bool right = z.x >= inv;
    const bool top = z.y >= inv;
    const bool outer = z.x + z.y > beta.split();

    if (!right && !top) return outer ? RegionR::Hole : RegionR::E0;
    if (right && !top) return outer ? RegionR::E1 : RegionR::C01;
    if (!right && top) return outer ? RegionR::E2 : RegionR::C02;
    return RegionR::C12;
}

namespace {

// True if z lies in f_d^n(H) for some first <= n <= depth. The backward orbit
// under f_d^{-1} leaves Delta for good once it leaves, since f_d^{-1}(Delta)
// contains Delta.
bool in_power_chain(const Beta& beta, Point z, Digit d, int first, int depth) {
    for (int n = 0; n <= depth; ++n) {
        if (n >= first && in_central_hole(beta, z)) return true;
        z = f_inverse(beta, d, z);
        if (!in_hull(beta, z)) return false;
    }
    return false;
}

bool in_any_hole(const Beta& beta, Point z, int depth) {
    if (in_central_hole(beta, z)) return true;
    for (Digit d : kDigits) {
        if (in_power_chain(beta, z, d, 1, depth)) return true;
    }
    return false;
}

std::pair<Digit, Digit> switch_pair(RegionR r) {
    switch (r) {
        case RegionR::C01: return {Digit::Q0, Digit::Q1};
        case RegionR::C12: return {Digit::Q1, Digit::Q2};
        default: return {Digit::Q0, Digit::Q2};
    }
}

RegionR equality_region(Digit d) {
    switch (d) {
        case Digit::Q0: return RegionR::E0;
        case Digit::Q1: return RegionR::E1;
        case Digit::Q2: return RegionR::E2;
    }
    return RegionR::E0;
}

}  // namespace

RegionR classify_radial(const Beta& beta, Point z, int depth, double tol) {
    require_radial(beta, "classify_radial");
    z = snap_to_hull(beta, z, tol);
    if (in_any_hole(beta, z, depth)) return RegionR::Hole;

    const RegionR t = tilde_region(beta, z, tol);
    if (t != RegionR::C01 && t != RegionR::C12 && t != RegionR::C02) return t;

    // z in f_i f_j^n(H), n >= 1, forces q_j, and symmetrically.
    const auto [i, j] = switch_pair(t);
    if (in_power_chain(beta, f_inverse(beta, i, z), j, 1, depth)) return equality_region(j);
    if (in_power_chain(beta, f_inverse(beta, j, z), i, 1, depth)) return equality_region(i);
    return t;
}

RegionR classify_radial(const Beta& beta, Point z) {
    return classify_radial(beta, z, default_depth(beta));
}

bool in_attractor(const Beta& beta, Point z, int depth) {
    require_radial(beta, "in_attractor");
    if (!is_finite(z) || !in_hull(beta, z, 0.0)) return false;
    return !in_any_hole(beta, z, depth);
}

Step kbeta_radial_step(const Beta& beta, CoinTapes& tapes, Point z, int depth) {
    require_radial(beta, "kbeta_radial_step");
    z = snap_to_hull(beta, z);
    const RegionR r = classify_radial(beta, z, depth);
    if (r == RegionR::Hole) {
        throw PointInHole("(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")");
    }
    const Digit d = choose_digit(tapes, admissible_set(r), 0).digit;
    return {f_inverse(beta, d, z), d};
}

Step kbeta_radial_step(const Beta& beta, CoinTapes& tapes, Point z) {
    return kbeta_radial_step(beta, tapes, z, default_depth(beta));
}

Point affine_l(const Beta& beta, Point z) {
    const double c = beta.leg();
    const double h = std::numbers::sqrt3 / 2.0;
    return {c * (-0.5 * z.x + h * z.y) + c / 3.0, c * (-0.5 * z.x - h * z.y) + c / 3.0};
}

Point equilateral_vertex(int i) {
    const double a = 2.0 * std::numbers::pi * i / 3.0;
    return {2.0 / 3.0 * std::cos(a), 2.0 / 3.0 * std::sin(a)};
}

Point g_apply(double lambda, int i, Point z) {
    return lambda * z + (1.0 - lambda) * equilateral_vertex(i);
}

}  // namespace fatgasket
