#pragma once

// The regime 3/2 < beta <= beta_sup, where the triple overlap disappears and
// the attractor has holes. Every hole is an image f_{q_i}^n(H) of the central
// triangle H; the images f_{q_i} f_{q_j}^n(H) (i != j) are covered by the
// piece f_{q_j}(S) and force the digit q_j.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "fatgasket/coins.hpp"
#include "fatgasket/geometry.hpp"

namespace fatgasket {

/// Root of c3 x^3 + c2 x^2 + c1 x + c0 on [lo, hi] with |p(root)| < 1e-12.
/// Throws NoSignChange if p(lo) and p(hi) have the same strict sign.
double solve_cubic(double c3, double c2, double c1, double c0, double lo, double hi);

struct Constants {
    double beta_star;    ///< root of x^3 - x^2 - 1 (~1.4656)
    double beta_sup;     ///< root of x^3 - 2x^2 + 2x - 2 (~1.5437)
    double lambda_star;  ///< root of x^3 - x^2 + x - 1/2 (~0.6478)
};

/// Computed once on first use.
const Constants& constants();

struct Triangle {
    std::array<Point, 3> v;
};

/// Image of a triangle's vertices under f_d.
Triangle f_apply(const Beta& beta, Digit d, const Triangle& t);

double diameter(const Triangle& t);
double signed_area(const Triangle& t);

/// Point in the closed triangle, allowing a slack of tol.
bool contains_closed(const Triangle& t, Point p, double tol = 0.0);

/// Point at distance more than eps from the triangle's complement.
bool in_erosion(const Triangle& t, Point p, double eps);

/// Separating-axis test on closed triangles. Triangles whose overlap is thinner
/// than tol along some edge normal count as disjoint (shared edges touch).
bool disjoint(const Triangle& a, const Triangle& b, double tol);

/// Vertices (1/b, 1/b), (1/b, s - 1/b), (s - 1/b, 1/b) of the open hole
/// H = {x < 1/b, y < 1/b, x + y > s}, s = 1/(b(b-1)). Radial regime only.
Triangle hole_triangle(const Beta& beta);

/// Open membership in H.
bool in_central_hole(const Beta& beta, Point z);

/// The set f_{head} f_{repeated}^n (H); no head means f_{repeated}^n (H).
struct HoleChain {
    std::optional<Digit> head;
    Digit repeated = Digit::Q0;
    unsigned n = 0;
};

bool hole_membership(const Beta& beta, Point z, const HoleChain& chain);

/// Vertex images of H along the chain.
Triangle chain_triangle(const Beta& beta, const HoleChain& chain);

/// Number of chain levels after which a chain image is smaller than 1e-9:
/// ceil(log(diam(Delta) / 1e-9) / log(beta)).
int default_depth(const Beta& beta);

enum class RegionR { E0, E1, E2, C01, C12, C02, Hole };

std::string_view to_string(RegionR r);

/// Empty for Hole.
DigitSet admissible_set(RegionR r);

/// Region before hole corrections: H itself is reported as Hole, the rest of
/// Delta splits into E~_i and C~_ij.
RegionR tilde_region(const Beta& beta, Point z, double tol = kHullTol);

/// Region with hole corrections up to the given chain depth.
RegionR classify_radial(const Beta& beta, Point z, int depth, double tol = kHullTol);
RegionR classify_radial(const Beta& beta, Point z);

/// Inside Delta and outside every f_{q_i}^n(H) with n <= depth. Exact only up
/// to the resolution of the depth.
bool in_attractor(const Beta& beta, Point z, int depth);

/// One step of the random transformation with a single binary coin. Throws
/// PointInHole if z lies in a hole, TapeExhausted if a switch region is hit
/// with an empty omega tape.
Step kbeta_radial_step(const Beta& beta, CoinTapes& tapes, Point z, int depth);
Step kbeta_radial_step(const Beta& beta, CoinTapes& tapes, Point z);

/// The affine map taking the equilateral-triangle IFS g_i onto f_{q_i}.
Point affine_l(const Beta& beta, Point z);

/// Vertex p_i = (2/3)(cos(2 pi i / 3), sin(2 pi i / 3)).
Point equilateral_vertex(int i);

/// g_i(z) = lambda z + (1 - lambda) p_i.
Point g_apply(double lambda, int i, Point z);

}  // namespace fatgasket
