#pragma once

// Ulam discretization of the transfer operator on a triangular tiling of
// Delta, and the stationary density of the resulting Markov matrix.

#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fatgasket/geometry.hpp"
#include "fatgasket/radial.hpp"
#include "fatgasket/random_map.hpp"

namespace fatgasket {

using TransitionMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct Cell {
    Triangle shape;
    double area;
    Point centroid;
};

/// Cells and a row-stochastic matrix (rows are source cells). Grids built by
/// triangulate() split each square of an n x n grid over [0, 1/(beta-1)]^2
/// along its anti-diagonal and keep the n^2 triangles inside Delta.
class UlamGrid {
public:
    /// Cell layout only; the matrix is empty until one is attached.
    static UlamGrid triangulate(const Beta& beta, int n);

    /// Arbitrary cells with a given matrix. locate() is unavailable.
    UlamGrid(std::vector<Cell> cells, TransitionMatrix matrix);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    const TransitionMatrix& matrix() const { return matrix_; }
    int subdivisions() const { return n_; }

    void set_matrix(TransitionMatrix matrix);

    /// Index of the cell containing z, after clamping z into Delta.
    std::size_t locate(Point z) const;

    /// Transfer of a density vector (per unit area): mass moves along rows.
    std::vector<double> transfer(std::span<const double> density) const;

    /// Mass vector (density times area).
    std::vector<double> mass(std::span<const double> density) const;

private:
    UlamGrid() = default;

    std::vector<Cell> cells_;
    TransitionMatrix matrix_;
    int n_ = 0;
    double leg_ = 0.0;
};

enum class MapKind { Greedy, Lazy, RandomR };

struct UlamMap {
    MapKind kind = MapKind::Greedy;
    std::optional<RandomMapSpec> random;

    static UlamMap greedy() { return {MapKind::Greedy, std::nullopt}; }
    static UlamMap lazy() { return {MapKind::Lazy, std::nullopt}; }
    static UlamMap random_map(const RandomMapSpec& spec) { return {MapKind::RandomR, spec}; }
};

/// Monte Carlo Ulam matrix: row r holds the fraction of stratified sample
/// points of cell r landing in each cell (weighted over the six branches for
/// the random map). Samples per cell are rounded up to a square k*k, one
/// jittered point per sub-triangle of a k-fold subdivision. Cells are sampled
/// on `threads` workers (0 = hardware concurrency), each cell from its own
/// stream, so the result does not depend on the thread count.
UlamGrid build_ulam(const Beta& beta, const UlamMap& map, int n, int samples, std::uint64_t seed,
                    unsigned threads = 0);

struct StationaryResult {
    std::vector<double> density;
    double residual;
    std::size_t iterations;
};

/// Power iteration from the uniform density with L1 normalization. Returns a
/// density f with sum(f * area) = 1 and ||transfer(f) - f||_1 < tol; throws
/// NoConvergence after maxiter iterations.
StationaryResult stationary_density(const UlamGrid& grid, double tol = 1e-10, std::size_t maxiter = 10000);

/// 0.5 * sum |a_i - b_i| of two mass vectors, each normalized to total 1.
double tv_distance(std::span<const double> a, std::span<const double> b);

}  // namespace fatgasket
