#include "fatgasket/ulam.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "fatgasket/rng.hpp"

namespace fatgasket {

UlamGrid UlamGrid::triangulate(const Beta& beta, int n) {
    if (n < 1) throw BadConfig("grid needs at least one subdivision");
    UlamGrid g;
    g.n_ = n;
    g.leg_ = beta.leg();
    const double h = g.leg_ / n;
    g.cells_.reserve(static_cast<std::size_t>(n) * n);
    auto add = [&](Point a, Point b, Point c) {
        Cell cell{{{a, b, c}}, 0.0, (1.0 / 3.0) * (a + b + c)};
        cell.area = std::abs(signed_area(cell.shape));
        if (cell.area >= 1e-12) g.cells_.push_back(cell);
    };
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a + b <= n - 1; ++a) {
            const Point p00{a * h, b * h}, p10{(a + 1) * h, b * h}, p01{a * h, (b + 1) * h},
                p11{(a + 1) * h, (b + 1) * h};
            add(p00, p10, p01);
            if (a + b <= n - 2) add(p11, p01, p10);
        }
    }
    return g;
}

UlamGrid::UlamGrid(std::vector<Cell> cells, TransitionMatrix matrix) : cells_(std::move(cells)) {
    set_matrix(std::move(matrix));
}

void UlamGrid::set_matrix(TransitionMatrix matrix) {
    if (matrix.rows() != static_cast<Eigen::Index>(cells_.size()) ||
        matrix.cols() != static_cast<Eigen::Index>(cells_.size())) {
        throw BadConfig("transition matrix does not match the cell count");
    }
    matrix_ = std::move(matrix);
    matrix_.makeCompressed();
}

std::size_t UlamGrid::locate(Point z) const {
    if (n_ == 0) throw BadConfig("locate() needs a triangulated grid");
    const double x = std::max(0.0, z.x);
    const double y = std::max(0.0, z.y);
    const double u = x / leg_ * n_;
    const double v = y / leg_ * n_;
    int a = std::min(static_cast<int>(u), n_ - 1);
    int b = std::min(static_cast<int>(v), n_ - 1);
    bool upper = (u - a) + (v - b) > 1.0;
    while (a + b > n_ - 1) {  // beyond the hypotenuse: fall back onto the last diagonal
        if (a >= b) --a; else --b;
        upper = false;
    }
    if (a + b == n_ - 1) upper = false;

    // Row b holds squares a = 0..n-1-b, two cells each except the last.
    std::size_t idx = 0;
    for (int r = 0; r < b; ++r) idx += 2 * static_cast<std::size_t>(n_ - r) - 1;
    return idx + 2 * static_cast<std::size_t>(a) + (upper ? 1 : 0);
}

std::vector<double> UlamGrid::mass(std::span<const double> density) const {
    std::vector<double> m(cells_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = density[i] * cells_[i].area;
    return m;
}

std::vector<double> UlamGrid::transfer(std::span<const double> density) const {
    const std::vector<double> m = mass(density);
    const Eigen::Map<const Eigen::VectorXd> mv(m.data(), static_cast<Eigen::Index>(m.size()));
    const Eigen::VectorXd next = matrix_.transpose() * mv;
    std::vector<double> out(cells_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = next[static_cast<Eigen::Index>(i)] / cells_[i].area;
    return out;
}

namespace {

// One jittered point in each of the k*k similar sub-triangles of t.
template <class Visit>
void stratified_points(const Triangle& t, int k, rng::Stream& stream, Visit&& visit) {
    const Point e1 = (1.0 / k) * (t.v[1] - t.v[0]);
    const Point e2 = (1.0 / k) * (t.v[2] - t.v[0]);
    auto sample = [&](Point corner, Point d1, Point d2) {
        double u = stream.uniform();
        double v = stream.uniform();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        visit(corner + u * d1 + v * d2);
    };
    for (int i = 0; i < k; ++i) {
        for (int j = 0; i + j < k; ++j) {
            sample(t.v[0] + i * e1 + j * e2, e1, e2);
            if (i + j <= k - 2) sample(t.v[0] + (i + 1) * e1 + (j + 1) * e2, -1.0 * e1, -1.0 * e2);
        }
    }
}

using Row = std::vector<std::pair<std::size_t, double>>;

Row build_row(const UlamGrid& grid, const Beta& beta, const UlamMap& map, std::size_t cell, int k,
              std::uint64_t seed) {
    rng::Stream stream(seed, cell);
    Row hits;
    hits.reserve(static_cast<std::size_t>(k) * k * (map.kind == MapKind::RandomR ? 6 : 1));
    stratified_points(grid.cells()[cell].shape, k, stream, [&](Point p) {
        p = snap_to_hull(beta, p);
        switch (map.kind) {
            case MapKind::Greedy: hits.emplace_back(grid.locate(greedy_step(beta, p).point), 1.0); break;
            case MapKind::Lazy: hits.emplace_back(grid.locate(lazy_step(beta, p).point), 1.0); break;
            case MapKind::RandomR:
                for (int b = 1; b <= 6; ++b) {
                    hits.emplace_back(grid.locate(tau(*map.random, b, p)), map.random->weights()[b - 1]);
                }
                break;
        }
    });
    std::sort(hits.begin(), hits.end());
    Row row;
    double total = 0.0;
    for (const auto& [c, w] : hits) {
        total += w;
        if (!row.empty() && row.back().first == c) row.back().second += w;
        else row.emplace_back(c, w);
    }
    for (auto& entry : row) entry.second /= total;
    return row;
}

}  // namespace

UlamGrid build_ulam(const Beta& beta, const UlamMap& map, int n, int samples, std::uint64_t seed, unsigned threads) {
    if (n < 2) throw BadConfig("Ulam grid needs n >= 2");
    if (samples < 16) throw BadConfig("Ulam grid needs at least 16 samples per cell");
    if (map.kind == MapKind::RandomR && !map.random) throw BadConfig("random map selected without weights");
    if (map.kind != MapKind::RandomR && beta.regime() != Regime::Triangle) {
        throw WrongRegime("greedy and lazy maps need 1 < beta <= 3/2");
    }

    UlamGrid grid = UlamGrid::triangulate(beta, n);
    const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(samples))));
    const std::size_t cells = grid.size();
    std::vector<Row> rows(cells);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t c = w; c < cells; c += threads) rows[c] = build_row(grid, beta, map, c, k, seed);
            });
        }
    }

    std::vector<Eigen::Triplet<double>> triplets;
    for (std::size_t r = 0; r < cells; ++r) {
        for (const auto& [c, w] : rows[r]) {
            triplets.emplace_back(static_cast<int>(r), static_cast<int>(c), w);
        }
    }
    TransitionMatrix m(static_cast<Eigen::Index>(cells), static_cast<Eigen::Index>(cells));
    m.setFromTriplets(triplets.begin(), triplets.end());
    grid.set_matrix(std::move(m));
    return grid;
}

StationaryResult stationary_density(const UlamGrid& grid, double tol, std::size_t maxiter) {
    const std::size_t n = grid.size();
    if (n == 0 || grid.matrix().rows() != static_cast<Eigen::Index>(n)) throw BadConfig("grid has no matrix");

    double total_area = 0.0;
    for (const Cell& c : grid.cells()) total_area += c.area;
    Eigen::VectorXd mass(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) mass[static_cast<Eigen::Index>(i)] = grid.cells()[i].area / total_area;

    const TransitionMatrix pt = grid.matrix().transpose();
    for (std::size_t it = 0; it < maxiter; ++it) {
        Eigen::VectorXd next = pt * mass;
        const double residual = (next - mass).lpNorm<1>();
        if (residual < tol) {
            std::vector<double> density(n);
            for (std::size_t i = 0; i < n; ++i) {
                density[i] = mass[static_cast<Eigen::Index>(i)] / grid.cells()[i].area;
            }
            return {std::move(density), residual, it};
        }
        next /= next.lpNorm<1>();
        mass = std::move(next);
    }
    throw NoConvergence(maxiter);
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw BadConfig("tv_distance needs equal sizes");
    double sa = 0.0, sb = 0.0;
    for (double v : a) sa += v;
    for (double v : b) sb += v;
    double tv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] / sa - b[i] / sb);
    return 0.5 * tv;
}

}  // namespace fatgasket
