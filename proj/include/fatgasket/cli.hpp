#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fatgasket/geometry.hpp"
#include "fatgasket/ulam.hpp"

namespace fatgasket::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInadmissible = 2,
    kTapeExhausted = 3,
    kNoConvergence = 4,
};

enum class Format { Pgm, Csv, Json };

struct RunConfig {
    std::string command;
    double beta = 1.4;
    std::optional<Regime> regime;
    std::uint64_t seed = 1;
    int grid = 64;
    std::size_t samples = 1'000'000;
    int depth = 0;
    std::string out;
    Format format = Format::Json;

    // density
    std::string map = "greedy";
    double p = 0.5;
    double s = 1.0 / 3.0;
    double t = 1.0 / 3.0;
    int cell_samples = 64;
    double tol = 1e-10;
    std::size_t maxiter = 10000;
    int size = 256;

    // orbit / coins
    Point point{};
    std::string omega;
    std::string upsilon;
    std::string digits;
    std::size_t steps = 20;
};

/// Validated Beta for the dynamics commands (1 < beta <= beta_sup).
Beta dynamics_beta(const RunConfig& config);

/// Chaos-game hit counts on an n x n raster over [0, 1/(beta-1)]^2, row 0 at
/// the top. Uniform digit choice, burn-in of 100 steps. Any 1 < beta <= 2.
std::vector<std::uint64_t> render_counts(double beta, int n, std::size_t points, std::uint64_t seed);

/// Binary PGM: "P5\n<w> <h>\n255\n" followed by row-major bytes.
void write_pgm(std::ostream& os, int width, int height, const std::vector<std::uint8_t>& pixels);

/// Empty pixels stay 0; others scale linearly to 1..255 by count / max.
std::vector<std::uint8_t> counts_to_pixels(const std::vector<std::uint64_t>& counts);

struct DensityRun {
    UlamGrid grid;
    StationaryResult result;
};

DensityRun compute_density(const RunConfig& config);

void cmd_render(const RunConfig& config, std::ostream& os);
void cmd_density(const RunConfig& config, std::ostream& os);
void cmd_orbit(const RunConfig& config, std::ostream& os);
void cmd_coins(const RunConfig& config, std::ostream& os);
void cmd_constants(std::ostream& os);

/// Parses argv, runs the command and maps errors to exit codes. Output goes
/// to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fatgasket::cli
