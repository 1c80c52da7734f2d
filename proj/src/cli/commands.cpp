#include "fatgasket/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "fatgasket/expansions.hpp"
#include "fatgasket/radial.hpp"
#include "fatgasket/random_map.hpp"
#include "fatgasket/rng.hpp"

namespace fatgasket::cli {

using Json = nlohmann::ordered_json;

Beta dynamics_beta(const RunConfig& config) {
    try {
        return config.regime ? Beta::make(config.beta, *config.regime) : Beta::make(config.beta);
    } catch (const InvalidBeta& e) {
        throw BadConfig(e.what());
    }
}

std::vector<std::uint64_t> render_counts(double beta, int n, std::size_t points, std::uint64_t seed) {
    if (!(beta > 1.0 && beta <= 2.0)) throw BadConfig("render needs 1 < beta <= 2");
    if (n < 1) throw BadConfig("render needs a positive grid size");
    const double leg = 1.0 / (beta - 1.0);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * n, 0);
    rng::Stream stream(seed);
    Point z{};
    for (std::size_t i = 0; i < points + 100; ++i) {
        z = (z + value(digit_from_index(static_cast<int>(stream.below(3))))) / beta;
        if (i < 100) continue;
        const int col = std::clamp(static_cast<int>(z.x / leg * n), 0, n - 1);
        const int row = n - 1 - std::clamp(static_cast<int>(z.y / leg * n), 0, n - 1);
        ++counts[static_cast<std::size_t>(row) * n + col];
    }
    return counts;
}

void write_pgm(std::ostream& os, int width, int height, const std::vector<std::uint8_t>& pixels) {
    os << "P5\n" << width << ' ' << height << "\n255\n";
    os.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

std::vector<std::uint8_t> counts_to_pixels(const std::vector<std::uint64_t>& counts) {
    const std::uint64_t max = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    std::vector<std::uint8_t> px(counts.size(), 0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        px[i] = static_cast<std::uint8_t>(1 + (254 * counts[i]) / max);
    }
    return px;
}

namespace {

std::ostream& precise(std::ostream& os) {
    return os << std::setprecision(std::numeric_limits<double>::max_digits10);
}

UlamMap map_from_config(const RunConfig& config, const Beta& beta) {
    if (config.map == "greedy") return UlamMap::greedy();
    if (config.map == "lazy") return UlamMap::lazy();
    if (config.map == "random") return UlamMap::random_map(RandomMapSpec::make(beta, config.p, config.s, config.t));
    throw BadConfig("unknown map '" + config.map + "'");
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

}  // namespace

void cmd_render(const RunConfig& config, std::ostream& os) {
    const auto counts = render_counts(config.beta, config.grid, config.samples, config.seed);
    write_pgm(os, config.grid, config.grid, counts_to_pixels(counts));
}

DensityRun compute_density(const RunConfig& config) {
    const Beta beta = dynamics_beta(config);
    if (beta.regime() != Regime::Triangle) throw BadConfig("density needs 1 < beta <= 3/2");
    UlamGrid grid = build_ulam(beta, map_from_config(config, beta), config.grid, config.cell_samples, config.seed);
    StationaryResult result = stationary_density(grid, config.tol, config.maxiter);
    return {std::move(grid), std::move(result)};
}

void cmd_density(const RunConfig& config, std::ostream& os) {
    const DensityRun run = compute_density(config);
    const auto& cells = run.grid.cells();
    const auto& density = run.result.density;

    switch (config.format) {
        case Format::Csv: {
            precise(os) << "cell_index,cx,cy,density\n";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << i << ',' << cells[i].centroid.x << ',' << cells[i].centroid.y << ',' << density[i] << '\n';
            }
            break;
        }
        case Format::Json: {
            Json j;
            j["beta"] = config.beta;
            j["map"] = config.map;
            j["grid"] = config.grid;
            j["iterations"] = run.result.iterations;
            j["residual"] = run.result.residual;
            Json arr = Json::array();
            for (std::size_t i = 0; i < cells.size(); ++i) {
                arr.push_back({{"cell_index", i}, {"cx", cells[i].centroid.x}, {"cy", cells[i].centroid.y},
                               {"density", density[i]}});
            }
            j["cells"] = std::move(arr);
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Pgm: {
            const int size = config.size;
            const Beta beta = dynamics_beta(config);
            const double leg = beta.leg();
            const auto [lo, hi] = std::minmax_element(density.begin(), density.end());
            const double span = *hi - *lo;
            std::vector<std::uint8_t> px(static_cast<std::size_t>(size) * size, 0);
            for (int row = 0; row < size; ++row) {
                for (int col = 0; col < size; ++col) {
                    const Point c{(col + 0.5) * leg / size, (size - row - 0.5) * leg / size};
                    if (c.x + c.y > leg) continue;
                    const double d = density[run.grid.locate(c)];
                    const double scaled = span > 0.0 ? (d - *lo) / span : 1.0;
                    px[static_cast<std::size_t>(row) * size + col] = static_cast<std::uint8_t>(std::lround(255.0 * scaled));
                }
            }
            write_pgm(os, size, size, px);
            break;
        }
    }
}

void cmd_orbit(const RunConfig& config, std::ostream& os) {
    const Beta beta = dynamics_beta(config);
    CoinTapes tapes = CoinTapes::from_strings(config.omega, config.upsilon);
    const int depth = beta.regime() == Regime::Radial ? (config.depth > 0 ? config.depth : default_depth(beta)) : 0;

    Json j;
    j["beta"] = config.beta;
    j["regime"] = std::string(to_string(beta.regime()));
    j["start"] = point_json(config.point);
    Json steps = Json::array();
    std::string digits;
    Point z = config.point;
    auto finish = [&](const char* error) {
        j["steps"] = std::move(steps);
        j["digits"] = digits;
        j["final"] = point_json(z);
        j["omega_used"] = tapes.k;
        j["upsilon_used"] = tapes.l;
        if (error) j["error"] = error;
        os << j.dump(2) << '\n';
    };
    for (std::size_t n = 0; n < config.steps; ++n) {
        try {
            const std::string region = region_name(beta, z, depth);
            const KStep s = kbeta_advance(beta, tapes, z, n, depth);
            steps.push_back({{"step", n},
                             {"x", z.x},
                             {"y", z.y},
                             {"region", region},
                             {"digit", index(s.digit)},
                             {"k", tapes.k},
                             {"l", tapes.l}});
            digits.push_back(static_cast<char>('0' + index(s.digit)));
            z = s.point;
        } catch (const TapeExhausted& e) {
            finish(e.what());
            throw;
        }
    }
    finish(nullptr);
}

void cmd_coins(const RunConfig& config, std::ostream& os) {
    const Beta beta = dynamics_beta(config);
    const std::vector<Digit> digits = parse_digits(config.digits);
    Json j;
    j["beta"] = config.beta;
    j["start"] = point_json(config.point);
    j["digits"] = config.digits;
    CoinPrefixes coins;
    try {
        coins = coins_from_digits(beta, config.point, digits, config.depth);
    } catch (const InadmissibleDigit& e) {
        j["error"] = "inadmissible digit";
        j["step"] = e.step();
        os << j.dump(2) << '\n';
        throw;
    }
    j["omega"] = tape_string(coins.omega);
    j["upsilon"] = tape_string(coins.upsilon);
    Json visits = Json::array();
    for (const Visit& v : coins.visits) {
        visits.push_back({{"step", v.step}, {"tape", v.tape == Tape::Omega ? "omega" : "upsilon"}, {"symbol", v.symbol}});
    }
    j["visits"] = std::move(visits);
    os << j.dump(2) << '\n';
}

void cmd_constants(std::ostream& os) {
    const Constants& c = constants();
    Json j;
    j["beta_star"] = c.beta_star;
    j["beta_sup"] = c.beta_sup;
    j["lambda_star"] = c.lambda_star;
    os << j.dump(2) << '\n';
}

namespace {

Point parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw BadConfig("point must be written as x,y");
    try {
        std::size_t used = 0;
        const double x = std::stod(s.substr(0, comma), &used);
        const std::string ys = s.substr(comma + 1);
        const double y = std::stod(ys, &used);
        if (!std::isfinite(x) || !std::isfinite(y)) throw BadConfig("point must be finite");
        return {x, y};
    } catch (const std::logic_error&) {
        throw BadConfig("cannot parse point '" + s + "'");
    }
}

Format parse_format(const std::string& s) {
    if (s == "pgm") return Format::Pgm;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw BadConfig("unknown format '" + s + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta-expansions on fat Sierpinski gaskets"};
    app.require_subcommand(1);

    RunConfig config;
    std::string regime, format, point;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--beta", config.beta, "Base beta");
        sub->add_option("--regime", regime, "Assert the regime: triangle or radial");
        sub->add_option("--seed", config.seed, "64-bit seed");
        sub->add_option("--out", config.out, "Output file (default stdout)");
    };

    auto* render = app.add_subcommand("render", "Chaos-game image of the attractor (PGM)");
    common(render);
    render->add_option("--grid", config.grid, "Raster size in pixels");
    render->add_option("--samples", config.samples, "Number of plotted points");

    auto* density = app.add_subcommand("density", "Stationary density of an Ulam matrix");
    common(density);
    density->add_option("--map", config.map, "greedy, lazy or random");
    density->add_option("--p", config.p, "Weight of the smaller digit on two-way switch regions");
    density->add_option("--s", config.s, "Weight of q0 on the triple overlap");
    density->add_option("--t", config.t, "Weight of q1 on the triple overlap");
    density->add_option("--grid", config.grid, "Subdivisions per axis");
    density->add_option("--cell-samples", config.cell_samples, "Sample points per cell");
    density->add_option("--tol", config.tol, "Residual tolerance");
    density->add_option("--maxiter", config.maxiter, "Iteration limit");
    density->add_option("--size", config.size, "PGM raster size");
    density->add_option("--format", format, "csv, pgm or json");

    auto* orbit = app.add_subcommand("orbit", "Trace K_beta from a point with given coin tapes (JSON)");
    common(orbit);
    orbit->add_option("--point", point, "Start point x,y")->required();
    orbit->add_option("--omega", config.omega, "Binary coin tape");
    orbit->add_option("--upsilon", config.upsilon, "Ternary coin tape");
    orbit->add_option("--steps", config.steps, "Number of steps");
    orbit->add_option("--depth", config.depth, "Hole chain depth (radial regime)");

    auto* coins = app.add_subcommand("coins", "Coin prefixes reproducing a digit string (JSON)");
    common(coins);
    coins->add_option("--point", point, "Start point x,y")->required();
    coins->add_option("--digits", config.digits, "Digits over 0,1,2")->required();
    coins->add_option("--depth", config.depth, "Hole chain depth (radial regime)");

    auto* consts = app.add_subcommand("constants", "Print beta_star, beta_sup and lambda_star (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kFailure;
    }

    try {
        if (!regime.empty()) {
            if (regime == "triangle") config.regime = Regime::Triangle;
            else if (regime == "radial") config.regime = Regime::Radial;
            else throw BadConfig("unknown regime '" + regime + "'");
        }
        if (!point.empty()) config.point = parse_point(point);

        std::ofstream file;
        if (!config.out.empty()) {
            file.open(config.out, std::ios::binary);
            if (!file) throw BadConfig("cannot open '" + config.out + "' for writing");
        }
        std::ostream& os = config.out.empty() ? out : file;

        if (render->parsed()) {
            config.command = "render";
            cmd_render(config, os);
        } else if (density->parsed()) {
            config.command = "density";
            config.format = format.empty() ? Format::Csv : parse_format(format);
            cmd_density(config, os);
        } else if (orbit->parsed()) {
            config.command = "orbit";
            cmd_orbit(config, os);
        } else if (coins->parsed()) {
            config.command = "coins";
            cmd_coins(config, os);
        } else if (consts->parsed()) {
            config.command = "constants";
            cmd_constants(os);
        }
        os.flush();
        if (!os) throw BadConfig("write failed");
        return kOk;
    } catch (const InadmissibleDigit& e) {
        err << "error: " << e.what() << '\n';
        return kInadmissible;
    } catch (const TapeExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kTapeExhausted;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace fatgasket::cli
