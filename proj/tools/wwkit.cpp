// wwkit: reproducible experiments on Werner-Wolf entanglement witnesses.
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical failure, 4 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ww/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalidInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitTooLarge = 4;

json read_payload(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw ww::InvalidInput("cannot open input file: " + path);
        in = &file;
    }
    try {
        json j;
        *in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ww::InvalidInput(std::string("bad JSON payload: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ww::InvalidInput("cannot open output file: " + out_path);
    out << text;
}

struct CommonFlags {
    int n = 2;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 100;
    int restarts = 32;
    double tol = 1e-12;
    int workers = 1;
    std::string out;
    std::string format = "json";
    std::string input;
};

std::uint64_t require_seed(const CommonFlags& flags) {
    // No wall-clock fallback: reproducibility is not optional.
    if (!flags.seed.has_value()) {
        throw ww::InvalidInput("--seed is required for this command");
    }
    return *flags.seed;
}

ww::OptimizeOptions optimizer_options(const CommonFlags& flags, std::uint64_t seed) {
    ww::OptimizeOptions opts;
    opts.restarts = flags.restarts;
    opts.tol = flags.tol;
    opts.seed = seed;
    return opts;
}

int run(int argc, char** argv) {
    CLI::App app{"Werner-Wolf witness toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--n", flags.n, "party count");
        cmd->add_option("--seed", flags.seed, "master seed (required for sampling)");
        cmd->add_option("--samples", flags.samples, "sample count");
        cmd->add_option("--restarts", flags.restarts, "optimizer restarts");
        cmd->add_option("--tol", flags.tol, "optimizer tolerance");
        cmd->add_option("--workers", flags.workers, "worker threads");
        cmd->add_option("--out", flags.out, "output path (default stdout)");
        cmd->add_option("--format", flags.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        if (with_input) {
            cmd->add_option("--input", flags.input, "input payload path (default stdin)");
        }
        return cmd;
    };

    auto* cmd_transform = add_common(app.add_subcommand(
        "transform", "Walsh coefficients beta of a sign function"), true);
    auto* cmd_optimize = add_common(app.add_subcommand(
        "optimize", "maximize the witness norm over measurement angles"), true);
    auto* cmd_spectrum = add_common(app.add_subcommand(
        "spectrum", "closed-form eigenvalue magnitudes and phases"), true);
    auto* cmd_oracle = add_common(app.add_subcommand(
        "oracle-check", "dense-matrix cross-check of the analytic spectrum"), true);
    auto* cmd_polytope = add_common(app.add_subcommand(
        "polytope-check", "membership of a correlation vector in C_n"), true);
    auto* cmd_sample = add_common(app.add_subcommand(
        "sample", "sample random facets and optimize their norms"), false);
    auto* cmd_prop2 = add_common(app.add_subcommand(
        "prop2", "Chebyshev eigenvalue tail at fixed directions"), false);
    std::vector<double> m_grid{2.0, 3.0, 5.0};
    cmd_prop2->add_option("--m-grid", m_grid, "tail thresholds M");
    auto* cmd_szk = add_common(app.add_subcommand(
        "szk", "sup-norm tail against C sqrt(2n ln n)"), false);
    std::vector<double> c_grid{1.0, 2.0, 4.0};
    cmd_szk->add_option("--c-grid", c_grid, "constants C");
    auto* cmd_mk = add_common(app.add_subcommand(
        "mk", "certified Mermin-Klyshko facet and norm"), false);

    CLI11_PARSE(app, argc, argv);

    if (cmd_transform->parsed()) {
        const ww::SignFunction f = ww::sign_function_from_json(read_payload(flags.input));
        const ww::WalshSpectrum beta = ww::walsh_beta(f);
        emit(ww::to_json(beta).dump(2), flags.out);
        std::cerr << "transform: n=" << f.n << " support=" << beta.support_size()
                  << (ww::is_trivial_facet(f) ? " (trivial facet)" : "") << "\n";
    } else if (cmd_optimize->parsed()) {
        const std::uint64_t seed = require_seed(flags);
        const ww::SignFunction f = ww::sign_function_from_json(read_payload(flags.input));
        const ww::OptimizeReport rep = ww::maximize_norm(f, optimizer_options(flags, seed));
        emit(ww::to_json(rep).dump(2), flags.out);
        std::cerr << "optimize: best_norm=" << rep.best_norm
                  << " sweeps=" << rep.sweeps
                  << (rep.converged ? "" : " (did not converge)") << "\n";
    } else if (cmd_spectrum->parsed()) {
        const json payload = read_payload(flags.input);
        const ww::SignFunction f = ww::sign_function_from_json(payload.at("f"));
        const ww::AngleConfig angles = ww::angle_config_from_json(payload.at("angles"));
        const ww::SpectrumResult res = ww::full_spectrum(f, angles);
        emit(ww::to_json(res).dump(2), flags.out);
        std::cerr << "spectrum: norm=" << res.norm << "\n";
    } else if (cmd_oracle->parsed()) {
        const json payload = read_payload(flags.input);
        const ww::SignFunction f = ww::sign_function_from_json(payload.at("f"));
        const ww::AngleConfig angles = ww::angle_config_from_json(payload.at("angles"));
        const auto dense = ww::eigen_magnitudes(ww::build_dense(f, angles));
        const ww::SpectrumResult analytic = ww::full_spectrum(f, angles);
        std::vector<double> expected;
        for (const auto& e : analytic.entries) expected.push_back(e.magnitude);
        std::sort(expected.begin(), expected.end(), std::greater<>());
        double max_dev = 0.0;
        for (std::size_t k = 0; k < dense.size(); ++k) {
            max_dev = std::max(max_dev, std::abs(dense[k] - expected[k]));
        }
        const double ghz_residual = ww::verify_ghz_eigenvectors(f, angles);
        json j{{"schema", 1},
               {"n", f.n},
               {"max_eigenvalue_deviation", max_dev},
               {"max_ghz_residual", ghz_residual},
               {"norm", analytic.norm}};
        emit(j.dump(2), flags.out);
        std::cerr << "oracle-check: max_dev=" << max_dev << " ghz_residual=" << ghz_residual << "\n";
        if (max_dev > 1e-10 || ghz_residual > 1e-10) {
            throw ww::NumericalFailure("oracle-check: deviation above 1e-10");
        }
    } else if (cmd_polytope->parsed()) {
        const ww::CorrelationVector q =
            ww::correlation_vector_from_json(read_payload(flags.input));
        const ww::FacetCheck chk = ww::first_violated_facet(q);
        if (chk.inside) {
            emit("inside", flags.out);
        } else {
            emit(ww::sign_function_hex(chk.violating_f), flags.out);
        }
        std::cerr << "polytope-check: " << (chk.inside ? "inside" : "violated") << "\n";
    } else if (cmd_sample->parsed()) {
        const std::uint64_t seed = require_seed(flags);
        const ww::ScalingRow row = ww::sample_max_norms(
            flags.n, flags.samples, seed, optimizer_options(flags, seed), flags.workers);
        if (flags.format == "csv") {
            emit(ww::records_csv(row.records), flags.out);
        } else {
            emit(ww::to_json(row).dump(2), flags.out);
        }
        std::cerr << "sample: n=" << row.n << " median=" << row.median
                  << " max=" << row.max << " ratio=" << row.ratio_to_root_nlogn << "\n";
    } else if (cmd_prop2->parsed()) {
        const std::uint64_t seed = require_seed(flags);
        const auto reports = ww::prop2_tail(flags.n, flags.samples, m_grid, seed);
        json j = json::array();
        for (const auto& rep : reports) j.push_back(ww::to_json(rep));
        emit(j.dump(2), flags.out);
        std::cerr << "prop2: n=" << flags.n << " samples=" << flags.samples << "\n";
    } else if (cmd_szk->parsed()) {
        const std::uint64_t seed = require_seed(flags);
        const auto reports = ww::szk_tail(flags.n, flags.samples, seed,
                                          optimizer_options(flags, seed), c_grid, flags.workers);
        json j = json::array();
        for (const auto& rep : reports) j.push_back(ww::to_json(rep));
        emit(j.dump(2), flags.out);
        std::cerr << "szk: n=" << flags.n << " ceiling=" << reports.front().bound_value << "\n";
    } else if (cmd_mk->parsed()) {
        const std::uint64_t seed = require_seed(flags);
        ww::OptimizeReport rep;
        const ww::SignFunction f =
            ww::mermin_klyshko_f(flags.n, optimizer_options(flags, seed), 1e-6, &rep);
        json j{{"schema", 1},
               {"n", flags.n},
               {"f_hex", ww::sign_function_hex(f)},
               {"certified_norm", rep.best_norm},
               {"target", ww::max_possible_norm(flags.n)}};
        emit(j.dump(2), flags.out);
        std::cerr << "mk: n=" << flags.n << " norm=" << rep.best_norm << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ww::TooLarge& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const ww::NumericalFailure& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ww::BoundViolated& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ww::ConstructionInvalid& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ww::InvalidInput& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ww::NotASignFunction& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
