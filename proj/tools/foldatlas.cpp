// Command-line surface: curve generation and checking, splitting summaries,
// bound evaluation, witness construction, and the verification harnesses.
//
// Exit codes: 0 success (and empty-failure reports), 1 verdict failures,
// 2 malformed input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "foldatlas/families.hpp"
#include "foldatlas/harness.hpp"
#include "foldatlas/json_io.hpp"
#include "foldatlas/svg.hpp"
#include "foldatlas/witness.hpp"

using namespace foldatlas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitMalformed = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FOLDATLAS_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240901ull;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("cannot parse '") + path + "': " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of immersed plane curves and sharp bounds on fold self-intersections"};
    app.require_subcommand(1);

    // ---- curve ----
    auto* curve_cmd = app.add_subcommand("curve", "generate, check and fuzz plane curves");
    curve_cmd->require_subcommand(1);

    std::string gen_word, gen_svg, gen_json;
    auto* gen = curve_cmd->add_subcommand("gen", "realize a family word");
    gen->add_option("word", gen_word, "curve word, e.g. B+7,1")->required();
    gen->add_option("--svg", gen_svg, "write an SVG rendering");
    gen->add_option("--json", gen_json, "write curve JSON to a file instead of stdout");

    std::string check_path;
    auto* check = curve_cmd->add_subcommand("check", "validate a curve file and print invariants");
    check->add_option("file", check_path, "curve JSON file")->required();

    int fuzz_trials = 1000;
    std::uint64_t fuzz_seed = default_seed();
    auto* fuzz = curve_cmd->add_subcommand("fuzz", "randomized Whitney/oracle harness");
    fuzz->add_option("--trials", fuzz_trials, "number of random curves");
    fuzz->add_option("--seed", fuzz_seed, "random seed (FOLDATLAS_SEED overrides the default)");

    // ---- split ----
    auto* split_cmd = app.add_subcommand("split", "summaries of fold-map splittings");
    split_cmd->require_subcommand(1);
    std::string split_path;
    auto* summ = split_cmd->add_subcommand("summarize", "Euler bookkeeping of a splitting");
    summ->add_option("file", split_path, "splitting JSON file")->required();
    std::string graph_path, graph_dot;
    auto* graph = split_cmd->add_subcommand("graph", "bipartite multigraph as DOT");
    graph->add_option("file", graph_path, "splitting JSON file")->required();
    graph->add_option("--dot", graph_dot, "write DOT to a file instead of stdout");

    // ---- bound ----
    auto* bound_cmd = app.add_subcommand("bound", "lower-bound evaluation");
    auto* bound_eval = bound_cmd->add_subcommand("eval", "evaluate every bound form");
    std::string bound_file;
    int bg = 0, bsigma = 0, bplus = 0, bminus = 0;
    bound_eval->add_option("file", bound_file, "splitting JSON file");
    auto* og = bound_eval->add_option("--g", bg, "genus of the closed surface");
    bound_eval->add_option("--sigma", bsigma, "number of fold circles")->needs(og);
    bound_eval->add_option("--plus", bplus, "number of plus components")->needs(og);
    bound_eval->add_option("--minus", bminus, "number of minus components")->needs(og);

    // ---- witness ----
    auto* witness_cmd = app.add_subcommand("witness", "sharpness witness construction");
    auto* wbuild = witness_cmd->add_subcommand("build", "build and verify a witness certificate");
    int wg = 0, wsigma = 0, wplus = 0, wminus = 0;
    std::string wsvg, wjson;
    wbuild->add_option("--g", wg, "genus")->required();
    wbuild->add_option("--sigma", wsigma, "number of fold circles")->required();
    wbuild->add_option("--plus", wplus, "number of plus components")->required();
    wbuild->add_option("--minus", wminus, "number of minus components")->required();
    wbuild->add_option("--svg", wsvg, "render the realized singular set");
    wbuild->add_option("--json", wjson, "write the certificate to a file instead of stdout");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive sharpness verification");
    int gmax = 8;
    sweep_cmd->add_option("--gmax", gmax, "largest genus to enumerate")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            PlanarCurve curve;
            try {
                curve = realize(gen_word);
            } catch (const InvalidWord& e) {
                std::cerr << e.what() << "\n";
                return kExitMalformed;
            }
            if (!gen_svg.empty()) write_file(gen_svg, render_svg(curve));
            const std::string text = to_json(curve).dump(2);
            if (!gen_json.empty())
                write_file(gen_json, text + "\n");
            else
                std::cout << text << "\n";
            return kExitOk;
        }
        if (check->parsed()) {
            PlanarCurve curve;
            try {
                curve = curve_from_json(load_json(check_path));
            } catch (const MalformedInput& e) {
                std::cerr << e.what() << "\n";
                return kExitMalformed;
            }
            try {
                const InvariantRecord rec = invariants(curve);
                std::cout << to_json(rec).dump(2) << "\n";
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kExitVerdict;
            }
            return kExitOk;
        }
        if (fuzz->parsed()) {
            const FuzzReport rep = run_whitney_fuzz(fuzz_trials, fuzz_seed);
            std::cout << to_json(rep).dump(2) << "\n";
            return rep.clean() ? kExitOk : kExitVerdict;
        }
        if (summ->parsed()) {
            SplitSurface s;
            try {
                s = splitting_from_json(load_json(split_path));
            } catch (const MalformedInput& e) {
                std::cerr << e.what() << "\n";
                return kExitMalformed;
            }
            try {
                std::cout << to_json(summarize(s)).dump(2) << "\n";
            } catch (const MalformedSplitting& e) {
                std::cerr << e.what() << "\n";
                return kExitMalformed;
            }
            return kExitOk;
        }
        if (graph->parsed()) {
            SplitSurface s;
            try {
                s = splitting_from_json(load_json(graph_path));
            } catch (const MalformedInput& e) {
                std::cerr << e.what() << "\n";
                return kExitMalformed;
            }
            const std::string dot = to_dot(to_graph(s));
            if (!graph_dot.empty())
                write_file(graph_dot, dot);
            else
                std::cout << dot;
            return kExitOk;
        }
        if (bound_eval->parsed()) {
            if (!bound_file.empty()) {
                // a full splitting also carries the per-side proof-route form
                SplitSurface surface;
                try {
                    surface = splitting_from_json(load_json(bound_file));
                    summarize(surface);
                } catch (const std::exception& e) {
                    std::cerr << e.what() << "\n";
                    return kExitMalformed;
                }
                try {
                    std::cout << to_json(fold_bound(surface)).dump(2) << "\n";
                } catch (const std::exception& e) {
                    std::cerr << e.what() << "\n";
                    return kExitVerdict;
                }
                return kExitOk;
            }
            SplitSummary s;
            if (og->count() > 0) {
                s.num_plus = bplus;
                s.num_minus = bminus;
                s.sigma_count = bsigma;
                s.n_diff = std::abs(bplus - bminus);
                s.rho = bplus + bminus - 1;
                s.chi_s = 2 - 2 * bg;
                s.chi_plus = s.chi_s / 2;
                s.chi_minus = s.chi_s / 2;
                s.genus_s = bg;
            } else {
                std::cerr << "bound eval needs a splitting file or an explicit tuple\n";
                return kExitMalformed;
            }
            try {
                std::cout << to_json(fold_bound(s)).dump(2) << "\n";
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kExitVerdict;
            }
            return kExitOk;
        }
        if (wbuild->parsed()) {
            WitnessCertificate cert;
            try {
                cert = build_witness({wg, wsigma, wplus, wminus});
            } catch (const InadmissibleCombo& e) {
                std::cerr << e.what() << "\n";
                return kExitVerdict;
            }
            if (!wsvg.empty()) write_file(wsvg, render_svg(realize_witness(cert)));
            const WitnessVerdict verdict = verify_certificate(cert);
            json out = to_json(cert);
            out["verified"] = verdict.all();
            const std::string text = out.dump(2);
            if (!wjson.empty())
                write_file(wjson, text + "\n");
            else
                std::cout << text << "\n";
            return verdict.all() ? kExitOk : kExitVerdict;
        }
        if (sweep_cmd->parsed()) {
            if (gmax < 2) {
                std::cerr << "sweep needs --gmax >= 2\n";
                return kExitMalformed;
            }
            const SweepReport rep = run_sweep(gmax);
            std::cout << to_json(rep).dump(2) << "\n";
            return rep.clean() ? kExitOk : kExitVerdict;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdict;
    }
    return kExitOk;
}
