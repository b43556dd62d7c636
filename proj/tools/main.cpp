#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "heckelab/errors.hpp"

int main(int argc, char** argv) {
    using namespace heckelab;
    CLI::App app{"Exact verification of Hecke symmetries and their reflection equation algebras"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string input, builtin;
    const char* commands[] = {"validate", "rank", "structure", "newton", "cayley-hamilton", "charpoly"};
    const char* help[] = {
        "check the braid relation, the Hecke condition and closedness",
        "detect the rank p and check the antisymmetrizer properties",
        "Levi-Civita tensors, C, B and the quantum trace identities",
        "q-Newton relations between power sums and elementary invariants",
        "characteristic identity for the generator matrix",
        "characteristic polynomial and the eigen-relation of w(x)",
    };
    for (int i = 0; i < 6; ++i) {
        auto* sub = app.add_subcommand(commands[i], help[i]);
        auto* in = sub->add_option("--input", input, "R-matrix JSON file");
        auto* bi = sub->add_option("--builtin", builtin, "built-in R-matrix: std:N or perm:N");
        in->excludes(bi);
        sub->add_option("--field", cfg.field, "symbolic | sampled:K | modular:P[:K] (default by N)");
        sub->add_option("--seed", cfg.seed, "seed for sampled q values and random test matrices");
        sub->add_option("--rank-bound", cfg.rank_bound, "largest k for which P^k is built");
        sub->add_flag("--json", cfg.json, "emit the JSON report");
        sub->add_option("--output", cfg.output, "write the report to a file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.command = cli::parse_command(app.get_subcommands().front()->get_name());
        if (!input.empty()) cfg.input = input;
        if (!builtin.empty()) cfg.builtin = builtin;
        const cli::Report report = cli::run(cfg);
        const std::string text = cfg.json ? cli::to_json(report).dump(2) + "\n" : cli::to_text(report);
        if (cfg.output) {
            std::ofstream out(*cfg.output);
            if (!out) {
                std::cerr << "error: cannot write " << *cfg.output << "\n";
                return 2;
            }
            out << text;
        } else {
            std::cout << text;
        }
        return report.exit_code();
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
