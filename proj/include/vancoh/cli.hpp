#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vancoh/json_io.hpp"
#include "vancoh/report.hpp"
#include "vancoh/verify.hpp"

namespace vancoh {

// Exit codes: 0 success, 1 usage/parse/schema error, 2 mathematically
// inconsistent input (this also covers internal identity failures, which
// are reported with an explicit marker).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic vanishing cohomology of cone and SNC-link singularities"};
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "table";

    auto add_report_options = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "JSON input file")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* cone = app.add_subcommand("cone", "Betti table, characteristic polynomials and "
                                                "zeta function of a cone singularity");
    add_report_options(cone);
    CLI::App* snc = app.add_subcommand("snc-link", "Betti ranks and bounds from the link of an "
                                                   "SNC singularity");
    add_report_options(snc);
    CLI::App* jordan_cmd =
        app.add_subcommand("jordan", "necessary conditions for non-semisimple monodromy in "
                                     "degree one (n = 2)");
    add_report_options(jordan_cmd);

    unsigned long long seed = 20040531;
    std::string budget = "full";
    CLI::App* verify = app.add_subcommand("verify", "run the full oracle cross-check suite");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--budget", budget, "small or full")
        ->check(CLI::IsMember({"small", "full"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const char* color_env = std::getenv("VANCOH_COLOR");
    const bool color = !(color_env != nullptr && std::string(color_env) == "0");

    try {
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.full = budget == "full";
            return run_verify(opts, out).all_pass ? 0 : 1;
        }

        const Json raw = load_json_file(input_path);
        const ParsedInput parsed = parse_input(raw);
        Json doc;
        if (cone->parsed()) {
            if (parsed.mode != "cone")
                throw SchemaError("mode", "expected \"cone\", file says \"" + parsed.mode + "\"");
            doc = build_cone_report(std::get<ConeSingularityInput>(parsed.value));
        } else if (snc->parsed()) {
            if (parsed.mode != "snc_link")
                throw SchemaError("mode",
                                  "expected \"snc_link\", file says \"" + parsed.mode + "\"");
            doc = build_snc_link_report(std::get<SncLinkInput>(parsed.value));
        } else {
            if (parsed.mode != "jordan")
                throw SchemaError("mode",
                                  "expected \"jordan\", file says \"" + parsed.mode + "\"");
            doc = build_jordan_report(std::get<ResolutionGraph>(parsed.value));
        }
        out << (format == "json" ? render_report_json(doc) : render_report_table(doc, color));
        return 0;
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const InconsistentInputError& e) {
        err << "inconsistent input: " << e.what() << "\n";
        return 2;
    } catch (const IncompleteDataError& e) {
        err << "incomplete data: " << e.what() << "\n";
        return 2;
    } catch (const InternalInvariantError& e) {
        err << "internal inconsistency (please report): " << e.what() << "\n";
        return 2;
    }
}

}  // namespace vancoh
