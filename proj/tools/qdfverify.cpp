// Command-line front end: runs the claim registry and reports the results.
//
// Exit codes: 0 every selected claim passed, 1 at least one failed,
// 2 a resource budget was hit (and nothing failed), 3 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qdf/report.hpp"

namespace {

bool parse_field(const std::string& text, qdf::RunConfig& cfg, std::string& err) {
    if (text == "qq") {
        cfg.field_sel = qdf::RunConfig::FieldSel::QQ;
    } else if (text == "qq-i") {
        cfg.field_sel = qdf::RunConfig::FieldSel::QQi;
    } else if (text.rfind("fp:", 0) == 0) {
        cfg.field_sel = qdf::RunConfig::FieldSel::Fp;
        try {
            cfg.prime = std::stoull(text.substr(3));
        } catch (...) {
            err = "bad prime in --field";
            return false;
        }
        if (cfg.prime < 2 || cfg.prime >= (1ull << 31)) {
            err = "prime out of range";
            return false;
        }
    } else {
        err = "unknown field '" + text + "' (expected qq, fp:P or qq-i)";
        return false;
    }
    return true;
}

void apply_env_budgets(qdf::RunConfig& cfg) {
    if (const char* e = std::getenv("QDF_BUDGET_PAIRS")) cfg.budgets.max_pairs = std::stoull(e);
    if (const char* e = std::getenv("QDF_BUDGET_STEPS"))
        cfg.budgets.max_reduction_steps = std::stoull(e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verifier for the computations behind a quartic double fourfold construction"};
    app.require_subcommand(1);

    qdf::RunConfig cfg;
    std::vector<std::string> patterns;
    std::string field_text, order_text = "grevlex", report_kind = "text", out_path;

    CLI::App* run = app.add_subcommand("run", "run claims and report");
    run->add_option("--claim", patterns, "claim id pattern, '*' wildcards; repeatable");
    run->add_option("--field", field_text, "coefficient field: qq, fp:P, qq-i");
    run->add_option("--order", order_text, "term order: grevlex or lex");
    run->add_option("--budget-pairs", cfg.budgets.max_pairs, "S-pair budget per basis");
    run->add_option("--budget-steps", cfg.budgets.max_reduction_steps, "reduction step budget");
    run->add_option("--seed", cfg.seed, "seed for the randomized checks");
    run->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    run->add_option("--report", report_kind, "output: text or structured");
    run->add_option("--out", out_path, "write the report to a file instead of stdout");
    bool timings = false;
    run->add_flag("--timings", timings, "keep wall times in structured output");

    CLI::App* list = app.add_subcommand("list", "list registered claims");
    bool verbose = false;
    list->add_flag("--verbose", verbose, "include locations and descriptions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (list->parsed()) {
        for (const auto& c : qdf::claim_registry()) {
            if (verbose)
                std::cout << c.id << "  (" << c.paper_location << ")  " << c.description << "\n";
            else
                std::cout << c.id << "\n";
        }
        return 0;
    }

    apply_env_budgets(cfg);
    if (!field_text.empty()) {
        std::string err;
        if (!parse_field(field_text, cfg, err)) {
            std::cerr << "error: " << err << "\n";
            return 3;
        }
    }
    if (order_text == "lex") {
        cfg.use_lex = true;
    } else if (order_text != "grevlex") {
        std::cerr << "error: unknown order '" << order_text << "'\n";
        return 3;
    }
    if (report_kind != "text" && report_kind != "structured") {
        std::cerr << "error: unknown report kind '" << report_kind << "'\n";
        return 3;
    }

    try {
        qdf::Report rep = qdf::run_claims(patterns, cfg);
        std::string body = report_kind == "text" ? qdf::emit_text(rep)
                                                 : qdf::emit_structured(rep, timings);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open " << out_path << "\n";
                return 3;
            }
            f << body;
        }
        return qdf::report_exit_code(rep);
    } catch (const qdf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
