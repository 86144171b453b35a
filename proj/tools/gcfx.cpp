// gcfx command-line tool: exact evaluation of generalized continued fractions,
// irrationality-exponent bounds, prescribed-exponent constructions,
// equivalence transforms and the invariant-check suites.

#include <gcfx/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

void add_param_option(CLI::App* cmd, gcfx::cli::run_config& cfg) {
    cmd->add_option_function<std::vector<std::string>>(
           "--param",
           [&cfg](const std::vector<std::string>& kvs) {
               for (const auto& kv : kvs) {
                   const auto eq = kv.find('=');
                   if (eq == std::string::npos)
                       throw CLI::ValidationError("--param expects name=value, got \"" + kv + "\"");
                   cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
               }
           },
           "family or theorem parameter, name=value (repeatable)")
        ->take_all();
}

void add_stream_options(CLI::App* cmd, gcfx::cli::run_config& cfg) {
    cmd->add_option("--family", cfg.family, "named family from `gcfx list`");
    add_param_option(cmd, cfg);
    cmd->add_option("--const-a", cfg.const_a, "inline stream: constant partial numerator");
    cmd->add_option("--const-b", cfg.const_b, "inline stream: constant partial denominator");
}

void add_common(CLI::App* cmd, gcfx::cli::run_config& cfg, bool& json_flag, std::string& output) {
    cmd->add_flag("--json", json_flag, "shorthand for --output json");
    cmd->add_option("--output", output, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--bitlen-cap", cfg.bitlen_cap, "abort when denominators exceed this bit length");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized continued fractions: enclosures, irrationality exponents, constructions"};
    app.require_subcommand(1);

    gcfx::cli::run_config cfg;
    bool json_flag = false;
    std::string output = "text";

    auto* eval = app.add_subcommand("eval", "evaluate a stream to a guaranteed enclosure");
    add_stream_options(eval, cfg);
    eval->add_option("--precision", cfg.precision, "target enclosure width (decimal, default 1e-30)");
    eval->add_option("--max-terms", cfg.max_terms, "term budget before declaring non-convergence");
    add_common(eval, cfg, json_flag, output);
    eval->callback([&] { cfg.cmd = gcfx::cli::command::eval; });

    auto* bound = app.add_subcommand("bound", "irrationality-exponent upper bound from growth data");
    bound->add_option("--class", cfg.growth_class, "growth class: bounded | poly | exp");
    bound->add_option("--family", cfg.family, "use a named family's featured bound route");
    add_param_option(bound, cfg);
    bound->add_option("--a1", cfg.params["a1"], "bounded: lower bound on a_n");
    bound->add_option("--a2", cfg.params["a2"], "bounded: upper bound on a_n");
    bound->add_option("--b1", cfg.params["b1"], "bounded: lower bound on b_n");
    bound->add_option("--b2", cfg.params["b2"], "bounded: upper bound on b_n");
    add_common(bound, cfg, json_flag, output);
    bound->callback([&] { cfg.cmd = gcfx::cli::command::bound; });

    auto* nu = app.add_subcommand("nu", "empirical estimate of limsup log Pi_n / log B_n");
    add_stream_options(nu, cfg);
    nu->add_option("--terms", cfg.terms, "number of terms (default 10000)");
    nu->add_option("--exact-until", cfg.exact_until, "exact big-integer phase length (default 500)");
    nu->add_option("--window", cfg.window, "trailing window fraction for the running max (default 0.2)");
    add_common(nu, cfg, json_flag, output);
    nu->callback([&] { cfg.cmd = gcfx::cli::command::nu; });

    auto* construct = app.add_subcommand("construct", "build a {1,2}-fraction with prescribed exponent");
    construct->add_option("--exponent", cfg.exponent, "target exponent: one | rational >= 2 | infinity")
        ->required();
    construct->add_option("--blocks", cfg.blocks, "number of four-quotient groups (default 4)");
    construct->add_flag("--audit", cfg.audit, "run approximation audits at n = 1 mod 4");
    add_common(construct, cfg, json_flag, output);
    construct->callback([&] { cfg.cmd = gcfx::cli::command::construct; });

    auto* transform = app.add_subcommand("transform", "equivalence transforms and measure transport");
    transform->add_option("--op", cfg.transform_op, "integerize | linear | reciprocal")->required();
    transform->add_option("--family", cfg.family, "rational-coefficient family for --op integerize");
    add_param_option(transform, cfg);
    transform->add_option("--show", cfg.show_terms, "terms to print for --op integerize");
    add_common(transform, cfg, json_flag, output);
    transform->callback([&] { cfg.cmd = gcfx::cli::command::transform; });

    auto* verify = app.add_subcommand("verify", "run an invariant-check suite");
    verify
        ->add_option("suite", cfg.suite,
                     "identities | enclosures | densities | families | constructions | all")
        ->required();
    add_common(verify, cfg, json_flag, output);
    verify->callback([&] { cfg.cmd = gcfx::cli::command::verify; });

    auto* list = app.add_subcommand("list", "list the family registry");
    add_common(list, cfg, json_flag, output);
    list->callback([&] { cfg.cmd = gcfx::cli::command::list; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    cfg.json_output = json_flag || output == "json";
    const auto result = gcfx::cli::run(cfg);
    if (cfg.json_output)
        std::cout << result.report.dump(2) << "\n";
    else
        std::cout << result.text;
    return result.exit_code;
}
