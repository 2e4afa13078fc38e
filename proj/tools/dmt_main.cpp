#include <iostream>

#include <CLI11.hpp>

#include "dmt/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Discrete Morse functions on barycentric subdivisions"};
    app.require_subcommand(1);

    dmt::RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_matching) {
        sub->add_option("--complex", cfg.complex, "complex file, or corpus:<name>")->required();
        if (needs_matching) {
            sub->add_option("--matching", cfg.matching, "matching file (default: empty field)");
            sub->add_option("--orderings", cfg.orderings,
                            "orderings file (default: descending vertex order)");
            sub->add_flag("--fill-orderings", cfg.fill_orderings,
                          "use the default ordering for simplices the orderings file omits");
        }
        sub->add_option("--out", cfg.out, "write the document here instead of stdout");
        sub->add_flag("--parallel", cfg.parallel, "enumerate gradient paths concurrently");
    };

    auto* subdivide = app.add_subcommand("subdivide", "write the barycentric subdivision");
    add_common(subdivide, false);

    auto* random = app.add_subcommand("random-morse", "write a random Morse matching");
    add_common(random, false);
    random->add_option("--seed", cfg.seed, "generator seed")->required();

    auto* delta = app.add_subcommand("delta-morse", "write the matching on the subdivision");
    add_common(delta, true);

    auto* verify = app.add_subcommand("verify", "check the construction and the path bijection");
    add_common(verify, true);
    verify->add_option("--delta", cfg.delta, "subdivided matching file to check");

    auto* paths = app.add_subcommand("paths", "list gradient paths and their lifts");
    add_common(paths, true);

    auto* graph = app.add_subcommand("export-graph", "write the Hasse diagram as DOT");
    add_common(graph, true);
    graph->add_option("--level", cfg.level, "delta or base")
        ->check(CLI::IsMember({"delta", "base"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : dmt::kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return dmt::run_command(cfg, std::cout, std::cerr);
}
