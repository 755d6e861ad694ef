#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cofix/commands.hpp"

namespace {

int emit(const cofix::Report& rep, bool json_output) {
    if (json_output)
        std::cout << rep.machine.dump(2) << "\n";
    else
        std::cout << rep.text;
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and verifier for coincidence and fixed points of comparable "
                 "linear contractions on ordered metric spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    app.add_flag("--json", json_output, "emit the machine-readable report");

    std::string path, mode = "poc", demo_name;
    bool from_hasse = false;
    cofix::SolveFlags solve_flags;
    cofix::FuzzFlags fuzz_flags;
    cofix::DemoFlags demo_flags;
    std::string x0, theorem = "t33";
    int max_iter = -1;
    double tol = -1.0;
    int grid = -1;

    auto add_instance_arg = [&](CLI::App* cmd) {
        cmd->add_option("path", path, "instance file (resolved via $COFIX_DATA_DIR)")
            ->required();
        cmd->add_flag("--from-hasse", from_hasse,
                      "treat the order as Hasse cover pairs and take the closure");
    };
    auto add_solver_opts = [&](CLI::App* cmd) {
        cmd->add_option("--theorem", theorem, "hypothesis list: t33 | t35")
            ->check(CLI::IsMember({"t33", "t35"}));
        cmd->add_option("--x0", x0, "start element (label/index, or rational on intervals)");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--tol", tol, "continuous stopping tolerance");
        cmd->add_flag("--no-verify", solve_flags.no_verify,
                      "skip the hypothesis gate (runtime sentinels stay on)");
    };

    auto* validate = app.add_subcommand("validate", "validate an instance file");
    add_instance_arg(validate);

    auto* check = app.add_subcommand("check", "hypothesis reports for t33/t35/t43/t45");
    add_instance_arg(check);

    auto* solve = app.add_subcommand("solve", "run the joint-iteration solver");
    add_instance_arg(solve);
    add_solver_opts(solve);

    auto* certify = app.add_subcommand("certify", "solve, then certify uniqueness");
    add_instance_arg(certify);
    add_solver_opts(certify);
    certify->add_option("--mode", mode, "poc | coincidence | common-fixed")
        ->check(CLI::IsMember({"poc", "coincidence", "common-fixed"}));

    auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration of a finite instance");
    add_instance_arg(oracle);

    auto* fuzz = app.add_subcommand("fuzz", "search for theorem counterexamples");
    fuzz->add_option("--theorem", fuzz_flags.theorem, "t33 | t35 | t43 | t45")
        ->check(CLI::IsMember({"t33", "t35", "t43", "t45"}));
    fuzz->add_option("--trials", fuzz_flags.trials, "number of seeded instances");
    fuzz->add_option("--seed", fuzz_flags.seed, "base seed");
    fuzz->add_option("--n", fuzz_flags.n, "maximum element count");
    fuzz->add_option("--density", fuzz_flags.density, "base order density (rational)");
    fuzz->add_flag("--necessity", fuzz_flags.necessity,
                   "report the dropped-hypothesis necessity probe instead");

    auto* demo = app.add_subcommand("demo", "run a built-in demo");
    demo->add_option("name", demo_name, "ex52 | ex52-grid | rr-preset | nrl-preset")
        ->required();
    demo->add_option("--x0", x0, "start (rational on ex52, label/index on the grid)");
    demo->add_option("--max-iter", max_iter, "iteration cap");
    demo->add_option("--tol", tol, "continuous stopping tolerance");
    demo->add_option("--grid", grid, "sampling grid for alpha estimates");

    CLI11_PARSE(app, argc, argv);

    if (!x0.empty()) {
        solve_flags.x0 = x0;
        demo_flags.x0 = x0;
    }
    if (max_iter > 0) {
        solve_flags.max_iter = max_iter;
        demo_flags.max_iter = max_iter;
    }
    if (tol >= 0) {
        solve_flags.tol = tol;
        demo_flags.tol = tol;
    }
    if (grid > 1) demo_flags.grid = grid;
    solve_flags.theorem = theorem;
    solve_flags.from_hasse = from_hasse;

    if (app.got_subcommand(validate)) return emit(cofix::cmd_validate(path, from_hasse), json_output);
    if (app.got_subcommand(check)) return emit(cofix::cmd_check(path, from_hasse), json_output);
    if (app.got_subcommand(solve)) return emit(cofix::cmd_solve(path, solve_flags), json_output);
    if (app.got_subcommand(certify))
        return emit(cofix::cmd_certify(path, mode, solve_flags), json_output);
    if (app.got_subcommand(oracle)) return emit(cofix::cmd_oracle(path, from_hasse), json_output);
    if (app.got_subcommand(fuzz)) return emit(cofix::cmd_fuzz(fuzz_flags), json_output);
    if (app.got_subcommand(demo)) return emit(cofix::cmd_demo(demo_name, demo_flags), json_output);
    return 1;
}
