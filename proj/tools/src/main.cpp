#include <iostream>

#include "CLI11.hpp"

#include "algebra_io.hpp"
#include "commands.hpp"

using namespace manin::cli;

int main(int argc, char** argv) {
    CLI::App app{"Manin pairs, quasi-triples, twists, and quasi-Poisson geometry on matrix groups"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string path, suite = "algebra", twist, at, object, out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--samples", opt.samples, "sample count for numeric sweeps")
            ->default_val(50);
        cmd->add_option("--seed", opt.seed, "random seed")->default_val(0);
        cmd->add_option("--tol", opt.tol, "base numeric tolerance")->default_val(1e-9);
        cmd->add_flag("--json", opt.json_output, "emit the canonical JSON report");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the axioms of an algebra file");
    validate->add_option("path", path, "algebra file")->required();
    add_common(validate);

    CLI::App* dbl = app.add_subcommand("double", "build the metric double and derive (F, phi)");
    dbl->add_option("path", path, "algebra file")->required();
    dbl->add_option("--complement", twist, "twist spec ei^ej:p/q[,...] for the complement");
    dbl->add_option("--out", out_path, "write the double as an algebra file");
    add_common(dbl);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("path", path, "algebra file")->required();
    verify->add_option("--suite", suite, "algebra | group | moment")->default_val("algebra");
    add_common(verify);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a pointwise object");
    eval->add_option("path", path, "algebra file")->required();
    eval->add_option("--at", at, "group element: exp(...), diag-torus(x), matrix(...)")
        ->required();
    eval->add_option("--object", object, "PG | PS | phiS | hat:x | dressing:X | tau")
        ->required();
    eval->add_option("--complement", twist, "twist spec for the complement");
    add_common(eval);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path, opt, std::cout);
        if (app.got_subcommand(dbl)) return cmd_double(path, twist, out_path, opt, std::cout);
        if (app.got_subcommand(verify)) return cmd_verify(path, suite, opt, std::cout);
        if (app.got_subcommand(eval)) return cmd_eval(path, at, object, twist, opt, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
