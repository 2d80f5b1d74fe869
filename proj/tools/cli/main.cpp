#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Double gamma / double sine evaluators, cone zeta derivatives, and "
        "class invariants for real quadratic fields"};
    app.require_subcommand(1);
    qtheta::cli::RunConfig cfg;

    app.add_option("--tol", cfg.tol, "Target tolerance for contour quadrature");
    app.add_option("--contour-radius", cfg.contour_radius,
                   "Override the outer contour circle radius");
    app.add_option("--tmax", cfg.tmax, "Override the outbound-ray truncation");
    app.add_option("--class-data", cfg.class_data, "Class-data JSON document");
    app.add_option("--out", cfg.out, "Write the report here instead of stdout");
    app.add_option("--format", cfg.format, "json (default) or csv");

    auto* eval = app.add_subcommand("eval", "Evaluate a single function");
    eval->fallthrough();
    eval->add_option("--fn", cfg.fn,
                     "double-sine | log-gamma2 | zeta | zeta0 | zeta-deriv")
        ->required();
    eval->add_option("--z", cfg.z, "Argument, real part");
    eval->add_option("--zi", cfg.zi, "Argument, imaginary part");
    eval->add_option("--omega", cfg.omega, "Period pair")->expected(2);
    eval->add_option("--s", cfg.s, "Zeta argument, real part");
    eval->add_option("--si", cfg.si, "Zeta argument, imaginary part");
    eval->add_option("--a1", cfg.a1, "First ray slope");
    eval->add_option("--a2", cfg.a2, "Second ray slope");
    eval->add_option("--x1", cfg.x1, "Cone point, first coordinate");
    eval->add_option("--x2", cfg.x2, "Cone point, second coordinate");
    eval->add_option("--m", cfg.m, "Derivative order (zeta-deriv)");
    eval->add_option("--r", cfg.r, "Log power (log-gamma2)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    verify
        ->add_option("--suite", cfg.suite,
                     "lemma-log1 | lemma-polylog | double-sine | cocycle | "
                     "continuation | all")
        ->required();

    auto* lseries =
        app.add_subcommand("lseries", "Character L-derivative ledgers at s = 0");
    lseries->fallthrough();
    lseries->add_option("--m", cfg.m, "Derivative order");
    lseries->add_option("--chi", cfg.chi, "Character label (default: all)");

    auto* invariants =
        app.add_subcommand("invariants", "T and X invariants of a class");
    invariants->fallthrough();
    invariants->add_option("--g", cfg.g, "Class label (default: identity)");

    auto* recognize =
        app.add_subcommand("recognize", "Minimal integer polynomial probe");
    recognize->fallthrough();
    recognize->add_option("--value", cfg.value, "Value to test")->required();
    recognize->add_option("--deg", cfg.deg_bound, "Degree bound (1..4)");
    recognize->add_option("--height", cfg.height_bound, "Height bound (1..50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().at(0)->get_name();
    const qtheta::cli::RunResult res = qtheta::cli::run(cfg);
    if (cfg.out.empty()) {
        std::fwrite(res.output.data(), 1, res.output.size(), stdout);
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file " << cfg.out << "\n";
            return 1;
        }
        f << res.output;
        if (!f.good()) return 1;
    }
    return res.exit_code;
}
