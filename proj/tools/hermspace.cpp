// hermspace: CSV sweeps over the library's checks.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid arguments,
// 3 numerical failure (quadrature non-convergence, failed certificate).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hermspace/errors.hpp"
#include "hermspace/parallel.hpp"
#include "range.hpp"
#include "sweeps.hpp"

namespace {

using namespace hermspace;
using namespace hermspace::cli;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RawFlags {
    std::string n;
    std::string t;
    std::string p;
    std::string lattices;
    std::string out;
    double tol = 1e-8;
    int max_doublings = 16;
};

struct Command {
    const char* name;
    const char* help;
    Table (*run)(const SweepOptions&);
    const char* default_n;
    const char* default_p;
    double default_tol;
};

const Command kCommands[] = {
    {"pn-bounds", "Poisson-polynomial L1 sandwich over a (t, N) grid", pn_bounds, "0..60", "", 1e-6},
    {"pn-identities", "Stirling, pointwise, auxiliary, geometric, remainder and re-summation checks",
     pn_identities, "1..200", "", 1e-8},
    {"sn-growth", "M1 norm of S_N applied to the shifted Gaussian probe", sn_growth, "3..2000:log24", "", 1e-8},
    {"mp-convergence", "M^p truncation error of (1+n)^-2 or the S_N probe ratio", mp_convergence,
     "4,8,16,32,64,128,256,512", "4/3,2,4", 1e-6},
    {"bochner-riesz", "M^p error of Bochner-Riesz means of (1+n)^-2", bochner_riesz,
     "4,8,16,32,64,128,256,512", "1,2", 1e-6},
    {"m1-hermite", "M1 norm of h_n by quadrature against the closed form", m1_hermite, "0..60", "", 1e-8},
    {"cgamma-compare", "C(-1/4), M1 and C(1/4) norms side by side", cgamma_compare, "0..40", "", 1e-8},
    {"torus-riesz", "L^p ratio of the partial Fourier sum on random trigonometric polynomials",
     torus_riesz, "8,16,32,64,128,256,512", "2,4", 1e-8},
    {"zak-sup", "sup of the Zak transform of h_n on a grid", zak_sup, "0..150", "", 1e-8},
    {"bessel-bounds", "Gabor Bessel sums and synthesis ratios over lattices", bessel_bounds,
     "0,1,4,9,16,25,36,49,64,81,100", "", 1e-8},
    {"tensor-check", "d-fold tensor probe against the d-th power of the 1-D probe", tensor_check,
     "3,10,30,100", "", 1e-8},
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"hermspace: reproducible sweeps for Hermite expansions and modulation spaces"};
    app.set_version_flag("--version", HERMSPACE_VERSION);
    app.require_subcommand(1);

    RawFlags raw;
    SweepOptions options;
    std::map<std::string, CLI::App*> subs;
    std::map<std::string, const Command*> by_name;
    for (const Command& cmd : kCommands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->add_option("--out", raw.out, "CSV output path")->required();
        sub->add_option("--n", raw.n, "Index sweep: list, a..b or a..b:logK")->default_str(cmd.default_n);
        sub->add_option("--seed", options.seed, "Seed recorded in the CSV header");
        sub->add_option("--tol", raw.tol, "Quadrature relative tolerance")
            ->default_str(std::to_string(cmd.default_tol))
            ->check(CLI::Range(1e-15, 1e-2));
        sub->add_option("--max-doublings", raw.max_doublings, "Quadrature refinement cap")
            ->check(CLI::Range(1, 24));
        subs[cmd.name] = sub;
        by_name[cmd.name] = &cmd;
    }
    subs["pn-bounds"]->add_option("--t", raw.t, "t values")->default_str("1,2,5,10,50,100,400");
    subs["pn-identities"]->add_option("--t", raw.t, "t values for the remainder check");
    for (const char* name : {"mp-convergence", "bochner-riesz", "torus-riesz"}) {
        subs[name]->add_option("--p", raw.p, "Exponents, fractions allowed");
    }
    subs["mp-convergence"]->add_option("--quantity", options.quantity, "truncation or probe-ratio")
        ->check(CLI::IsMember({"truncation", "probe-ratio"}));
    for (const char* name : {"mp-convergence", "bochner-riesz"}) {
        subs[name]->add_option("--nmax", options.n_max, "Length of the (1+n)^-2 test vector minus one");
    }
    subs["bochner-riesz"]->add_option("--alpha", options.alpha, "Bochner-Riesz exponent")
        ->check(CLI::PositiveNumber);
    subs["m1-hermite"]->add_option("--quad-max", options.quad_max, "Largest n evaluated by quadrature");
    subs["cgamma-compare"]->add_option("--family", options.family, "basis, shifted-gaussian or inverse-square")
        ->check(CLI::IsMember({"basis", "shifted-gaussian", "inverse-square"}));
    subs["torus-riesz"]->add_option("--trials", options.trials, "Random polynomials per point")
        ->check(CLI::PositiveNumber);
    subs["torus-riesz"]->add_option("--degree-factor", options.degree_factor, "Degree of g over N")
        ->check(CLI::PositiveNumber);
    for (const char* name : {"zak-sup", "bessel-bounds"}) {
        subs[name]->add_option("--grid", options.grid, "Zak grid resolution (>= 64)")
            ->check(CLI::Range(64, 4096));
    }
    subs["bessel-bounds"]->add_option("--lattice", raw.lattices, "Lattices: z2, half, hex");
    subs["tensor-check"]->add_option("--d", options.dimension, "Tensor dimension")->check(CLI::Range(1, 4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const Command* cmd = nullptr;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) cmd = by_name[name];
    }
    try {
        thread_count();
        options.n = parse_int_sweep(raw.n.empty() ? cmd->default_n : raw.n);
        if (!raw.t.empty()) {
            options.t = parse_real_sweep(raw.t);
        } else if (std::string(cmd->name) == "pn-bounds") {
            options.t = parse_real_sweep("1,2,5,10,50,100,400");
        }
        const std::string p_text = raw.p.empty() ? cmd->default_p : raw.p;
        if (!p_text.empty()) options.p = parse_real_sweep(p_text);
        if (!raw.lattices.empty()) options.lattices = split_names(raw.lattices);
        const bool tol_given = subs[cmd->name]->count("--tol") > 0;
        options.spec = options.spec.with_tolerance(tol_given ? raw.tol : cmd->default_tol);
        options.spec.max_doublings = raw.max_doublings;
        options.spec.validate();
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Table table;
    try {
        table = cmd->run(options);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    std::ofstream file(raw.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << raw.out << " for writing\n";
        return kExitUsage;
    }
    file << render_csv(table, options.seed);
    file.close();
    if (!file) {
        std::cerr << "error: failed writing " << raw.out << '\n';
        return kExitUsage;
    }
    std::printf("%s: %zu rows, %zu checks, %zu passed, %zu failed -> %s\n", cmd->name, table.rows.size(),
                table.checks, table.checks - table.failures, table.failures, raw.out.c_str());
    return table.failures == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
