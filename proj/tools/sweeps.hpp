#pragma once

// One function per CLI subcommand. Each returns a table of formatted cells plus
// the number of checks run and failed; rows are in sweep order whatever the
// thread count.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hermspace/numerics.hpp"

namespace hermspace::cli {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t checks = 0;
    std::size_t failures = 0;
};

struct SweepOptions {
    std::vector<std::size_t> n;
    std::vector<double> t;
    std::vector<double> p;
    QuadratureSpec spec;
    std::uint64_t seed = 0;
    std::size_t grid = 256;
    std::size_t trials = 16;
    std::size_t degree_factor = 4;
    std::size_t n_max = 1024;
    std::size_t quad_max = 60;
    std::size_t dimension = 2;
    double alpha = 1.0;
    std::string quantity = "truncation";
    std::string family = "basis";
    std::vector<std::string> lattices;
};

Table pn_bounds(const SweepOptions& o);
Table pn_identities(const SweepOptions& o);
Table sn_growth(const SweepOptions& o);
Table mp_convergence(const SweepOptions& o);
Table bochner_riesz(const SweepOptions& o);
Table m1_hermite(const SweepOptions& o);
Table cgamma_compare(const SweepOptions& o);
Table torus_riesz(const SweepOptions& o);
Table zak_sup(const SweepOptions& o);
Table bessel_bounds(const SweepOptions& o);
Table tensor_check(const SweepOptions& o);

/// Header line, "# seed=...,version=..." line, then rows.
std::string render_csv(const Table& table, std::uint64_t seed);

}  // namespace hermspace::cli
