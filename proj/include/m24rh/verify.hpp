#pragma once

// One-shot verification harness: runs every checkable identity of the
// library against the shipped data and reports named pass/fail results.
// Both the CLI `verify` subcommand and the acceptance suite drive this.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "m24rh/jacobi.hpp"
#include "m24rh/rho.hpp"

namespace m24rh::verify {

struct CheckResult {
    std::string section;  // table, powermap, homotopy, rho, golden, bounds, plethysm, jacobi
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    int rho_mmax = 48;        // oracle-triangle range
    int mult_jmax = 24;       // integrality / non-negativity range
    int routes_jmax = 20;     // two-route homotopy agreement range
    rho::BoundsOptions bounds;
    int jacobi_order = 6;     // q-order for the phi_g / H suites
    int pleth_order = 10;     // factorization round-trip order
    int pleth_trials = 50;
    unsigned seed = 20240901;
    std::set<std::string> only;  // run only these sections when nonempty
};

std::vector<CheckResult> run(const CharacterTable& table,
                             const std::map<std::string, jacobi::ClassFormData>& forms,
                             const std::vector<std::array<Int, kNumClasses>>& fixtures,
                             const Options& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace m24rh::verify
