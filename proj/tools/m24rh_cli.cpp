// m24rh: exact computations around K3 rational homotopy and M24.
//
// Subcommands: homotopy, rho, multiplicities, jacobi, verify, table.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "m24rh/data.hpp"
#include "m24rh/homotopy.hpp"
#include "m24rh/jacobi.hpp"
#include "m24rh/repring.hpp"
#include "m24rh/rho.hpp"
#include "m24rh/verify.hpp"

using json = nlohmann::ordered_json;
using namespace m24rh;

namespace {

struct DataPaths {
    std::string table_file, forms_file, fixtures_file;

    std::string table_text() const {
        return data::load_text(table_file, data::kCharacterTableFile,
                               data::embedded_character_table());
    }
    std::string forms_text() const {
        return data::load_text(forms_file, data::kClassFormFile,
                               data::embedded_class_form_data());
    }
    std::string fixtures_text() const {
        return data::load_text(fixtures_file, data::kMultiplicityFixtureFile,
                               data::embedded_multiplicity_fixtures());
    }
};

void add_data_flags(CLI::App* app, DataPaths& paths) {
    app->add_option("--table-file", paths.table_file, "character table file override");
    app->add_option("--forms-file", paths.forms_file, "class form data file override");
    app->add_option("--fixtures-file", paths.fixtures_file, "multiplicity fixture file override");
}

std::string fmt_ranks(const std::vector<Int>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += ", ";
        s += x.str();
    }
    return s;
}

json ranks_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

int emit_verify(const std::vector<verify::CheckResult>& results, const std::string& format) {
    bool ok = verify::all_pass(results);
    if (format == "json") {
        json out;
        out["pass"] = ok;
        json checks = json::array();
        for (const auto& c : results) {
            json e;
            e["section"] = c.section;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.detail.empty()) e["detail"] = c.detail;
            checks.push_back(e);
        }
        out["checks"] = checks;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : results)
            std::cout << (c.pass ? "PASS " : "FAIL ") << "[" << c.section << "] " << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

json jet_json(const jacobi::QYJet& jet) {
    json terms = json::array();
    for (const auto& [k, c] : jet.terms()) {
        json e;
        e["q"] = rat_str(Rat(k.q48, 48));
        if (k.y2 % 2 == 0) e["y"] = k.y2 / 2;
        else e["y"] = rat_str(Rat(k.y2, 2));
        if (k.v2 % 2 == 0) e["v"] = k.v2 / 2;
        else e["v"] = rat_str(Rat(k.v2, 2));
        e["coeff"] = c.str();
        terms.push_back(e);
    }
    return terms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K3 rational homotopy ranks, M24 twinings and weak Jacobi forms"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    std::string format = "pretty";
    app.add_option("--format", format, "output format: pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    DataPaths paths;

    // homotopy
    auto* cmd_h = app.add_subcommand("homotopy", "ranks of a smooth complete intersection");
    int dim = 2, order = 10;
    std::vector<int> degrees;
    cmd_h->add_option("--dim", dim, "complex dimension n")->required();
    cmd_h->add_option("--degrees", degrees, "hypersurface degrees")->required()->delimiter(',');
    cmd_h->add_option("--order", order, "number of ranks to compute");

    // rho / multiplicities
    auto* cmd_r = app.add_subcommand("rho", "twined rank grid rho_j(g)");
    auto* cmd_m = app.add_subcommand("multiplicities", "multiplicity grid rho_j(chi_i)");
    int jmax = 19;
    bool golden = false;
    for (auto* c : {cmd_r, cmd_m}) {
        c->add_option("--jmax", jmax, "largest j");
        c->add_flag("--golden", golden, "compare against the shipped fixtures");
        add_data_flags(c, paths);
    }

    // jacobi
    auto* cmd_j = app.add_subcommand("jacobi", "q,y-expansions of the twined Jacobi forms");
    std::string klass;
    bool want_h = false, want_identity = false, run_check = false;
    int jorder = 2;
    cmd_j->add_option("--class", klass, "conjugacy class label (e.g. 1A)");
    cmd_j->add_flag("--h", want_h, "emit the two-elliptic-variable form H");
    cmd_j->add_flag("--identity", want_identity, "emit the level-one form");
    cmd_j->add_flag("--check", run_check, "run the per-class check suite");
    cmd_j->add_option("--order", jorder, "q-expansion order");
    add_data_flags(cmd_j, paths);

    // verify
    auto* cmd_v = app.add_subcommand("verify", "run the verification harness");
    bool full = false;
    std::vector<std::string> only;
    verify::Options vopt;
    cmd_v->add_flag("--full", full, "run every suite at the default ranges");
    cmd_v->add_option("--only", only, "restrict to sections")->delimiter(',');
    cmd_v->add_option("--mmax", vopt.rho_mmax, "oracle-triangle range");
    cmd_v->add_option("--bounds-mmax", vopt.bounds.sandwich_mmax, "bounds range");
    cmd_v->add_option("--jacobi-order", vopt.jacobi_order, "q-order of the Jacobi suite");
    cmd_v->add_option("--pleth-order", vopt.pleth_order, "plethysm round-trip order");
    cmd_v->add_option("--pleth-trials", vopt.pleth_trials, "random trials");
    add_data_flags(cmd_v, paths);

    // table
    auto* cmd_t = app.add_subcommand("table", "dump or validate the character table");
    bool validate_only = false;
    cmd_t->add_flag("--validate-only", validate_only, "load and validate, print nothing");
    add_data_flags(cmd_t, paths);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_h->parsed()) {
            homotopy::CompleteIntersection X{dim, degrees};
            Int chi = homotopy::euler_char_ci(X);
            Int ell = homotopy::ell_invariant(dim, chi);
            auto roots = homotopy::ranks_via_roots(dim, ell, chi, order);
            auto peel = homotopy::ranks_via_plethysm(dim, ell, order);
            bool agree = roots == peel;
            auto px = homotopy::space_poincare(dim, ell, 2 * dim);
            auto pl = homotopy::loop_poincare(dim, ell, std::min(order, 12));
            if (format == "json") {
                json out;
                out["dim"] = dim;
                out["degrees"] = degrees;
                out["chi"] = chi.str();
                out["ell"] = ell.str();
                out["ell_outside_geometric_regime"] = ell < 0;
                out["poincare_X"] = px.str();
                out["poincare_loop"] = pl.str();
                out["ranks"] = ranks_json(roots);
                out["ranks_via_plethysm"] = ranks_json(peel);
                out["routes_agree"] = agree;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "chi = " << chi << ", ell = " << ell << "\n";
                if (ell < 0)
                    std::cout << "note: ell < 0 lies outside the geometric regime; formal result\n";
                std::cout << "P_X = " << px.str() << "\n";
                std::cout << "P_loop = " << pl.str() << "\n";
                std::cout << "ranks (roots):    " << fmt_ranks(roots) << "\n";
                std::cout << "ranks (plethysm): " << fmt_ranks(peel) << "\n";
                std::cout << "routes " << (agree ? "agree" : "DISAGREE") << "\n";
            }
            return agree ? 0 : 1;
        }

        if (cmd_r->parsed() || cmd_m->parsed()) {
            auto table = CharacterTable::load(paths.table_text());
            auto grid = rho::multiplicity_table(table, jmax);
            bool golden_ok = true;
            std::string golden_witness;
            if (golden) {
                auto fixtures = data::parse_multiplicity_fixtures(paths.fixtures_text());
                int jfix = std::min<int>(jmax, static_cast<int>(fixtures.size()));
                for (int j = 1; j <= jfix; ++j)
                    for (int i = 0; i < kNumClasses; ++i) {
                        const Int& got = grid.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)];
                        const Int& want = fixtures[static_cast<size_t>(j - 1)][static_cast<size_t>(i)];
                        if (got != want) {
                            golden_ok = false;
                            if (golden_witness.empty())
                                golden_witness = "j=" + std::to_string(j) + ", chi_" +
                                                 std::to_string(i + 1) + ": expected " + want.str() +
                                                 ", got " + got.str();
                        }
                    }
            }
            if (cmd_r->parsed()) {
                if (format == "json") {
                    json out;
                    for (int c = 0; c < kNumClasses; ++c)
                        out[table.cls(c).label] = ranks_json(grid.ranks[static_cast<size_t>(c)]);
                    if (golden) out["golden_pass"] = golden_ok;
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (int c = 0; c < kNumClasses; ++c)
                        std::cout << table.cls(c).label << ": "
                                  << fmt_ranks(grid.ranks[static_cast<size_t>(c)]) << "\n";
                }
            } else {
                if (format == "json") {
                    json out;
                    for (int i = 0; i < kNumClasses; ++i) {
                        json col = json::array();
                        for (int j = 1; j <= jmax; ++j)
                            col.push_back(grid.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)].str());
                        out["chi_" + std::to_string(i + 1)] = col;
                    }
                    if (golden) out["golden_pass"] = golden_ok;
                    std::cout << out.dump(2) << "\n";
                } else if (format == "csv") {
                    // one block per irreducible, mirroring the fixture layout
                    for (int i = 0; i < kNumClasses; ++i) {
                        std::cout << "chi_" << (i + 1) << "\n";
                        for (int j = 1; j <= jmax; ++j)
                            std::cout << j << ","
                                      << grid.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)] << "\n";
                    }
                } else {
                    for (int j = 1; j <= jmax; ++j) {
                        std::cout << "j=" << j << ":";
                        for (int i = 0; i < kNumClasses; ++i)
                            std::cout << " " << grid.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)];
                        std::cout << "\n";
                    }
                }
            }
            if (golden)
                std::cout << (golden_ok ? "golden: PASS" : "golden: FAIL " + golden_witness) << "\n";
            return golden_ok ? 0 : 1;
        }

        if (cmd_j->parsed()) {
            auto table = CharacterTable::load(paths.table_text());
            auto forms = jacobi::load_class_form_data(paths.forms_text());
            jacobi::FormContext ctx(forms, jorder);
            int rc = 0;
            jacobi::QYJet jet(0);
            std::string what;
            if (want_h) {
                jet = ctx.h_threevar();
                what = "H";
            } else if (want_identity || klass.empty()) {
                jet = ctx.phi_identity();
                what = "phi";
            } else {
                table.class_index(klass);  // rejects unknown labels early
                jet = ctx.phi_g(klass);
                what = "phi_" + klass;
            }
            if (run_check && !want_h) {
                const std::string lbl = klass.empty() ? "1A" : klass;
                int ci = table.class_index(lbl);
                jacobi::QYJet phi = ctx.phi_g(lbl);
                Int r1 = rho::rho1(table, ci);
                bool law = phi.q0_slice().coeff({0, 0, 0}) == MultiQuad(r1) &&
                           phi.q0_slice().coeff({0, -4, 0}) == MultiQuad(1L) &&
                           phi.q0_slice().coeff({0, 4, 0}) == MultiQuad(1L);
                bool even = phi.substitute_y_inverse().equal_up_to(phi, phi.trunc48());
                bool even_ok = even == ctx.form_data(lbl).D.is_zero();
                auto mag = jacobi::cd_magnitude_check(ctx.form_data(lbl));
                bool ident_ok = !want_identity && lbl == "1A"
                                    ? ctx.phi_identity().equal_up_to(phi, phi.trunc48())
                                    : true;
                bool pass = law && even_ok && mag.pass && ident_ok && phi.integral_exponents();
                std::cout << "check " << lbl << ": " << (pass ? "PASS" : "FAIL") << "\n";
                rc = pass ? 0 : 1;
            }
            if (format == "json") {
                json out;
                out["form"] = what;
                out["order"] = jorder;
                out["terms"] = jet_json(jet);
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [k, c] : jet.terms()) {
                    std::cout << "q^" << rat_str(Rat(k.q48, 48)) << " y^" << rat_str(Rat(k.y2, 2));
                    if (k.v2 != 0) std::cout << " v^" << rat_str(Rat(k.v2, 2));
                    std::cout << " : " << c.str() << "\n";
                }
            }
            return rc;
        }

        if (cmd_v->parsed()) {
            if (!only.empty()) vopt.only.insert(only.begin(), only.end());
            vopt.bounds.lb_mmax = vopt.bounds.sandwich_mmax;
            vopt.bounds.ub_mmax = vopt.bounds.sandwich_mmax;
            vopt.bounds.ab_xmax = vopt.bounds.sandwich_mmax;
            auto table = CharacterTable::load(paths.table_text());
            auto forms = jacobi::load_class_form_data(paths.forms_text());
            auto fixtures = data::parse_multiplicity_fixtures(paths.fixtures_text());
            auto results = verify::run(table, forms, fixtures, vopt);
            return emit_verify(results, format);
        }

        if (cmd_t->parsed()) {
            auto table = CharacterTable::load(paths.table_text());
            if (validate_only) {
                std::cout << "table OK: 26 classes, group order " << table.group_order() << "\n";
                return 0;
            }
            if (format == "json") {
                json out;
                out["group_order"] = table.group_order().str();
                json classes = json::array();
                for (int c = 0; c < kNumClasses; ++c) {
                    json e;
                    e["label"] = table.cls(c).label;
                    e["order"] = table.cls(c).element_order;
                    e["cycle_shape"] = table.cls(c).cycle_shape.str();
                    e["centralizer"] = table.centralizer_order(c).str();
                    classes.push_back(e);
                }
                out["classes"] = classes;
                json chars = json::array();
                for (int i = 0; i < kNumClasses; ++i) {
                    json row = json::array();
                    for (int c = 0; c < kNumClasses; ++c)
                        row.push_back(table.irreducible(i).at(c).str());
                    chars.push_back(row);
                }
                out["irreducibles"] = chars;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "group order " << table.group_order() << "\n";
                for (int c = 0; c < kNumClasses; ++c)
                    std::cout << table.cls(c).label << " order=" << table.cls(c).element_order
                              << " shape=" << table.cls(c).cycle_shape.str()
                              << " #C=" << table.centralizer_order(c) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
