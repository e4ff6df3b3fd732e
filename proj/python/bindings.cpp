#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "m24rh/data.hpp"
#include "m24rh/homotopy.hpp"
#include "m24rh/jacobi.hpp"
#include "m24rh/rho.hpp"
#include "m24rh/verify.hpp"

namespace py = pybind11;
using namespace m24rh;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.str())); }

py::list ranks_list(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::object half_exponent(int doubled) {
    if (doubled % 2 == 0) return py::int_(doubled / 2);
    return py::str(rat_str(Rat(doubled, 2)));
}

py::dict jet_dict(const jacobi::QYJet& jet) {
    py::dict out;
    for (const auto& [k, c] : jet.terms()) {
        py::object q = (k.q48 % 48 == 0) ? py::object(py::int_(k.q48 / 48))
                                         : py::object(py::str(rat_str(Rat(k.q48, 48))));
        out[py::make_tuple(q, half_exponent(k.y2), half_exponent(k.v2))] = c.str();
    }
    return out;
}

const std::map<std::string, jacobi::ClassFormData>& builtin_forms() {
    static const auto forms = jacobi::load_class_form_data(data::embedded_class_form_data());
    return forms;
}

}  // namespace

PYBIND11_MODULE(_m24rh, m) {
    m.doc() = "exact K3 rational homotopy ranks, M24 twinings, weak Jacobi forms";

    m.def("euler_char", [](int n, const std::vector<int>& degrees) {
        return to_py(homotopy::euler_char_ci({n, degrees}));
    }, py::arg("n"), py::arg("degrees"), "Euler characteristic of a smooth complete intersection");

    m.def("euler_char_hypersurface", [](int n, int d) {
        return to_py(homotopy::euler_char_hypersurface(n, d));
    }, py::arg("n"), py::arg("d"));

    m.def("homotopy_ranks", [](int n, const std::vector<int>& degrees, int order) {
        homotopy::CompleteIntersection X{n, degrees};
        Int chi = homotopy::euler_char_ci(X);
        Int ell = homotopy::ell_invariant(n, chi);
        auto roots = homotopy::ranks_via_roots(n, ell, chi, order);
        auto peel = homotopy::ranks_via_plethysm(n, ell, order);
        py::dict out;
        out["chi"] = to_py(chi);
        out["ell"] = to_py(ell);
        out["ranks"] = ranks_list(roots);
        out["ranks_via_plethysm"] = ranks_list(peel);
        out["routes_agree"] = roots == peel;
        return out;
    }, py::arg("n"), py::arg("degrees"), py::arg("order") = 10);

    m.def("class_labels", [] {
        std::vector<std::string> out;
        for (int c = 0; c < kNumClasses; ++c) out.push_back(data::builtin_table().cls(c).label);
        return out;
    });

    m.def("group_order", [] { return to_py(data::builtin_table().group_order()); });

    m.def("centralizer_order", [](const std::string& label) {
        const auto& t = data::builtin_table();
        return to_py(t.centralizer_order(t.class_index(label)));
    }, py::arg("label"));

    m.def("power_class", [](const std::string& label, long k) {
        const auto& t = data::builtin_table();
        return t.cls(t.power_class(t.class_index(label), Int(k))).label;
    }, py::arg("label"), py::arg("k"));

    m.def("rho_ranks", [](int jmax) {
        const auto& t = data::builtin_table();
        auto grid = rho::rho_series(t, jmax);
        py::dict out;
        for (int c = 0; c < kNumClasses; ++c)
            out[py::str(t.cls(c).label)] = ranks_list(grid[static_cast<size_t>(c)]);
        return out;
    }, py::arg("jmax") = 19, "twined rank grid rho_j(g)");

    m.def("multiplicities", [](int jmax) {
        const auto& t = data::builtin_table();
        auto grid = rho::multiplicity_table(t, jmax);
        py::list rows;
        for (int j = 1; j <= jmax; ++j) {
            py::list row;
            for (int i = 0; i < kNumClasses; ++i)
                row.append(to_py(grid.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)]));
            rows.append(row);
        }
        return rows;
    }, py::arg("jmax") = 19, "multiplicity grid rho_j(chi_i), rows j = 1..jmax");

    m.def("phi_g", [](const std::string& label, int order) {
        jacobi::FormContext ctx(builtin_forms(), order);
        return jet_dict(ctx.phi_g(label));
    }, py::arg("label"), py::arg("order") = 2,
       "q,y-expansion of the twined form; keys are (q, y, v) exponents");

    m.def("phi_identity", [](int order) {
        jacobi::FormContext ctx(builtin_forms(), order);
        return jet_dict(ctx.phi_identity());
    }, py::arg("order") = 2);

    m.def("h_threevar", [](int order) {
        jacobi::FormContext ctx(builtin_forms(), order);
        return jet_dict(ctx.h_threevar());
    }, py::arg("order") = 2);

    m.def("cd_magnitudes", [] {
        py::dict out;
        for (const auto& [lbl, d] : builtin_forms()) {
            auto m2 = jacobi::cd_magnitude_check(d);
            out[py::str(lbl)] = py::make_tuple(to_py(m2.c_squared), to_py(m2.d_squared), m2.pass);
        }
        return out;
    });

    m.def("verify", [](const std::vector<std::string>& only, int mmax, int jacobi_order) {
        verify::Options opt;
        if (!only.empty()) opt.only.insert(only.begin(), only.end());
        opt.rho_mmax = mmax;
        opt.jacobi_order = jacobi_order;
        auto results = verify::run(data::builtin_table(), builtin_forms(),
                                   data::parse_multiplicity_fixtures(
                                       data::embedded_multiplicity_fixtures()),
                                   opt);
        py::list checks;
        for (const auto& c : results) {
            py::dict e;
            e["section"] = c.section;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            checks.append(e);
        }
        py::dict out;
        out["pass"] = verify::all_pass(results);
        out["checks"] = checks;
        return out;
    }, py::arg("only") = std::vector<std::string>{}, py::arg("mmax") = 24,
       py::arg("jacobi_order") = 3, "run the verification harness");
}
