#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdform/constructions.hpp"
#include "hdform/cyclic.hpp"
#include "hdform/group.hpp"
#include "hdform/json_io.hpp"
#include "hdform/lie.hpp"
#include "hdform/structure.hpp"

namespace py = pybind11;
using namespace hdform;

namespace {

// Rationals cross the boundary as strings (or python ints) to stay exact.
Rational rat_in(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Vec vec_in(const py::sequence& seq) {
    Vec out;
    for (const auto& item : seq) out.push_back(rat_in(item));
    return out;
}

Matrix matrix_in(const py::sequence& rows) {
    std::vector<Vec> data;
    for (const auto& row : rows) data.push_back(vec_in(row.cast<py::sequence>()));
    if (data.empty()) throw std::invalid_argument("empty matrix");
    Matrix m(static_cast<int>(data.size()), static_cast<int>(data[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(data[i].size()) != m.cols()) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

py::list vec_out(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(to_string(x));
    return out;
}

py::list matrix_out(const Matrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(to_string(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list basis_out(const std::vector<Matrix>& mats) {
    py::list out;
    for (const auto& m : mats) out.append(matrix_out(m));
    return out;
}

std::vector<Vec> vectors_in(const py::sequence& seq) {
    std::vector<Vec> out;
    for (const auto& item : seq) out.push_back(vec_in(item.cast<py::sequence>()));
    return out;
}

py::dict report_out(const Report& r) {
    py::dict out;
    py::list items;
    for (const auto& item : r.items) items.append(py::make_tuple(item.what, item.pass));
    out["items"] = items;
    out["all_pass"] = r.all_pass();
    return out;
}

}  // namespace

PYBIND11_MODULE(_hdform, mod) {
    mod.doc() = "exact rational analysis of symmetric multilinear forms";

    py::register_exception<ParseError>(mod, "FormParseError", PyExc_ValueError);
    py::register_exception<NoRationalLiftError>(mod, "NoRationalLift", PyExc_ArithmeticError);
    py::register_exception<NotIsometryError>(mod, "NotIsometry", PyExc_ValueError);
    py::register_exception<NotInCenterError>(mod, "NotInCenter", PyExc_RuntimeError);

    py::class_<SymmetricForm>(mod, "SymmetricForm")
        .def(py::init<int, int>(), py::arg("dim"), py::arg("degree"))
        .def_property_readonly("dim", &SymmetricForm::dim)
        .def_property_readonly("degree", &SymmetricForm::degree)
        .def("entry",
             [](const SymmetricForm& f, const std::vector<int>& idx) { return to_string(f.entry(idx)); })
        .def("set_entry",
             [](SymmetricForm& f, const std::vector<int>& idx, const py::handle& value) {
                 f.set_entry(idx, rat_in(value));
             })
        .def("entries",
             [](const SymmetricForm& f) {
                 py::dict out;
                 for (const auto& [idx, value] : f.entries()) out[py::tuple(py::cast(idx))] = to_string(value);
                 return out;
             })
        .def("to_json", [](const SymmetricForm& f) { return form_to_json(f).dump(2); })
        .def_static("from_json", [](const std::string& text) { return parse_form(text); })
        .def("__eq__", [](const SymmetricForm& a, const SymmetricForm& b) { return a == b; })
        .def("__repr__", [](const SymmetricForm& f) {
            return "SymmetricForm(dim=" + std::to_string(f.dim()) + ", degree=" + std::to_string(f.degree()) +
                   ", entries=" + std::to_string(f.entries().size()) + ")";
        });

    py::class_<CyclicData>(mod, "CyclicData")
        .def_readonly("n", &CyclicData::n)
        .def_readonly("d", &CyclicData::d)
        .def_readonly("form", &CyclicData::form)
        .def_property_readonly("psi", [](const CyclicData& c) { return matrix_out(c.psi); })
        .def_property_readonly("grading", [](const CyclicData& c) { return matrix_out(c.grading); })
        .def_property_readonly("witt", [](const CyclicData& c) { return basis_out(c.witt); });

    mod.def("evaluate",
            [](const SymmetricForm& f, const py::sequence& vectors) { return to_string(evaluate(f, vectors_in(vectors))); },
            py::arg("form"), py::arg("vectors"));
    mod.def("transform",
            [](const SymmetricForm& f, const py::sequence& m) { return transform(f, matrix_in(m)); });
    mod.def("is_isometry",
            [](const SymmetricForm& f, const py::sequence& m) { return is_isometry(f, matrix_in(m)); });
    mod.def("orthogonal_sum", &orthogonal_sum);
    mod.def("polarize_terms",
            [](int dim, int degree, const py::dict& terms) {
                HomoPoly p(dim, degree);
                for (const auto& [key, value] : terms)
                    p.set_coeff(key.cast<std::vector<int>>(), rat_in(value));
                return polarize(p);
            },
            py::arg("dim"), py::arg("degree"), py::arg("terms"),
            "polarize a polynomial given as {exponent tuple: coefficient}");
    mod.def("associated_terms", [](const SymmetricForm& f) {
        const HomoPoly p = associated_poly(f);
        py::dict out;
        for (const auto& [exps, value] : p.terms()) out[py::tuple(py::cast(exps))] = to_string(value);
        return out;
    });

    mod.def("radical", [](const SymmetricForm& f) {
        py::list out;
        for (const auto& v : radical(f)) out.append(vec_out(v));
        return out;
    });
    mod.def("is_regular", &is_regular);
    mod.def("center_basis", [](const SymmetricForm& f) {
        const CenterResult r = center(f);
        py::dict out;
        out["members"] = basis_out(r.basis.members);
        out["dim"] = r.basis.dim();
        out["input_regular"] = r.input_regular;
        out["maximal"] = is_maximal_center(r.basis);
        return out;
    });
    mod.def("lie_basis", [](const SymmetricForm& f) { return basis_out(lie_algebra(f).members); });
    mod.def("lie_derived_series", [](const SymmetricForm& f) { return derived_series(lie_algebra(f)); });
    mod.def("decompose", [](const SymmetricForm& f) {
        const Decomposition dec = decompose(f);
        py::list comps;
        for (const auto& comp : dec.components) comps.append(py::make_tuple(comp.form, matrix_out(comp.embedding)));
        py::dict out;
        out["components"] = comps;
        out["basis_change"] = matrix_out(dec.basis_change);
        out["indecomposable_over_Q"] = dec.indecomposable_over_Q();
        return out;
    });
    mod.def("two_regular_witness",
            [](const SymmetricForm& f, int budget) -> py::object {
                const auto w = two_regular_falsifier(f, budget);
                return w ? py::object(vec_out(*w)) : py::none();
            },
            py::arg("form"), py::arg("budget") = 2);

    mod.def("cyclic_form", &cyclic_form, py::arg("n"), py::arg("d"));
    mod.def("witt_report", [](int n, int d) { return report_out(witt_check(cyclic_form(n, d))); });
    mod.def("grading_report", [](int n, int d) { return report_out(verify_grading(cyclic_form(n, d))); });
    mod.def("embed_rho",
            [](const py::sequence& f, int n, int d) { return matrix_out(embed_rho(matrix_in(f), n, d)); });

    mod.def("group_mul", [](int n, const py::sequence& a, const py::sequence& b) {
        return vec_out(group_mul(CenterAut(n, vec_in(a)), CenterAut(n, vec_in(b))).a);
    });
    mod.def("group_inv",
            [](int n, const py::sequence& a) { return vec_out(group_inv(CenterAut(n, vec_in(a))).a); });
    mod.def("chi", [](const py::sequence& sigma, int n, int d) {
        return vec_out(chi(matrix_in(sigma), cyclic_form(n, d)).a);
    });
    mod.def("lift",
            [](int n, int d, const py::sequence& a) { return matrix_out(lift(CenterAut(n, vec_in(a)), n, d)); });
    mod.def("kernel_check", [](int n, int d) { return basis_out(kernel_check(n, d)); });

    mod.def("trace_form_matrix_algebra", &trace_form_matrix_algebra, py::arg("m"), py::arg("d"));
    mod.def("trace_form_number_field",
            [](const py::sequence& minpoly, const py::sequence& b, int d) {
                NumberFieldSpec spec;
                spec.minpoly = Poly(vec_in(minpoly));
                spec.b = vec_in(b);
                return trace_form_number_field(spec, d);
            },
            py::arg("minpoly"), py::arg("b"), py::arg("d"),
            "minpoly as ascending coefficients, monic (leading 1 last)");
    mod.def("diagonal_form",
            [](const py::sequence& coeffs, int d) { return diagonal_form(vec_in(coeffs), d); });
}
