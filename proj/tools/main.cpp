#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hdform/constructions.hpp"
#include "hdform/cyclic.hpp"
#include "hdform/group.hpp"
#include "hdform/json_io.hpp"
#include "hdform/lie.hpp"
#include "hdform/structure.hpp"

using nlohmann::json;
using namespace hdform;

namespace {

constexpr int kExitOk = 0;     // success / predicate holds
constexpr int kExitNo = 1;     // mathematically negative answer
constexpr int kExitError = 2;  // input or usage error

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SymmetricForm load_form(const std::string& path) { return parse_form(read_input(path)); }

Matrix load_matrix(const std::string& path) {
    json j;
    try {
        j = json::parse(read_input(path));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

Vec parse_rational_list(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json report_json(const Report& r) {
    json items = json::array();
    json failures = json::array();
    for (const auto& item : r.items) {
        items.push_back({{"what", item.what}, {"pass", item.pass}});
        if (!item.pass) failures.push_back(item.what);
    }
    json out;
    out["relations"] = items;
    out["witt_relations"] = r.all_pass() ? json("all-pass") : json(failures);
    return out;
}

json aut_json(const CenterAut& a) {
    json coords = json::array();
    for (const auto& x : a.a) coords.push_back(to_string(x));
    return coords;
}

int run_regular(const std::string& form_path, int two_regular_budget) {
    const SymmetricForm f = load_form(form_path);
    const auto rad = radical(f);
    json out;
    out["regular"] = rad.empty();
    out["dim_radical"] = rad.size();
    json basis = json::array();
    for (const auto& v : rad) basis.push_back(vec_to_json(v));
    out["radical"] = basis;
    if (two_regular_budget >= 0) {
        const auto witness = two_regular_falsifier(f, two_regular_budget);
        out["two_regular_budget"] = two_regular_budget;
        out["two_regular_witness"] = witness ? vec_to_json(*witness) : json(nullptr);
    }
    emit(out);
    return rad.empty() ? kExitOk : kExitNo;
}

int run_center(const std::string& form_path) {
    const SymmetricForm f = load_form(form_path);
    const CenterResult result = center(f);
    json members = json::array();
    for (const auto& m : result.basis.members) members.push_back(matrix_to_json(m));
    emit({{"dim_center", result.basis.dim()},
          {"members", members},
          {"maximal", is_maximal_center(result.basis)},
          {"input_regular", result.input_regular}});
    return kExitOk;
}

int run_decompose(const std::string& form_path) {
    const Decomposition dec = decompose(load_form(form_path));
    json comps = json::array();
    for (const auto& comp : dec.components)
        comps.push_back({{"dim", comp.form.dim()},
                         {"form", form_to_json(comp.form)},
                         {"embedding", matrix_to_json(comp.embedding)}});
    emit({{"components", comps},
          {"basis_change", matrix_to_json(dec.basis_change)},
          {"indecomposable_over_Q", dec.indecomposable_over_Q()}});
    return kExitOk;
}

int run_lie(const std::string& form_path) {
    const LieBasis basis = lie_algebra(load_form(form_path));
    json members = json::array();
    for (const auto& m : basis.members) members.push_back(matrix_to_json(m));
    emit({{"dim_lie", basis.dim()}, {"members", members}, {"derived_series", derived_series(basis)}});
    return kExitOk;
}

int run_eval(const std::string& form_path, const std::vector<std::string>& vec_args) {
    const SymmetricForm f = load_form(form_path);
    if (static_cast<int>(vec_args.size()) != f.degree())
        throw ParseError("eval needs exactly degree-many --vec arguments");
    std::vector<Vec> vectors;
    for (const auto& text : vec_args) {
        Vec v = parse_rational_list(text);
        if (static_cast<int>(v.size()) != f.dim()) throw ParseError("vector length must match the form dimension");
        vectors.push_back(std::move(v));
    }
    emit({{"value", to_string(evaluate(f, vectors))}});
    return kExitOk;
}

int run_isometry(const std::string& form_path, const std::string& sigma_path) {
    const SymmetricForm f = load_form(form_path);
    const Matrix sigma = load_matrix(sigma_path);
    if (sigma.rows() != f.dim() || sigma.cols() != f.dim())
        throw ParseError("sigma must be square of the form dimension");
    const bool ok = is_isometry(f, sigma);
    emit({{"isometry", ok}});
    return ok ? kExitOk : kExitNo;
}

int run_chi(const std::string& form_path, int n, int d, const std::string& sigma_path) {
    CyclicData cyc;
    if (!form_path.empty()) {
        const SymmetricForm f = load_form(form_path);
        cyc = cyclic_form(f.dim(), f.degree());
        if (!(cyc.form == f))
            throw ParseError("chi needs the standard cyclic form; generate it with the 'cyclic' subcommand");
    } else {
        cyc = cyclic_form(n, d);
    }
    const Matrix sigma = load_matrix(sigma_path);
    const CenterAut a = chi(sigma, cyc);
    emit({{"n", cyc.n}, {"d", cyc.d}, {"a", aut_json(a)}});
    return kExitOk;
}

int run_lift(int n, int d, const std::string& a_text) {
    const Vec coords = parse_rational_list(a_text);
    if (static_cast<int>(coords.size()) != n - 1) throw ParseError("--a needs n-1 coordinates");
    if (coords[0] == 0) throw ParseError("a_1 must be nonzero");
    const CenterAut a(n, coords);
    try {
        const Matrix sigma = lift(a, n, d);
        emit({{"n", n}, {"d", d}, {"a", aut_json(a)}, {"sigma", matrix_to_json(sigma)}});
        return kExitOk;
    } catch (const NoRationalLiftError& e) {
        emit({{"error", "NoRationalLift"}, {"detail", e.what()}});
        return kExitNo;
    }
}

int run_group_mul(int n, const std::string& a_text, const std::string& b_text) {
    const Vec av = parse_rational_list(a_text), bv = parse_rational_list(b_text);
    if (static_cast<int>(av.size()) != n - 1 || static_cast<int>(bv.size()) != n - 1)
        throw ParseError("--a and --b need n-1 coordinates");
    if (av[0] == 0 || bv[0] == 0) throw ParseError("a_1 must be nonzero");
    const CenterAut result = group_mul(CenterAut(n, av), CenterAut(n, bv));
    emit({{"n", n}, {"result", aut_json(result)}});
    return kExitOk;
}

int run_group_inv(int n, const std::string& a_text) {
    const Vec av = parse_rational_list(a_text);
    if (static_cast<int>(av.size()) != n - 1) throw ParseError("--a needs n-1 coordinates");
    if (av[0] == 0) throw ParseError("a_1 must be nonzero");
    emit({{"n", n}, {"result", aut_json(group_inv(CenterAut(n, av)))}});
    return kExitOk;
}

int run_witt(int n, int d) {
    const CyclicData cyc = cyclic_form(n, d);
    json out = report_json(witt_check(cyc));
    out["n"] = n;
    out["d"] = d;
    json grading = json::array();
    for (const auto& item : verify_grading(cyc).items) grading.push_back({{"what", item.what}, {"pass", item.pass}});
    out["grading"] = grading;
    emit(out);
    return kExitOk;
}

int run_polarize(const std::string& poly_path) {
    emit(form_to_json(polarize(parse_homo_poly(read_input(poly_path)))));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analysis of symmetric forms of degree three and higher"};
    app.require_subcommand(1);

    std::string form_path, sigma_path, poly_path, a_text, b_text, coeffs_text, minpoly_text, b_field_text;
    std::vector<std::string> vec_args;
    int n = 0, d = 0, m = 0;
    int two_regular_budget = -1;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a form on vectors");
    eval_cmd->add_option("--form", form_path, "form JSON file, or - for stdin")->required();
    eval_cmd->add_option("--vec", vec_args, "comma-separated rational vector, once per slot")->required();

    auto* polarize_cmd = app.add_subcommand("polarize", "polarize a homogeneous polynomial into a form");
    polarize_cmd->add_option("--poly", poly_path, "polynomial JSON file, or - for stdin")->required();

    auto* regular_cmd = app.add_subcommand("regular", "radical and regularity (exit 1 when irregular)");
    regular_cmd->add_option("--form", form_path)->required();
    regular_cmd->add_option("--two-regular-budget", two_regular_budget,
                            "also search for a 2-regularity counterexample up to this height");

    auto* center_cmd = app.add_subcommand("center", "center basis and maximality");
    center_cmd->add_option("--form", form_path)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "orthogonal decomposition over the rationals");
    decompose_cmd->add_option("--form", form_path)->required();

    auto* lie_cmd = app.add_subcommand("lie", "Lie algebra basis and derived series");
    lie_cmd->add_option("--form", form_path)->required();

    auto* cyclic_cmd = app.add_subcommand("cyclic", "emit the standard cyclic form");
    cyclic_cmd->add_option("--n", n)->required();
    cyclic_cmd->add_option("--d", d)->required();

    auto* witt_cmd = app.add_subcommand("witt", "verify the truncated Witt relations");
    witt_cmd->add_option("--n", n)->required();
    witt_cmd->add_option("--d", d)->required();

    auto* group_mul_cmd = app.add_subcommand("group-mul", "multiply center automorphisms");
    group_mul_cmd->add_option("--n", n)->required();
    group_mul_cmd->add_option("--a", a_text)->required();
    group_mul_cmd->add_option("--b", b_text)->required();

    auto* group_inv_cmd = app.add_subcommand("group-inv", "invert a center automorphism");
    group_inv_cmd->add_option("--n", n)->required();
    group_inv_cmd->add_option("--a", a_text)->required();

    auto* group_cmd = app.add_subcommand("group", "center automorphism group operations");
    group_cmd->require_subcommand(1);
    auto* group_mul_alias = group_cmd->add_subcommand("mul", "multiply center automorphisms");
    group_mul_alias->add_option("--n", n)->required();
    group_mul_alias->add_option("--a", a_text)->required();
    group_mul_alias->add_option("--b", b_text)->required();
    auto* group_inv_alias = group_cmd->add_subcommand("inv", "invert a center automorphism");
    group_inv_alias->add_option("--n", n)->required();
    group_inv_alias->add_option("--a", a_text)->required();

    auto* chi_cmd = app.add_subcommand("chi", "conjugation action of an isometry on the center");
    chi_cmd->add_option("--form", form_path);
    chi_cmd->add_option("--n", n);
    chi_cmd->add_option("--d", d);
    chi_cmd->add_option("--sigma", sigma_path, "matrix JSON file")->required();

    auto* lift_cmd = app.add_subcommand("lift", "rational isometry inducing a center automorphism");
    lift_cmd->add_option("--n", n)->required();
    lift_cmd->add_option("--d", d)->required();
    lift_cmd->add_option("--a", a_text)->required();

    auto* isometry_cmd = app.add_subcommand("isometry", "test a matrix against a form (exit 1 when not)");
    isometry_cmd->add_option("--form", form_path)->required();
    isometry_cmd->add_option("--sigma", sigma_path)->required();

    auto* construct_cmd = app.add_subcommand("construct", "build the example families");
    construct_cmd->require_subcommand(1);
    auto* trace_matrix_cmd = construct_cmd->add_subcommand("trace-matrix", "symmetrized trace form on m x m matrices");
    trace_matrix_cmd->add_option("--m", m)->required();
    trace_matrix_cmd->add_option("--d", d)->required();
    auto* trace_field_cmd = construct_cmd->add_subcommand("trace-field", "trace form of a number field");
    trace_field_cmd->add_option("--minpoly", minpoly_text, "ascending coefficients, monic (leading 1 last)")
        ->required();
    trace_field_cmd->add_option("--b", b_field_text, "power-basis coordinates of the scaling element")->required();
    trace_field_cmd->add_option("--d", d)->required();
    auto* diagonal_cmd = construct_cmd->add_subcommand("diagonal", "diagonal form with the given coefficients");
    diagonal_cmd->add_option("--coeffs", coeffs_text)->required();
    diagonal_cmd->add_option("--d", d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(form_path, vec_args);
        if (polarize_cmd->parsed()) return run_polarize(poly_path);
        if (regular_cmd->parsed()) return run_regular(form_path, two_regular_budget);
        if (center_cmd->parsed()) return run_center(form_path);
        if (decompose_cmd->parsed()) return run_decompose(form_path);
        if (lie_cmd->parsed()) return run_lie(form_path);
        if (cyclic_cmd->parsed()) {
            emit(form_to_json(cyclic_form(n, d).form));
            return kExitOk;
        }
        if (witt_cmd->parsed()) return run_witt(n, d);
        if (group_mul_cmd->parsed() || group_mul_alias->parsed()) return run_group_mul(n, a_text, b_text);
        if (group_inv_cmd->parsed() || group_inv_alias->parsed()) return run_group_inv(n, a_text);
        if (chi_cmd->parsed()) {
            if (form_path.empty() && (n == 0 || d == 0)) throw ParseError("chi needs either --form or both --n and --d");
            return run_chi(form_path, n, d, sigma_path);
        }
        if (lift_cmd->parsed()) return run_lift(n, d, a_text);
        if (isometry_cmd->parsed()) return run_isometry(form_path, sigma_path);
        if (construct_cmd->parsed()) {
            if (trace_matrix_cmd->parsed()) {
                emit(form_to_json(trace_form_matrix_algebra(m, d)));
                return kExitOk;
            }
            if (trace_field_cmd->parsed()) {
                NumberFieldSpec spec;
                spec.minpoly = Poly(parse_rational_list(minpoly_text));
                spec.b = parse_rational_list(b_field_text);
                if (!spec.minpoly.is_monic())
                    throw ParseError("minimal polynomial must be monic: ascending coefficients with leading 1 last");
                emit(form_to_json(trace_form_number_field(spec, d)));
                return kExitOk;
            }
            if (diagonal_cmd->parsed()) {
                emit(form_to_json(diagonal_form(parse_rational_list(coeffs_text), d)));
                return kExitOk;
            }
        }
        throw ParseError("no subcommand selected");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const NotIsometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
}
