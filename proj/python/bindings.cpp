#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ospbasis/action.hpp"
#include "ospbasis/errors.hpp"
#include "ospbasis/json_io.hpp"
#include "ospbasis/verify.hpp"

namespace py = pybind11;
using namespace ospbasis;

using Rows = std::vector<std::vector<int>>;

namespace {

py::int_ to_py(const Integer& z)
{
    return py::int_(py::str(z.get_str()));
}

SsytTableau make_tableau(const Rows& rows, std::optional<int> n)
{
    const int top = std::max(1, max_entry(rows));
    return SsytTableau(n.value_or(top), rows);
}

py::list table_terms(const ActionTable& t)
{
    py::list out;
    for (const auto& [b, c] : t.terms)
        out.append(py::make_tuple(b.rows(), to_py(c)));
    return out;
}

py::list int_vector(const IntVector& v)
{
    py::list out;
    for (const auto& z : v)
        out.append(to_py(z));
    return out;
}

py::list int_matrix(const IntMatrix& u)
{
    py::list out;
    for (std::size_t k = 0; k < u.size(); ++k) {
        py::list row;
        for (std::size_t l = 0; l < u.size(); ++l)
            row.append(to_py(u.at(k, l)));
        out.append(row);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_ospbasis, m)
{
    m.doc() = "Tableau bases and generator matrix elements for osp(1|2n) paraboson Fock spaces";

    py::register_exception<invalid_tableau>(m, "InvalidTableau", PyExc_ValueError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_ArithmeticError);

    m.attr("SCHEMA_VERSION") = schema_version;

    m.def(
        "enumerate",
        [](int n, int p, const std::vector<int>& weight) {
            std::vector<Rows> out;
            for (const auto& a : enumerate_ssyt(n, WeightVector(weight), std::min(n, p)))
                out.push_back(a.rows());
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("weight"));

    m.def(
        "kostka",
        [](const std::vector<int>& shape, const std::vector<int>& weight) {
            return kostka(Partition(shape), WeightVector(weight));
        },
        py::arg("shape"), py::arg("weight"));

    m.def(
        "tableau_less",
        [](const Rows& a, const Rows& b, int n) { return tableau_less(SsytTableau(n, a), SsytTableau(n, b)); },
        py::arg("a"), py::arg("b"), py::arg("n"));

    m.def(
        "vector",
        [](const Rows& rows, int p, std::optional<int> n, bool unnormalized) {
            const auto v = build_omega_expansion(make_tableau(rows, n), p);
            const auto poly = unnormalized ? v.unnormalized() : v.value();
            py::list out;
            for (const auto& [key, c] : poly.terms())
                out.append(py::make_tuple(key.gamma.rows(), CliffordMonomial(p, key.eta).parity_vector(), to_py(c)));
            return out;
        },
        py::arg("tableau"), py::arg("p"), py::arg("n") = py::none(), py::arg("unnormalized") = false,
        "Terms (gamma, eta, coeff) of omega~_A(p), or of omega_A(p) when unnormalized.");

    m.def(
        "coeff",
        [](const Rows& rows, const Rows& gamma, int p, const std::string& method, std::optional<int> n) {
            const auto a = make_tableau(rows, n);
            const auto g = ExponentMatrix::from_rows(gamma);
            if (method == "permutation")
                return to_py(coeff_by_permutation(a, g, p));
            if (method == "appendix-b")
                return to_py(coeff_by_appendix_b(a, g, p));
            if (method == "appendix-b-literal")
                return to_py(coeff_by_appendix_b(a, g, p, AppendixReading::literal));
            if (method == "extraction")
                return to_py(coeff_by_extraction(build_omega_expansion(a, p), g));
            throw std::invalid_argument("unknown method '" + method + "'");
        },
        py::arg("tableau"), py::arg("gamma"), py::arg("p"), py::arg("method") = "permutation",
        py::arg("n") = py::none());

    m.def(
        "orbit_stats",
        [](const Rows& rows, const Rows& gamma, int p, std::optional<int> n) {
            PermutationSumStats s;
            const auto c = coeff_by_permutation(make_tableau(rows, n), ExponentMatrix::from_rows(gamma), p, &s);
            py::dict d;
            d["coeff"] = to_py(c);
            d["group_order"] = s.group_order;
            d["distinct_tableaux"] = s.distinct_tableaux;
            d["not_column_distinct"] = s.not_column_distinct;
            d["positive"] = s.positive;
            d["negative"] = s.negative;
            return d;
        },
        py::arg("tableau"), py::arg("gamma"), py::arg("p"), py::arg("n") = py::none());

    m.def(
        "u_matrix",
        [](int n, int p, const std::vector<int>& weight) { return int_matrix(get_context(n, p, WeightVector(weight))->u()); },
        py::arg("n"), py::arg("p"), py::arg("weight"));

    m.def(
        "act",
        [](const std::string& generator, int i, const Rows& rows, int p, std::optional<int> n) {
            const auto g = parse_generator(generator);
            const auto a = make_tableau(rows, n ? n : std::optional<int>(std::max({1, i, max_entry(rows)})));
            py::dict d;
            if (g == Generator::X || g == Generator::D) {
                const auto detail = act_detailed(g, i, a, p);
                d["terms"] = table_terms(detail.table);
                std::vector<Rows> basis;
                for (const auto& b : detail.basis)
                    basis.push_back(b.rows());
                d["basis"] = basis;
                d["U"] = int_matrix(detail.u);
                d["f"] = int_vector(detail.f);
            } else {
                d["terms"] = table_terms(act_verma(g, i, a, p));
            }
            return d;
        },
        py::arg("generator"), py::arg("i"), py::arg("tableau"), py::arg("p"), py::arg("n") = py::none(),
        "Expansion of X_i, D_i (on L_n(p)) or B_i^+, B_i^- (induced module) applied to the basis vector of A.");

    m.def(
        "n2_oracle",
        [](const std::string& generator, int i, int k, int l, int m_, int p) {
            return table_terms(n2_oracle(parse_generator(generator), i, k, l, m_, p));
        },
        py::arg("generator"), py::arg("i"), py::arg("k"), py::arg("l"), py::arg("m"), py::arg("p"));

    m.def(
        "n2_tableau", [](int k, int l, int m_) { return n2_tableau(k, l, m_).rows(); }, py::arg("k"), py::arg("l"),
        py::arg("m"));

    m.def(
        "verify_json",
        [](const std::string& suite, const std::vector<int>& n, const std::vector<int>& p, int max_weight, int cases,
           int max_klm) {
            VerifyOptions opt;
            opt.n_values = n;
            opt.p_values = p;
            opt.max_weight = max_weight;
            opt.cases = cases;
            opt.max_klm = max_klm;
            py::gil_scoped_release release;
            return verify_document(run_suite(suite, opt)).dump();
        },
        py::arg("suite"), py::arg("n") = std::vector<int>{1, 2, 3}, py::arg("p") = std::vector<int>{1, 2, 3},
        py::arg("max_weight") = 4, py::arg("cases") = 500, py::arg("max_klm") = 3);
}
