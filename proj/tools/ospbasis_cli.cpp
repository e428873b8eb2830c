#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ospbasis/action.hpp"
#include "ospbasis/errors.hpp"
#include "ospbasis/json_io.hpp"
#include "ospbasis/verify.hpp"

using namespace ospbasis;

namespace {

enum Exit { ok = 0, usage = 1, domain = 2, verification = 3 };

struct Global {
    bool json = false;
    std::string output;
    std::size_t budget = 40320;
};

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw CLI::ValidationError(what, "expected a comma separated list of integers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

int resolve_n(int n_flag, const std::vector<std::vector<int>>& rows)
{
    const int top = max_entry(rows);
    if (n_flag == 0)
        return std::max(1, top);
    if (top > n_flag)
        throw invalid_tableau("tableau entry " + std::to_string(top) + " exceeds n = " + std::to_string(n_flag));
    return n_flag;
}

std::string text_table(const ActionTable& t)
{
    std::ostringstream os;
    os << t.generator_label() << " on " << (t.source.empty() ? "[]" : t.source.to_string()) << "  p=" << t.p << "\n";
    if (t.terms.empty())
        os << "  0\n";
    for (const auto& [b, c] : t.terms)
        os << "  " << c.get_str() << "  " << (b.empty() ? "[]" : b.to_string()) << "\n";
    return os.str();
}

std::string text_matrix(const IntMatrix& u)
{
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t l = 0; l < u.size(); ++l) {
            cells.push_back(u.at(k, l).get_str());
            width = std::max(width, cells.back().size());
        }
    std::ostringstream os;
    for (std::size_t k = 0; k < u.size(); ++k) {
        os << " ";
        for (std::size_t l = 0; l < u.size(); ++l)
            os << " " << std::string(width - cells[k * u.size() + l].size(), ' ') << cells[k * u.size() + l];
        os << "\n";
    }
    return os.str();
}

std::string text_vector(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + v[k].get_str();
    return s + ")";
}

void emit(const Global& g, const std::string& text)
{
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out)
        throw std::runtime_error("cannot open output file '" + g.output + "'");
    out << text;
}

void emit_json(const Global& g, const Json& j)
{
    emit(g, j.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tableau bases and generator matrix elements for the paraboson Fock space L_n(p)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ospbasis 1.0");
    Global g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--output,-o", g.output, "Write to this file instead of stdout");
    app.add_option("--budget", g.budget, "Largest |S_mu| for permutation sums")->check(CLI::PositiveNumber);

    // enumerate
    int en_n = 0, en_p = 0;
    std::string en_weight;
    auto* enumerate = app.add_subcommand("enumerate", "List the tableaux of weight mu with at most p rows");
    enumerate->add_option("--n", en_n, "Rank n")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--p", en_p, "Order p")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--weight,--mu", en_weight, "Weight, e.g. 1,1,1,1")->required();

    // vector
    std::string vec_tableau;
    int vec_p = 0, vec_n = 0;
    bool vec_unnormalized = false;
    auto* vector = app.add_subcommand("vector", "Expand omega~_A(p) into monomials");
    vector->add_option("tableau", vec_tableau, "Tableau rows, e.g. \"1,1,2;2\" (\"[]\" for the vacuum)")->required();
    vector->add_option("--p", vec_p, "Order p")->required()->check(CLI::Range(1, max_clifford_generators));
    vector->add_option("--n", vec_n, "Rank n (default: largest entry)")->check(CLI::PositiveNumber);
    vector->add_flag("--unnormalized", vec_unnormalized, "Print omega_A(p) = lambda_A! omega~_A(p)");

    // act
    std::string act_gen, act_tableau;
    int act_i = 0, act_p = 0, act_n = 0;
    bool act_show = false;
    auto* actc = app.add_subcommand("act", "Expand a generator applied to a basis vector");
    actc->add_option("generator", act_gen, "X, D, B+ or B-")->required();
    actc->add_option("i", act_i, "Generator index")->required()->check(CLI::PositiveNumber);
    actc->add_option("tableau", act_tableau, "Tableau rows")->required();
    actc->add_option("--p", act_p, "Order p")->required()->check(CLI::Range(1, max_clifford_generators));
    actc->add_option("--n", act_n, "Rank n (default: largest of entries and i)")->check(CLI::PositiveNumber);
    actc->add_flag("--show-matrix", act_show, "Also print U_mu and f_mu");

    // matrix
    int mx_n = 0, mx_p = 0;
    std::string mx_weight;
    bool mx_inverse = false, mx_bundle = false;
    auto* matrix = app.add_subcommand("matrix", "Print the unitriangular matrix U_mu");
    matrix->add_option("--n", mx_n, "Rank n")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--p", mx_p, "Order p")->required()->check(CLI::Range(1, max_clifford_generators));
    matrix->add_option("--weight,--mu", mx_weight, "Weight")->required();
    matrix->add_flag("--inverse", mx_inverse, "Also print the inverse");
    matrix->add_flag("--bundle", mx_bundle, "Emit the full context bundle (JSON)");

    // coeff
    std::string cf_tableau, cf_gamma, cf_method = "auto";
    int cf_p = 0, cf_n = 0;
    bool cf_instrument = false;
    auto* coeff = app.add_subcommand("coeff", "Coefficient c_A(gamma) of x^gamma e^eta in omega~_A(p)");
    coeff->add_option("tableau", cf_tableau, "Tableau rows")->required();
    coeff->add_option("--gamma", cf_gamma, "Exponent matrix rows, e.g. \"2,0;1,1\"")->required();
    coeff->add_option("--p", cf_p, "Order p")->required()->check(CLI::Range(1, max_clifford_generators));
    coeff->add_option("--n", cf_n, "Rank n")->check(CLI::PositiveNumber);
    coeff->add_option("--method", cf_method, "auto, permutation, appendix-b, appendix-b-literal or extraction")
        ->check(CLI::IsMember({"auto", "permutation", "appendix-b", "appendix-b-literal", "extraction"}));
    coeff->add_flag("--instrument", cf_instrument, "Report orbit counts of the permutation sum");

    // verify
    std::string vf_suite = "all", vf_n = "1,2,3", vf_p = "1,2,3";
    VerifyOptions vf;
    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", vf_suite, "Suite name or 'all'");
    verify->add_option("--n", vf_n, "Ranks, comma separated");
    verify->add_option("--p", vf_p, "Orders, comma separated");
    verify->add_option("--max-weight", vf.max_weight, "Bound on |mu|")->check(CLI::NonNegativeNumber);
    verify->add_option("--cases", vf.cases, "Randomized cases")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-degree", vf.max_degree, "Degree bound for random polynomials")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-klm", vf.max_klm, "Bound on k, l, m")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", vf.seed, "Random seed");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*enumerate) {
            WeightVector mu(parse_int_list(en_weight, "--weight"));
            if (mu.n() != en_n)
                throw CLI::ValidationError("--weight", "has " + std::to_string(mu.n()) + " entries, expected n = " +
                                                           std::to_string(en_n));
            const auto list = enumerate_ssyt(en_n, mu, std::min(en_n, en_p));
            if (g.json) {
                Json tableaux = Json::array();
                for (const auto& a : list)
                    tableaux.push_back(to_json(a));
                emit_json(g, document("enumerate", Json{{"n", en_n}, {"p", en_p}, {"weight", to_json(mu)},
                                                        {"dimension", list.size()}, {"tableaux", tableaux}}));
            } else {
                std::ostringstream os;
                os << "d = " << list.size() << "\n";
                for (std::size_t k = 0; k < list.size(); ++k)
                    os << "  A" << (k + 1) << "  " << (list[k].empty() ? "[]" : list[k].to_string()) << "\n";
                emit(g, os.str());
            }
        } else if (*vector) {
            const auto rows = parse_rows(vec_tableau);
            const int n = resolve_n(vec_n, rows);
            const SsytTableau a(n, rows);
            const auto v = build_omega_expansion(a, vec_p);
            const auto poly = vec_unnormalized ? v.unnormalized() : v.value();
            if (g.json) {
                emit_json(g, document("vector", Json{{"tableau", to_json(a)}, {"n", n}, {"p", vec_p},
                                                     {"normalized", !vec_unnormalized},
                                                     {"zero", poly.is_zero()}, {"terms", to_json(poly)}}));
            } else {
                std::ostringstream os;
                os << (vec_unnormalized ? "omega" : "omega~") << "_" << (a.empty() ? "[]" : a.to_string())
                   << "(" << vec_p << ") = ";
                if (poly.is_zero())
                    os << "0  (zero vector: " << a.num_rows() << " rows > p)";
                else
                    os << poly.to_string();
                os << "\n";
                emit(g, os.str());
            }
        } else if (*actc) {
            const auto gen = parse_generator(act_gen);
            const auto rows = parse_rows(act_tableau);
            int n = act_n;
            if (n == 0)
                n = std::max({1, act_i, max_entry(rows)});
            n = resolve_n(n, rows);
            if (act_i > n)
                throw CLI::ValidationError("i", "index " + std::to_string(act_i) + " exceeds n = " + std::to_string(n));
            const SsytTableau a(n, rows);
            ActionDetail detail;
            if (gen == Generator::X || gen == Generator::D) {
                detail = act_detailed(gen, act_i, a, act_p);
            } else {
                detail.table = act_verma(gen, act_i, a, act_p);
                detail.shortcut = true;
            }
            if (g.json) {
                Json payload = to_json(detail.table);
                payload["n"] = n;
                if (act_show && !detail.shortcut) {
                    Json basis = Json::array();
                    for (const auto& b : detail.basis)
                        basis.push_back(to_json(b));
                    payload["basis"] = basis;
                    payload["U"] = to_json(detail.u);
                    payload["f"] = to_json(detail.f);
                }
                emit_json(g, document("action", payload));
            } else {
                std::string out = text_table(detail.table);
                if (act_show && !detail.shortcut) {
                    out += "basis:";
                    for (const auto& b : detail.basis)
                        out += "  " + (b.empty() ? std::string("[]") : b.to_string());
                    out += "\nU =\n" + text_matrix(detail.u) + "f = " + text_vector(detail.f) + "\n";
                }
                emit(g, out);
            }
        } else if (*matrix) {
            WeightVector mu(parse_int_list(mx_weight, "--weight"));
            if (mu.n() != mx_n)
                throw CLI::ValidationError("--weight", "has " + std::to_string(mu.n()) + " entries, expected n = " +
                                                           std::to_string(mx_n));
            const auto ctx = get_context(mx_n, mx_p, mu);
            if (mx_bundle) {
                emit_json(g, context_bundle(*ctx));
            } else if (g.json) {
                Json tableaux = Json::array();
                for (const auto& a : ctx->tableaux())
                    tableaux.push_back(to_json(a));
                Json payload{{"n", mx_n}, {"p", mx_p}, {"weight", to_json(mu)}, {"tableaux", tableaux},
                             {"U", to_json(ctx->u())}};
                if (mx_inverse)
                    payload["U_inverse"] = to_json(unitriangular_inverse(ctx->u()));
                emit_json(g, document("matrix", payload));
            } else {
                std::string out = "basis:";
                for (const auto& a : ctx->tableaux())
                    out += "  " + (a.empty() ? std::string("[]") : a.to_string());
                out += "\nU =\n" + text_matrix(ctx->u());
                if (mx_inverse)
                    out += "U^-1 =\n" + text_matrix(unitriangular_inverse(ctx->u()));
                emit(g, out);
            }
        } else if (*coeff) {
            const auto rows = parse_rows(cf_tableau);
            const int n = resolve_n(cf_n, rows);
            const SsytTableau a(n, rows);
            const auto gamma = ExponentMatrix::from_rows(parse_rows(cf_gamma));
            if (gamma.n() != n || gamma.p() != cf_p)
                throw CLI::ValidationError("--gamma", "must be an n x p matrix (" + std::to_string(n) + " x " +
                                                          std::to_string(cf_p) + ")");
            std::string method = cf_method;
            if (method == "auto")
                method = young_group_order(a.weight()) <= g.budget ? "permutation" : "extraction";
            if ((method == "permutation" || cf_instrument) && young_group_order(a.weight()) > g.budget)
                throw CLI::ValidationError("--budget", "|S_mu| = " + young_group_order(a.weight()).get_str() +
                                                           " exceeds the permutation budget");
            PermutationSumStats stats;
            Integer c;
            if (method == "permutation")
                c = coeff_by_permutation(a, gamma, cf_p, &stats);
            else if (method == "appendix-b")
                c = coeff_by_appendix_b(a, gamma, cf_p);
            else if (method == "appendix-b-literal")
                c = coeff_by_appendix_b(a, gamma, cf_p, AppendixReading::literal);
            else
                c = coeff_by_extraction(build_omega_expansion(a, cf_p), gamma);
            if (cf_instrument && method != "permutation")
                coeff_by_permutation(a, gamma, cf_p, &stats);
            if (g.json) {
                Json payload{{"tableau", to_json(a)}, {"gamma", to_json(gamma)}, {"p", cf_p},
                             {"method", method}, {"coeff", integer_to_json(c)}};
                if (cf_instrument)
                    payload["orbit"] = Json{{"group_order", stats.group_order},
                                            {"distinct_tableaux", stats.distinct_tableaux},
                                            {"not_column_distinct", stats.not_column_distinct},
                                            {"positive", stats.positive},
                                            {"negative", stats.negative}};
                emit_json(g, document("coeff", payload));
            } else {
                std::ostringstream os;
                os << "c = " << c.get_str() << "  (" << method << ")\n";
                if (cf_instrument)
                    os << "  |S_mu| = " << stats.group_order << ", " << stats.distinct_tableaux
                       << " tableaux generated, " << stats.not_column_distinct << " not column-distinct, "
                       << stats.positive << " positive, " << stats.negative << " negative\n";
                emit(g, os.str());
            }
        } else if (*verify) {
            vf.n_values = parse_int_list(vf_n, "--n");
            vf.p_values = parse_int_list(vf_p, "--p");
            vf.budget = g.budget;
            const auto& names = suite_names();
            if (vf_suite != "all" && std::find(names.begin(), names.end(), vf_suite) == names.end())
                throw CLI::ValidationError("--suite", "unknown suite '" + vf_suite + "'");
            const auto reports = run_suite(vf_suite, vf);
            bool all = true;
            for (const auto& r : reports)
                all = all && r.passed;
            if (g.json) {
                emit_json(g, verify_document(reports));
            } else {
                std::ostringstream os;
                for (const auto& r : reports) {
                    os << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  checked=" << r.checked;
                    if (r.skipped)
                        os << " skipped=" << r.skipped;
                    if (!r.passed)
                        os << " failures=" << r.failure_count;
                    os << "\n";
                    for (const auto& f : r.failures)
                        os << "    " << f.dump() << "\n";
                }
                emit(g, os.str());
            }
            for (const auto& r : reports)
                std::cerr << r.name << ": " << r.seconds << " s\n";
            return all ? Exit::ok : Exit::verification;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const invalid_tableau& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::domain;
    } catch (const consistency_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return Exit::verification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    return Exit::ok;
}
