#include "ospbasis/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "ospbasis/errors.hpp"

namespace ospbasis {

void SuiteReport::fail(Json counterexample, std::size_t keep)
{
    passed = false;
    ++failure_count;
    if (failures.size() < keep)
        failures.push_back(std::move(counterexample));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"relations", "expansion",     "leading",   "coeff-triple",
                                                "unitriangular", "dual-path", "n2-oracle", "verma"};
    return names;
}

std::vector<WeightVector> weights_up_to(int n, int max_total)
{
    std::vector<WeightVector> out;
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            out.emplace_back(mu);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, max_total);
    std::sort(out.begin(), out.end(), [](const WeightVector& a, const WeightVector& b) { return graded_lex_less(a, b); });
    return out;
}

namespace {

// Every semistandard tableau with |mu| <= max_weight and at most max_rows rows.
void for_each_tableau(int n, int max_weight, int max_rows, const std::function<void(const SsytTableau&)>& visit)
{
    for (const auto& mu : weights_up_to(n, max_weight))
        for (const auto& a : enumerate_ssyt(n, mu, max_rows))
            visit(a);
}

// Every gamma in M_{n,p}(N_0) with row sums mu.
void for_each_gamma(const WeightVector& mu, int p, const std::function<void(const ExponentMatrix&)>& visit)
{
    const int n = mu.n();
    ExponentMatrix g(n, p);
    std::function<void(int, int, int)> rec = [&](int i, int alpha, int left) {
        if (i > n) {
            visit(g);
            return;
        }
        if (alpha == p) {
            g.set(i, alpha, left);
            rec(i + 1, 1, i + 1 <= n ? mu(i + 1) : 0);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            g.set(i, alpha, v);
            rec(i, alpha + 1, left - v);
        }
    };
    rec(1, 1, n >= 1 ? mu(1) : 0);
}

std::string gen_label(Generator g, int i)
{
    return generator_name(g) + std::to_string(i);
}

SuiteReport relations(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "relations";
    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const auto ladders = std::array{Ladder::raise, Ladder::lower};
    const int max_n = *std::max_element(opt.n_values.begin(), opt.n_values.end());
    const int max_p = *std::max_element(opt.p_values.begin(), opt.p_values.end());
    for (int c = 0; c < opt.cases; ++c) {
        const int n = uniform(1, max_n);
        const int p = uniform(1, max_p);
        CliffordPoly f(n, p);
        const int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t) {
            ExponentMatrix g(n, p);
            const int degree = uniform(0, opt.max_degree);
            for (int d = 0; d < degree; ++d)
                g.add(uniform(1, n), uniform(1, p), 1);
            const auto eta = static_cast<ParityMask>(uniform(0, (1 << p) - 1));
            int coeff = uniform(-3, 3);
            f.add_term(g, eta, coeff == 0 ? 1 : coeff);
        }
        const int i = uniform(1, n), j = uniform(1, n), l = uniform(1, n);
        const auto xi = ladders[static_cast<std::size_t>(uniform(0, 1))];
        const auto eta = ladders[static_cast<std::size_t>(uniform(0, 1))];
        const auto eps = ladders[static_cast<std::size_t>(uniform(0, 1))];
        const auto defect = triple_relation_defect(i, j, l, xi, eta, eps, f);
        ++r.checked;
        if (!defect.is_zero()) {
            auto sgn = [](Ladder x) { return x == Ladder::raise ? "+" : "-"; };
            r.fail(Json{{"n", n}, {"p", p}, {"i", i}, {"j", j}, {"l", l},
                        {"signs", std::string(sgn(xi)) + sgn(eta) + sgn(eps)},
                        {"f", f.to_string()}, {"defect", defect.to_string()}},
                   opt.max_failures);
        }
    }
    return r;
}

SuiteReport expansion(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "expansion";
    for (int n : opt.n_values)
        for_each_tableau(n, opt.max_weight, n, [&](const SsytTableau& a) {
            for (int p : opt.p_values) {
                ++r.checked;
                const auto seq = build_omega_sequential(a, p);
                const auto exp = build_omega_expansion(a, p);
                const bool ok = seq.value() == exp.value() &&
                                (a.num_rows() > p ? exp.is_zero() : !exp.is_zero()) &&
                                exp.value().homogeneous_of_weight(a.weight()) && exp.value().parity_coupled();
                if (!ok)
                    r.fail(Json{{"tableau", to_json(a)}, {"p", p}, {"sequential", seq.value().to_string()},
                                {"expansion", exp.value().to_string()}},
                           opt.max_failures);
            }
        });
    return r;
}

SuiteReport leading(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "leading";
    for (int n : opt.n_values)
        for (int p : opt.p_values)
            for (const auto& mu : weights_up_to(n, opt.max_weight)) {
                const auto list = enumerate_ssyt(n, mu, std::min(n, p));
                std::vector<TableauVector> vecs;
                for (const auto& a : list)
                    vecs.push_back(build_omega_expansion(a, p));
                for (std::size_t k = 0; k < list.size(); ++k) {
                    const auto& a = list[k];
                    const auto gamma = leading_exponent(a, p);
                    const Integer extracted = coeff_by_extraction(vecs[k], gamma);
                    const int closed = leading_sign_closed_form(a.shape());
                    const int inversions = tableau_sign(leading_tableau(a, p));
                    ++r.checked;
                    bool ok = extracted == closed && closed == inversions;
                    if (ok && young_group_order(mu) <= opt.budget)
                        ok = coeff_by_permutation(a, gamma, p) == closed;
                    if (!ok)
                        r.fail(Json{{"tableau", to_json(a)}, {"p", p}, {"extracted", integer_to_json(extracted)},
                                    {"closed_form", closed}, {"inversion_sign", inversions}},
                               opt.max_failures);
                    for (std::size_t l = 0; l < k; ++l) {
                        ++r.checked;
                        const Integer c = coeff_by_extraction(vecs[l], gamma);
                        if (c != 0)
                            r.fail(Json{{"A", to_json(list[l])}, {"B", to_json(a)}, {"p", p},
                                        {"c_A(gamma_B)", integer_to_json(c)}},
                                   opt.max_failures);
                    }
                }
            }
    return r;
}

SuiteReport coeff_triple(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "coeff-triple";
    for (int n : opt.n_values)
        for (int p : opt.p_values)
            for_each_tableau(n, opt.max_weight, std::min(n, p), [&](const SsytTableau& a) {
                if (young_group_order(a.weight()) > opt.budget) {
                    ++r.skipped;
                    return;
                }
                const auto v = build_omega_expansion(a, p);
                for_each_gamma(a.weight(), p, [&](const ExponentMatrix& gamma) {
                    ++r.checked;
                    const auto c1 = coeff_by_permutation(a, gamma, p);
                    const auto c2 = coeff_by_appendix_b(a, gamma, p);
                    const auto c3 = coeff_by_extraction(v, gamma);
                    if (c1 != c2 || c2 != c3)
                        r.fail(Json{{"tableau", to_json(a)}, {"p", p}, {"gamma", to_json(gamma)},
                                    {"permutation", integer_to_json(c1)}, {"appendix_b", integer_to_json(c2)},
                                    {"extraction", integer_to_json(c3)}},
                               opt.max_failures);
                });
            });
    return r;
}

SuiteReport unitriangular(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "unitriangular";
    for (int n : opt.n_values)
        for (int p : opt.p_values)
            for (const auto& mu : weights_up_to(n, opt.max_weight)) {
                ++r.checked;
                std::size_t expected = 0;
                for (const auto& lambda : partitions_of(mu.total(), std::min(n, p)))
                    expected += kostka(lambda, mu);
                try {
                    const auto ctx = get_context(n, p, mu);
                    const auto u = build_U(*ctx);
                    const auto inv = unitriangular_inverse(u);
                    bool ok = u.is_upper_unitriangular() && ctx->dimension() == expected;
                    for (std::size_t k = 0; ok && k < u.size(); ++k)
                        for (std::size_t l = 0; l < u.size(); ++l) {
                            Integer s = 0;
                            for (std::size_t m = 0; m < u.size(); ++m)
                                s += u.at(k, m) * inv.at(m, l);
                            if (s != (k == l ? 1 : 0))
                                ok = false;
                        }
                    if (!ok)
                        r.fail(Json{{"n", n}, {"p", p}, {"weight", to_json(mu)}, {"dimension", ctx->dimension()},
                                    {"expected_dimension", expected}, {"U", to_json(u)}},
                               opt.max_failures);
                } catch (const consistency_error& e) {
                    r.fail(Json{{"n", n}, {"p", p}, {"weight", to_json(mu)}, {"error", e.what()}}, opt.max_failures);
                }
            }
    return r;
}

SuiteReport dual_path(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "dual-path";
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::pair<int, SsytTableau>> pool; // (p, A)
    for (int n : opt.n_values)
        for (int p : opt.p_values)
            for_each_tableau(n, opt.max_weight, std::min(n, p), [&](const SsytTableau& a) { pool.emplace_back(p, a); });
    if (pool.empty())
        return r;
    CoeffBudget budget{opt.budget};
    for (int c = 0; c < opt.cases; ++c) {
        const auto& [p, a] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        const int n = a.n();
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        const Generator g = std::uniform_int_distribution<int>(0, 1)(rng) ? Generator::X : Generator::D;
        if (g == Generator::D && a.weight()(i) == 0) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        const auto source = build_omega_expansion(a, p);
        const auto ctx = get_context(n, p, a.weight().shifted(i, g == Generator::X ? 1 : -1));
        const auto v = g == Generator::X ? apply_X(i, source.value()) : apply_D(i, source.value());
        const auto direct = f_vector(v, *ctx);
        const auto by_coeff = f_vector_by_coefficients(g, i, a, *ctx, budget);
        if (direct != by_coeff)
            r.fail(Json{{"tableau", to_json(a)}, {"p", p}, {"generator", gen_label(g, i)},
                        {"direct", to_json(direct)}, {"coefficients", to_json(by_coeff)}},
                   opt.max_failures);
    }
    return r;
}

SuiteReport n2_oracle_suite(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "n2-oracle";
    for (int p : opt.p_values)
        for (int k = 0; k <= opt.max_klm; ++k)
            for (int l = 0; l <= opt.max_klm; ++l)
                for (int m = 0; m <= opt.max_klm; ++m) {
                    if (p == 1 && m > 0) {
                        r.skipped += 4; // A(k,l,m) is not in Y_2(1)
                        continue;
                    }
                    for (auto g : {Generator::X, Generator::D})
                        for (int i = 1; i <= 2; ++i) {
                            ++r.checked;
                            const auto computed = act(g, i, n2_tableau(k, l, m), p);
                            const auto expected = n2_oracle(g, i, k, l, m, p);
                            if (!(computed == expected))
                                r.fail(Json{{"k", k}, {"l", l}, {"m", m}, {"p", p}, {"generator", gen_label(g, i)},
                                            {"computed", to_json(computed)}, {"closed_form", to_json(expected)}},
                                       opt.max_failures);
                        }
                }
    return r;
}

SuiteReport verma(const VerifyOptions& opt)
{
    SuiteReport r;
    r.name = "verma";
    for (int n : opt.n_values) {
        if (n < 2)
            continue;
        for_each_tableau(n, opt.max_weight, n, [&](const SsytTableau& a) {
            for (int i = 1; i <= n; ++i)
                for (auto g : {Generator::BPlus, Generator::BMinus})
                    for (int p : opt.p_values) {
                        ++r.checked;
                        const auto base = act_verma(g, i, a, p);
                        const auto shifted = act_verma_affine(g, i, a, p, n + 1, n + 2);
                        Json problem;
                        if (!(base == shifted))
                            problem = Json{{"orders_n", to_json(base)}, {"orders_n+1", to_json(shifted)}};
                        if (problem.is_null() && p >= n) {
                            auto direct = act(g == Generator::BPlus ? Generator::X : Generator::D, i, a, p);
                            direct.generator = g;
                            if (!(direct == base))
                                problem = Json{{"verma", to_json(base)}, {"fock", to_json(direct)}};
                        }
                        if (!problem.is_null()) {
                            problem["tableau"] = to_json(a);
                            problem["p"] = p;
                            problem["generator"] = gen_label(g, i);
                            r.fail(std::move(problem), opt.max_failures);
                        }
                    }
        });
    }
    return r;
}

SuiteReport run_one(const std::string& name, const VerifyOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    if (name == "relations")
        r = relations(opt);
    else if (name == "expansion")
        r = expansion(opt);
    else if (name == "leading")
        r = leading(opt);
    else if (name == "coeff-triple")
        r = coeff_triple(opt);
    else if (name == "unitriangular")
        r = unitriangular(opt);
    else if (name == "dual-path")
        r = dual_path(opt);
    else if (name == "n2-oracle")
        r = n2_oracle_suite(opt);
    else if (name == "verma")
        r = verma(opt);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt)
{
    if (opt.n_values.empty() || opt.p_values.empty())
        throw std::invalid_argument("verify: n and p lists must not be empty");
    for (int n : opt.n_values)
        if (n < 1)
            throw std::invalid_argument("verify: n must be positive");
    for (int p : opt.p_values)
        if (p < 1 || p > max_clifford_generators)
            throw std::invalid_argument("verify: p out of range");
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& s : suite_names())
            out.push_back(run_one(s, opt));
        return out;
    }
    return {run_one(name, opt)};
}

Json to_json(const SuiteReport& r)
{
    return Json{{"suite", r.name},       {"passed", r.passed},
                {"checked", r.checked},  {"skipped", r.skipped},
                {"failure_count", r.failure_count},
                {"failures", r.failures}};
}

Json verify_document(const std::vector<SuiteReport>& reports)
{
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : reports) {
        suites.push_back(to_json(r));
        all = all && r.passed;
    }
    return document("verify", Json{{"passed", all}, {"suites", suites}});
}

} // namespace ospbasis
