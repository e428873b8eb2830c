// One line per criterion: "criterion N: PASS|FAIL (seconds) detail".
// Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ospbasis/action.hpp"
#include "ospbasis/basis.hpp"
#include "ospbasis/errors.hpp"
#include "ospbasis/polynomial.hpp"
#include "ospbasis/verify.hpp"

using namespace ospbasis;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void run(int number, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && s > limit_seconds) {
        r.ok = false;
        r.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
    }
    if (!r.ok)
        ++failures;
    std::printf("criterion %d: %s (%.2f s) %s\n", number, r.ok ? "PASS" : "FAIL", s, r.detail.c_str());
    std::fflush(stdout);
}

ExponentMatrix mat(const std::vector<std::vector<int>>& rows)
{
    return ExponentMatrix::from_rows(rows);
}

// Every SSYT over {1..n} with at most max_boxes boxes and at most max_rows rows.
std::vector<SsytTableau> tableaux_up_to(int n, int max_boxes, int max_rows)
{
    std::vector<SsytTableau> out;
    for (const auto& mu : weights_up_to(n, max_boxes))
        for (auto& a : enumerate_ssyt(n, mu, max_rows))
            out.push_back(std::move(a));
    return out;
}

Outcome expansion_display()
{
    const ParityMask e12 = generator_bit(1) | generator_bit(2);
    CliffordPoly expect(2, 2);
    expect.add_term(mat({{1, 1}, {1, 1}}), 0, -4);
    expect.add_term(mat({{1, 1}, {2, 0}}), e12, -2);
    expect.add_term(mat({{0, 2}, {1, 1}}), e12, -2);
    expect.add_term(mat({{2, 0}, {1, 1}}), e12, 2);
    expect.add_term(mat({{1, 1}, {0, 2}}), e12, 2);
    expect.add_term(mat({{2, 0}, {0, 2}}), 0, 2);
    expect.add_term(mat({{0, 2}, {2, 0}}), 0, 2);
    const auto got = build_omega_expansion(parse_tableau("1,1,2;2", 2), 2).unnormalized();
    if (got != expect)
        return {false, "got " + got.to_string()};
    return {true, "7 terms"};
}

Outcome worked_example()
{
    const std::vector<std::vector<int>> u_rows{{1, -1, 0, 0, 1, 1}, {0, 1, 0, 0, 0, -1}, {0, 0, 1, -1, -1, -1},
                                               {0, 0, 0, 1, 0, 1},  {0, 0, 0, 0, 1, -1}, {0, 0, 0, 0, 0, 1}};
    BasisContext ctx(4, 2, WeightVector({1, 1, 1, 1}));
    if (ctx.dimension() != 6)
        return {false, "dimension " + std::to_string(ctx.dimension())};
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t l = 0; l < 6; ++l)
            if (ctx.u().at(k, l) != u_rows[k][l])
                return {false, "U differs at (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")"};
    const auto x = apply_X(1, build_omega_expansion(parse_tableau("2,3;4", 4), 2).value());
    const IntVector f_expect{0, -1, 1, 0, 1, 0}, x_expect{-2, -1, 2, 0, 1, 0};
    if (f_vector(x, ctx) != f_expect)
        return {false, "f differs"};
    if (expand_in_basis(x, ctx) != x_expect)
        return {false, "expansion differs"};
    return {true, "U, f and the expansion match"};
}

Outcome coefficient_example()
{
    const SsytTableau a(3, {{1, 1, 1, 2, 2}, {2, 2, 3}, {3}});
    const auto g = mat({{2, 1, 0, 0}, {0, 2, 1, 1}, {0, 0, 2, 0}});
    PermutationSumStats s;
    const auto c_perm = coeff_by_permutation(a, g, 4, &s);
    const auto c_closed = coeff_by_appendix_b(a, g, 4);
    char buf[160];
    std::snprintf(buf, sizeof buf, "c=%s/%s, |S|=%zu, %zu tableaux, %zu not column-distinct, %zu positive, %zu negative",
                  c_perm.get_str().c_str(), c_closed.get_str().c_str(), s.group_order, s.distinct_tableaux,
                  s.not_column_distinct, s.positive, s.negative);
    const bool ok = c_perm == 1 && c_closed == 1 && s.group_order == 288 && s.distinct_tableaux == 36 &&
                    s.not_column_distinct == 19 && s.positive == 9 && s.negative == 8;
    return {ok, buf};
}

Outcome sequential_vs_expansion()
{
    std::size_t checked = 0;
    for (int n = 1; n <= 3; ++n)
        for (int p = 1; p <= 3; ++p)
            for (const auto& a : tableaux_up_to(n, 6, n)) {
                const auto s = build_omega_sequential(a, p), e = build_omega_expansion(a, p);
                if (s.value() != e.value())
                    return {false, "differ at " + a.to_string() + " p=" + std::to_string(p)};
                ++checked;
            }
    return {true, std::to_string(checked) + " (A, p) pairs"};
}

Outcome leading_terms()
{
    std::size_t diagonal = 0, below = 0;
    for (int n = 1; n <= 3; ++n)
        for (int p = 1; p <= 3; ++p)
            for (const auto& mu : weights_up_to(n, 6)) {
                const auto list = enumerate_ssyt(n, mu, std::min(n, p));
                std::vector<TableauVector> vecs;
                std::vector<ExponentMatrix> lead;
                for (const auto& a : list) {
                    vecs.push_back(build_omega_expansion(a, p));
                    lead.push_back(leading_exponent(a, p));
                }
                for (std::size_t k = 0; k < list.size(); ++k) {
                    if (coeff_by_extraction(vecs[k], lead[k]) != leading_sign_closed_form(list[k].shape()))
                        return {false, "leading sign of " + list[k].to_string() + " p=" + std::to_string(p)};
                    ++diagonal;
                    for (std::size_t l = k + 1; l < list.size(); ++l, ++below)
                        if (coeff_by_extraction(vecs[k], lead[l]) != 0)
                            return {false, "c_A(gamma_B) != 0 for A=" + list[k].to_string() +
                                               " B=" + list[l].to_string()};
                }
            }
    return {true, std::to_string(diagonal) + " leading signs, " + std::to_string(below) + " vanishing coefficients"};
}

Outcome dimensions()
{
    std::size_t spaces = 0;
    for (int n = 1; n <= 4; ++n)
        for (int p = 1; p <= 3; ++p)
            for (const auto& mu : weights_up_to(n, 6)) {
                const auto list = enumerate_ssyt(n, mu, std::min(n, p));
                const auto brute = oracle::dimension(mu.entries(), std::min(n, p));
                if (list.size() != brute)
                    return {false, "count differs at n=" + std::to_string(n) + " p=" + std::to_string(p)};
                std::vector<TableauVector> vecs;
                for (const auto& a : list)
                    vecs.push_back(build_omega_expansion(a, p));
                std::vector<std::vector<mpz_class>> m(list.size(), std::vector<mpz_class>(list.size()));
                for (std::size_t k = 0; k < list.size(); ++k) {
                    const auto g = leading_exponent(list[k], p);
                    for (std::size_t l = 0; l < list.size(); ++l)
                        m[k][l] = coeff_by_extraction(vecs[l], g);
                }
                if (oracle::bareiss_rank(m) != brute)
                    return {false, "rank deficient at n=" + std::to_string(n) + " p=" + std::to_string(p)};
                ++spaces;
            }
    return {true, std::to_string(spaces) + " weight spaces"};
}

Outcome relations()
{
    std::mt19937_64 rng(7);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int cases = 500;
    for (int t = 0; t < cases; ++t) {
        const int n = pick(1, 3), p = pick(1, 3);
        CliffordPoly f(n, p);
        for (int term = pick(1, 3); term > 0; --term) {
            ExponentMatrix g(n, p);
            for (int d = pick(0, 4); d > 0; --d)
                g.add(pick(1, n), pick(1, p), 1);
            f.add_term(g, static_cast<ParityMask>(pick(0, (1 << p) - 1)), pick(-3, 3));
        }
        const auto lad = [&] { return pick(0, 1) ? Ladder::raise : Ladder::lower; };
        const Ladder a = lad(), b = lad(), c = lad();
        if (!triple_relation_defect(pick(1, n), pick(1, n), pick(1, n), a, b, c, f).is_zero())
            return {false, "nonzero defect in case " + std::to_string(t)};
    }
    return {true, std::to_string(cases) + " random cases"};
}

Outcome n2_closed_forms()
{
    std::size_t checked = 0;
    for (int p = 1; p <= 3; ++p)
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l)
                for (int m = 0; m <= 3; ++m) {
                    const auto a = n2_tableau(k, l, m);
                    for (int i = 1; i <= 2; ++i)
                        for (auto g : {Generator::X, Generator::D}) {
                            const auto verma_g = g == Generator::X ? Generator::BPlus : Generator::BMinus;
                            if (p >= 2) {
                                const auto oracle = n2_oracle(g, i, k, l, m, p);
                                if (act(g, i, a, p).terms != oracle.terms)
                                    return {false, generator_name(g) + std::to_string(i) + " on " + a.to_string()};
                                if (act_verma(verma_g, i, a, p).terms != oracle.terms)
                                    return {false, generator_name(verma_g) + std::to_string(i) + " on " + a.to_string()};
                                checked += 2;
                            } else if (m == 0) {
                                // at p = 1 the induced module maps onto L_2(1) by dropping two-row tableaux
                                const auto oracle = n2_oracle(g, i, k, l, m, p);
                                if (act(g, i, a, p).terms != oracle.terms)
                                    return {false, generator_name(g) + std::to_string(i) + " on " + a.to_string()};
                                auto induced = act_verma(verma_g, i, a, p).terms;
                                std::erase_if(induced, [](const auto& t) { return t.first.num_rows() > 1; });
                                if (induced != oracle.terms)
                                    return {false, generator_name(verma_g) + std::to_string(i) + " on " + a.to_string()};
                                checked += 2;
                            }
                        }
                }
    return {true, std::to_string(checked) + " tables"};
}

Outcome induced_module()
{
    std::size_t checked = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& a : tableaux_up_to(n, 5, n))
            for (int i = 1; i <= n; ++i)
                for (auto g : {Generator::BPlus, Generator::BMinus})
                    for (int p = 1; p <= n + 1; ++p) {
                        const auto base = act_verma(g, i, a, p);
                        if (act_verma_affine(g, i, a, p, n + 1, n + 2) != base)
                            return {false, "auxiliary orders disagree for " + base.generator_label() + " on " +
                                               a.to_string() + " p=" + std::to_string(p)};
                        if (p >= n) {
                            const auto l = act(g == Generator::BPlus ? Generator::X : Generator::D, i, a, p);
                            if (l.terms != base.terms)
                                return {false, "differs from L_n(p) for " + base.generator_label() + " on " +
                                                   a.to_string() + " p=" + std::to_string(p)};
                        }
                        ++checked;
                    }
    return {true, std::to_string(checked) + " tables"};
}

} // namespace

int main()
{
    run(1, 1, expansion_display);
    run(2, 1, worked_example);
    run(3, 10, coefficient_example);
    run(4, 60, sequential_vs_expansion);
    run(5, 60, leading_terms);
    run(6, 0, dimensions);
    run(7, 120, relations);
    run(8, 120, n2_closed_forms);
    run(9, 0, induced_module);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
