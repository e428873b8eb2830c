#include "ospbasis/action.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "ospbasis/errors.hpp"

namespace ospbasis {

std::string generator_name(Generator g)
{
    switch (g) {
    case Generator::X: return "X";
    case Generator::D: return "D";
    case Generator::BPlus: return "B+";
    case Generator::BMinus: return "B-";
    }
    return "?";
}

Generator parse_generator(const std::string& text)
{
    if (text == "X" || text == "x")
        return Generator::X;
    if (text == "D" || text == "d")
        return Generator::D;
    if (text == "B+" || text == "Bp" || text == "b+")
        return Generator::BPlus;
    if (text == "B-" || text == "Bm" || text == "b-" || text == "B−")
        return Generator::BMinus;
    throw std::invalid_argument("unknown generator '" + text + "' (expected X, D, B+ or B-)");
}

// --- matrices ----------------------------------------------------------------

bool IntMatrix::is_upper_unitriangular() const
{
    for (std::size_t k = 0; k < size_; ++k) {
        if (at(k, k) != 1)
            return false;
        for (std::size_t l = 0; l < k; ++l)
            if (at(k, l) != 0)
                return false;
    }
    return true;
}

IntMatrix unitriangular_inverse(const IntMatrix& u)
{
    if (!u.is_upper_unitriangular())
        throw std::invalid_argument("unitriangular_inverse: matrix is not upper unitriangular");
    const std::size_t d = u.size();
    IntMatrix inv(d);
    for (std::size_t col = 0; col < d; ++col) {
        IntVector e(d, 0);
        e[col] = 1;
        const auto x = back_substitute(u, e);
        for (std::size_t k = 0; k < d; ++k)
            inv.at(k, col) = x[k];
    }
    return inv;
}

IntVector back_substitute(const IntMatrix& u, const IntVector& f)
{
    const std::size_t d = u.size();
    if (f.size() != d)
        throw std::invalid_argument("back_substitute: size mismatch");
    IntVector x(d);
    for (std::size_t k = d; k-- > 0;) {
        Integer s = f[k];
        for (std::size_t l = k + 1; l < d; ++l)
            s -= u.at(k, l) * x[l];
        x[k] = s;
    }
    return x;
}

// --- contexts ----------------------------------------------------------------

BasisContext::BasisContext(int n, int p, WeightVector mu) : n_(n), p_(p), mu_(std::move(mu))
{
    if (n < 1 || p < 1)
        throw std::invalid_argument("BasisContext: n and p must be positive");
    if (mu_.n() != n)
        throw std::invalid_argument("BasisContext: weight length differs from n");
    tableaux_ = enumerate_ssyt(n, mu_, std::min(n, p));
    vectors_.reserve(tableaux_.size());
    for (const auto& a : tableaux_) {
        vectors_.push_back(build_omega_expansion(a, p));
        leading_gamma_.push_back(leading_exponent(a, p));
        const auto c = coeff_by_extraction(vectors_.back(), leading_gamma_.back());
        if (c != 1 && c != -1)
            throw consistency_error("leading coefficient of " + a.to_string() + " is not a unit");
        leading_coeff_.push_back(static_cast<int>(c.get_si()));
    }
    u_ = build_U(*this);
}

std::size_t BasisContext::index_of(const SsytTableau& a) const
{
    auto it = std::lower_bound(tableaux_.begin(), tableaux_.end(), a, TableauLess{});
    if (it == tableaux_.end() || !(*it == a))
        throw std::invalid_argument("tableau " + a.to_string() + " is not in this weight space");
    return static_cast<std::size_t>(it - tableaux_.begin());
}

namespace {

using ContextKey = std::tuple<int, int, std::vector<int>>;

std::mutex cache_mutex;
std::map<ContextKey, std::shared_ptr<const BasisContext>> cache;

} // namespace

std::shared_ptr<const BasisContext> get_context(int n, int p, const WeightVector& mu)
{
    ContextKey key{n, p, mu.entries()};
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto ctx = std::make_shared<const BasisContext>(n, p, mu);
    std::lock_guard lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(ctx)).first->second;
}

void clear_context_cache()
{
    std::lock_guard lock(cache_mutex);
    cache.clear();
}

std::size_t context_cache_size()
{
    std::lock_guard lock(cache_mutex);
    return cache.size();
}

// --- U, f and the expansion --------------------------------------------------

IntMatrix build_U(const BasisContext& ctx)
{
    const std::size_t d = ctx.dimension();
    IntMatrix u(d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto& g = ctx.leading_gamma(k);
        for (std::size_t l = 0; l < d; ++l)
            u.at(k, l) = ctx.leading_coeff(k) * ctx.vectors()[l].value().coefficient(g, g.parity());
    }
    if (!u.is_upper_unitriangular())
        throw consistency_error("U is not upper unitriangular");
    return u;
}

IntVector f_vector(const CliffordPoly& v, const BasisContext& ctx)
{
    if (v.n() != ctx.n() || v.p() != ctx.p())
        throw std::invalid_argument("f_vector: polynomial lives in a different space");
    if (!v.homogeneous_of_weight(ctx.weight()))
        throw std::invalid_argument("f_vector: polynomial is not homogeneous of the context weight");
    IntVector f(ctx.dimension());
    for (std::size_t k = 0; k < ctx.dimension(); ++k) {
        const auto& g = ctx.leading_gamma(k);
        f[k] = ctx.leading_coeff(k) * v.coefficient(g, g.parity());
    }
    return f;
}

IntVector f_vector_by_coefficients(Generator g, int i, const SsytTableau& a, const BasisContext& ctx,
                                   const CoeffBudget& budget)
{
    if (g != Generator::X && g != Generator::D)
        throw std::invalid_argument("f_vector_by_coefficients: generator must be X or D");
    const int p = ctx.p();
    const bool use_permutation = young_group_order(a.weight()) <= budget.max_group_order;
    std::optional<TableauVector> source;
    auto c_a = [&](const ExponentMatrix& gamma) -> Integer {
        if (use_permutation)
            return coeff_by_permutation(a, gamma, p);
        if (!source)
            source = build_omega_expansion(a, p);
        return coeff_by_extraction(*source, gamma);
    };

    IntVector f(ctx.dimension());
    for (std::size_t k = 0; k < ctx.dimension(); ++k) {
        const auto& gamma_b = ctx.leading_gamma(k);
        const auto lambda_b = ctx.tableaux()[k].shape();
        Integer sum = 0;
        int sign = 1;
        for (int alpha = 1; alpha <= p; ++alpha) {
            auto shifted = gamma_b;
            if (g == Generator::X) {
                if (gamma_b(i, alpha) > 0) {
                    shifted.add(i, alpha, -1);
                    sum += sign * c_a(shifted);
                }
            } else {
                shifted.add(i, alpha, 1);
                sum += sign * (gamma_b(i, alpha) + 1) * c_a(shifted);
            }
            if (lambda_b.row(alpha) & 1)
                sign = -sign;
        }
        f[k] = ctx.leading_coeff(k) * sum;
    }
    return f;
}

IntVector expand_in_basis(const CliffordPoly& v, const BasisContext& ctx)
{
    auto x = back_substitute(ctx.u(), f_vector(v, ctx));
    CliffordPoly residual = v;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0)
            residual.add_scaled(ctx.vectors()[k].value(), -x[k]);
    if (!residual.is_zero())
        throw out_of_span_error("vector is not in the span of the tableau basis at weight " +
                                [&] {
                                    std::string s;
                                    for (int e : ctx.weight().entries())
                                        s += (s.empty() ? "" : ",") + std::to_string(e);
                                    return s;
                                }() +
                                " (" + std::to_string(residual.size()) + " residual terms)");
    return x;
}

// --- action tables -----------------------------------------------------------

std::string ActionTable::generator_label() const
{
    return generator_name(generator) + std::to_string(index);
}

bool ActionTable::operator==(const ActionTable& other) const
{
    return source == other.source && generator == other.generator && index == other.index && p == other.p &&
           terms == other.terms;
}

namespace {

void check_index(int i, int n)
{
    if (i < 1 || i > n)
        throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

} // namespace

ActionDetail act_detailed(Generator g, int i, const SsytTableau& a, int p)
{
    if (g != Generator::X && g != Generator::D)
        throw std::invalid_argument("act: generator must be X or D; use act_verma for B+ and B-");
    if (p < 1)
        throw std::invalid_argument("act: p must be positive");
    const int n = a.n();
    check_index(i, n);
    if (a.num_rows() > p)
        throw invalid_tableau("tableau " + a.to_string() + " has " + std::to_string(a.num_rows()) +
                              " rows, more than p = " + std::to_string(p));

    ActionDetail out;
    out.table.source = a;
    out.table.generator = g;
    out.table.index = i;
    out.table.p = p;

    if (g == Generator::D && a.weight()(i) == 0) {
        out.shortcut = true;
        return out;
    }
    if (g == Generator::X && (a.empty() || i >= a.rows().front().back())) {
        auto rows = a.rows();
        if (rows.empty())
            rows.emplace_back();
        rows.front().push_back(i);
        out.table.terms.emplace(SsytTableau(n, std::move(rows)), 1);
        out.shortcut = true;
        return out;
    }

    const auto source_ctx = get_context(n, p, a.weight());
    const auto& source = source_ctx->vectors()[source_ctx->index_of(a)].value();
    const int delta = g == Generator::X ? 1 : -1;
    const auto target_ctx = get_context(n, p, a.weight().shifted(i, delta));
    const CliffordPoly v = g == Generator::X ? apply_X(i, source) : apply_D(i, source);

    out.basis = target_ctx->tableaux();
    out.u = target_ctx->u();
    out.f = f_vector(v, *target_ctx);
    const auto x = expand_in_basis(v, *target_ctx);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0)
            out.table.terms.emplace(out.basis[k], x[k]);
    return out;
}

ActionTable act(Generator g, int i, const SsytTableau& a, int p)
{
    return act_detailed(g, i, a, p).table;
}

ActionTable act_verma_affine(Generator g, int i, const SsytTableau& a, int p, int q1, int q2)
{
    if (g != Generator::BPlus && g != Generator::BMinus)
        throw std::invalid_argument("act_verma: generator must be B+ or B-");
    const int n = a.n();
    check_index(i, n);
    if (q1 == q2 || q1 < n || q2 < n)
        throw std::invalid_argument("act_verma: auxiliary orders must be distinct and at least n");
    if (p < 1)
        throw std::invalid_argument("act_verma: p must be positive");

    const Generator base = g == Generator::BPlus ? Generator::X : Generator::D;
    const auto t1 = act(base, i, a, q1);
    const auto t2 = act(base, i, a, q2);

    ActionTable out;
    out.source = a;
    out.generator = g;
    out.index = i;
    out.p = p;
    std::map<SsytTableau, std::pair<Integer, Integer>, TableauLess> both;
    for (const auto& [b, c] : t1.terms)
        both[b].first = c;
    for (const auto& [b, c] : t2.terms)
        both[b].second = c;
    // c(p) = c(q1) + (c(q2) - c(q1)) (p - q1) / (q2 - q1)
    for (const auto& [b, c] : both) {
        Integer num = (c.second - c.first) * (p - q1);
        const Integer den = q2 - q1;
        if (num % den != 0)
            throw consistency_error("act_verma: coefficient of " + b.to_string() + " is not affine in p");
        Integer value = c.first + num / den;
        if (value != 0)
            out.terms.emplace(b, value);
    }
    return out;
}

ActionTable act_verma(Generator g, int i, const SsytTableau& a, int p)
{
    return act_verma_affine(g, i, a, p, a.n(), a.n() + 1);
}

// --- n = 2 ---------------------------------------------------------------------

SsytTableau n2_tableau(int k, int l, int m)
{
    if (k < 0 || l < 0 || m < 0)
        throw std::invalid_argument("n2_tableau: k, l, m must be nonnegative");
    std::vector<std::vector<int>> rows(1);
    rows[0].insert(rows[0].end(), static_cast<std::size_t>(m + l), 1);
    rows[0].insert(rows[0].end(), static_cast<std::size_t>(k), 2);
    if (m > 0)
        rows.emplace_back(static_cast<std::size_t>(m), 2);
    if (rows[0].empty())
        rows.clear();
    return SsytTableau(2, std::move(rows));
}

ActionTable n2_oracle(Generator g, int i, int k, int l, int m, int p)
{
    if (g != Generator::X && g != Generator::D)
        throw std::invalid_argument("n2_oracle: generator must be X or D");
    if (i != 1 && i != 2)
        throw std::invalid_argument("n2_oracle: index must be 1 or 2");
    if (p < 1)
        throw std::invalid_argument("n2_oracle: p must be positive");
    const auto source = n2_tableau(k, l, m);
    if (p == 1 && m > 0)
        throw invalid_tableau("A(k,l,m) with m > 0 is not in Y_2(1)");

    auto par = [](long long v) { return v & 1; };
    auto neg = [](long long e) { return (e & 1) ? -1 : 1; };

    struct Term {
        int k, l, m;
        long long c;
    };
    std::vector<Term> raw;
    if (g == Generator::X && i == 1) {
        raw.push_back({k, l + 1, m, 1});
        raw.push_back({k - 1, l, m + 1, neg(l) * par(k)});
    } else if (g == Generator::X) {
        raw.push_back({k + 1, l, m, 1});
    } else if (i == 1) {
        raw.push_back({k + 1, l, m - 1, neg(k + l) * (2LL * m + (2LL * p - 4) * par(m))});
        raw.push_back({k, l - 1, m, l + neg(k) * (neg(m) * p - 1 + 4 * par(m)) * par(l)});
        raw.push_back({k - 1, l - 2, m + 1, neg(l) * par(k) * (l - par(l))});
    } else {
        raw.push_back({k, l + 1, m - 1, neg(k + l + 1) * (2LL * m + (2LL * p - 4) * par(m))});
        raw.push_back({k - 1, l, m, k + (2LL * m + p - 1) * par(k)});
    }

    ActionTable out;
    out.source = source;
    out.generator = g;
    out.index = i;
    out.p = p;
    for (const auto& t : raw) {
        if (t.k < 0 || t.l < 0 || t.m < 0 || t.c == 0)
            continue;
        if (p == 1 && t.m > 0)
            continue;
        // omega = 2^m omega~ for A(k, l, m)
        Integer c = static_cast<long>(t.c);
        if (t.m > m)
            c *= 2;
        else if (t.m < m) {
            if (c % 2 != 0)
                throw consistency_error("n2_oracle: odd coefficient cannot be renormalized");
            c /= 2;
        }
        out.terms.emplace(n2_tableau(t.k, t.l, t.m), c);
    }
    return out;
}

} // namespace ospbasis
