#include "ospbasis/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ospbasis/errors.hpp"

namespace ospbasis {

Integer factorial(int k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// --- ExponentMatrix ---------------------------------------------------------

ExponentMatrix::ExponentMatrix(int n, int p)
    : n_(n), p_(p), entries_(static_cast<std::size_t>(n * p), 0)
{
    if (n < 0 || p < 0)
        throw std::invalid_argument("exponent matrix dimensions must be nonnegative");
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const int n = static_cast<int>(rows.size());
    const int p = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    ExponentMatrix g(n, p);
    for (int i = 1; i <= n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(r.size()) != p)
            throw std::invalid_argument("exponent matrix rows must have equal length");
        for (int a = 1; a <= p; ++a)
            g.set(i, a, r[static_cast<std::size_t>(a - 1)]);
    }
    return g;
}

void ExponentMatrix::set(int i, int alpha, int value)
{
    if (i < 1 || i > n_ || alpha < 1 || alpha > p_)
        throw std::out_of_range("exponent matrix index out of range");
    if (value < 0 || value > 0xffff)
        throw std::invalid_argument("exponent out of range");
    entries_[index(i, alpha)] = static_cast<std::uint16_t>(value);
}

void ExponentMatrix::add(int i, int alpha, int delta)
{
    set(i, alpha, (*this)(i, alpha) + delta);
}

WeightVector ExponentMatrix::row_sums() const
{
    std::vector<int> mu(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i)
        for (int a = 1; a <= p_; ++a)
            mu[static_cast<std::size_t>(i - 1)] += (*this)(i, a);
    return WeightVector(std::move(mu));
}

std::vector<int> ExponentMatrix::col_sums() const
{
    std::vector<int> eta(static_cast<std::size_t>(p_), 0);
    for (int i = 1; i <= n_; ++i)
        for (int a = 1; a <= p_; ++a)
            eta[static_cast<std::size_t>(a - 1)] += (*this)(i, a);
    return eta;
}

ParityMask ExponentMatrix::parity() const noexcept
{
    ParityMask eta = 0;
    for (int i = 1; i <= n_; ++i)
        for (int a = 1; a <= p_; ++a)
            if (entries_[index(i, a)] & 1)
                eta ^= generator_bit(a);
    return eta;
}

int ExponentMatrix::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Integer ExponentMatrix::factorial_product() const
{
    Integer r = 1;
    for (auto e : entries_)
        if (e > 1)
            r *= factorial(e);
    return r;
}

std::vector<std::vector<int>> ExponentMatrix::rows() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(p_)));
    for (int i = 1; i <= n_; ++i)
        for (int a = 1; a <= p_; ++a)
            out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a - 1)] = (*this)(i, a);
    return out;
}

ExponentMatrix ExponentMatrix::unit(int n, int p, int i, int alpha)
{
    ExponentMatrix g(n, p);
    g.set(i, alpha, 1);
    return g;
}

// --- CliffordPoly -----------------------------------------------------------

CliffordPoly::CliffordPoly(int n, int p) : n_(n), p_(p)
{
    if (n < 0 || p < 0 || p > max_clifford_generators)
        throw std::invalid_argument("polynomial dimensions out of range");
}

CliffordPoly CliffordPoly::vacuum(int n, int p)
{
    CliffordPoly f(n, p);
    f.add_term(ExponentMatrix(n, p), 0, 1);
    return f;
}

CliffordPoly CliffordPoly::monomial(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff)
{
    CliffordPoly f(gamma.n(), gamma.p());
    f.add_term(gamma, eta, coeff);
    return f;
}

void CliffordPoly::add_term(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff)
{
    if (coeff == 0)
        return;
    if (gamma.n() != n_ || gamma.p() != p_)
        throw std::invalid_argument("term dimensions do not match polynomial");
    auto [it, inserted] = terms_.try_emplace(TermKey{gamma, eta}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer CliffordPoly::coefficient(const ExponentMatrix& gamma, ParityMask eta) const
{
    const auto it = terms_.find(TermKey{gamma, eta});
    return it == terms_.end() ? Integer(0) : it->second;
}

namespace {

void check_same_space(const CliffordPoly& a, const CliffordPoly& b)
{
    if (a.n() != b.n() || a.p() != b.p())
        throw std::invalid_argument("polynomials live in different spaces");
}

} // namespace

void CliffordPoly::add_scaled(const CliffordPoly& other, const Integer& scalar)
{
    check_same_space(*this, other);
    if (scalar == 0)
        return;
    for (const auto& [key, c] : other.terms_)
        add_term(key.gamma, key.eta, c * scalar);
}

CliffordPoly& CliffordPoly::operator+=(const CliffordPoly& other)
{
    add_scaled(other, 1);
    return *this;
}

CliffordPoly& CliffordPoly::operator-=(const CliffordPoly& other)
{
    add_scaled(other, -1);
    return *this;
}

CliffordPoly& CliffordPoly::operator*=(const Integer& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c *= scalar;
    return *this;
}

CliffordPoly CliffordPoly::exact_div(const Integer& divisor) const
{
    if (divisor == 0)
        throw std::invalid_argument("division by zero");
    CliffordPoly out(n_, p_);
    for (const auto& [key, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
            throw consistency_error("inexact division of coefficient " + c.get_str() + " by " + divisor.get_str());
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        out.terms_.emplace_hint(out.terms_.end(), key, std::move(q));
    }
    return out;
}

bool CliffordPoly::homogeneous_of_weight(const WeightVector& mu) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.gamma.row_sums() == mu; });
}

bool CliffordPoly::parity_coupled() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.gamma.parity() == t.first.eta; });
}

std::string term_to_string(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff)
{
    std::ostringstream os;
    os << coeff.get_str();
    for (int i = 1; i <= gamma.n(); ++i)
        for (int a = 1; a <= gamma.p(); ++a) {
            const int e = gamma(i, a);
            if (e == 0)
                continue;
            os << "*x[" << i << ',' << a << ']';
            if (e > 1)
                os << '^' << e;
        }
    for (int a = 1; a <= gamma.p(); ++a)
        if (eta & generator_bit(a))
            os << "*e" << a;
    return os.str();
}

std::string CliffordPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += c > 0 ? " +" : " ";
        s += term_to_string(key.gamma, key.eta, c);
    }
    return s;
}

bool CliffordPoly::operator==(const CliffordPoly& other) const
{
    return n_ == other.n_ && p_ == other.p_ && terms_ == other.terms_;
}

CliffordPoly operator+(CliffordPoly a, const CliffordPoly& b)
{
    a += b;
    return a;
}

CliffordPoly operator-(CliffordPoly a, const CliffordPoly& b)
{
    a -= b;
    return a;
}

CliffordPoly operator*(const Integer& s, CliffordPoly a)
{
    a *= s;
    return a;
}

// --- operators --------------------------------------------------------------

namespace {

void check_index(int i, const CliffordPoly& f)
{
    if (i < 1 || i > f.n())
        throw std::invalid_argument("generator index " + std::to_string(i) + " outside {1.." +
                                    std::to_string(f.n()) + "}");
}

} // namespace

CliffordPoly apply_X(int i, const CliffordPoly& f)
{
    check_index(i, f);
    CliffordPoly out(f.n(), f.p());
    for (const auto& [key, c] : f.terms()) {
        for (int a = 1; a <= f.p(); ++a) {
            ExponentMatrix g = key.gamma;
            g.add(i, a, 1);
            const int s = left_mul_sign(key.eta, a);
            out.add_term(g, key.eta ^ generator_bit(a), s > 0 ? c : Integer(-c));
        }
    }
    return out;
}

CliffordPoly apply_D(int i, const CliffordPoly& f)
{
    check_index(i, f);
    CliffordPoly out(f.n(), f.p());
    for (const auto& [key, c] : f.terms()) {
        for (int a = 1; a <= f.p(); ++a) {
            const int e = key.gamma(i, a);
            if (e == 0)
                continue;
            ExponentMatrix g = key.gamma;
            g.add(i, a, -1);
            Integer coeff = c * e;
            if (left_mul_sign(key.eta, a) < 0)
                coeff = -coeff;
            out.add_term(g, key.eta ^ generator_bit(a), coeff);
        }
    }
    return out;
}

CliffordPoly apply_B(Ladder which, int i, const CliffordPoly& f)
{
    return which == Ladder::raise ? apply_X(i, f) : apply_D(i, f);
}

namespace {

int permutation_sign(const std::vector<int>& perm)
{
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                sign = -sign;
    return sign;
}

} // namespace

CliffordPoly column_op(std::span<const int> indices, const CliffordPoly& f)
{
    for (std::size_t k = 0; k < indices.size(); ++k) {
        check_index(indices[k], f);
        if (k && indices[k] <= indices[k - 1])
            throw std::invalid_argument("column_op: index tuple must be strictly increasing");
    }
    if (indices.empty())
        return f;

    std::vector<int> perm(indices.size());
    std::iota(perm.begin(), perm.end(), 0);
    CliffordPoly out(f.n(), f.p());
    do {
        CliffordPoly g = f;
        // X_{i_sigma(1)} ... X_{i_sigma(k)} f: the rightmost factor acts first.
        for (auto k = perm.size(); k-- > 0;)
            g = apply_X(indices[static_cast<std::size_t>(perm[k])], g);
        out.add_scaled(g, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Integer inner_product(const CliffordPoly& f, const CliffordPoly& g)
{
    check_same_space(f, g);
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    Integer total = 0;
    for (const auto& [key, c] : small.terms()) {
        const auto it = large.terms().find(key);
        if (it != large.terms().end())
            total += c * it->second;
    }
    return total;
}

CliffordPoly triple_relation_defect(int i, int j, int l, Ladder xi, Ladder eta, Ladder eps, const CliffordPoly& f)
{
    const auto sign = [](Ladder s) { return s == Ladder::raise ? 1 : -1; };
    const auto anticomm = [&](const CliffordPoly& g) {
        return apply_B(xi, i, apply_B(eta, j, g)) + apply_B(eta, j, apply_B(xi, i, g));
    };
    CliffordPoly defect = anticomm(apply_B(eps, l, f)) - apply_B(eps, l, anticomm(f));
    if (i == l)
        defect.add_scaled(apply_B(eta, j, f), -(sign(eps) - sign(xi)));
    if (j == l)
        defect.add_scaled(apply_B(xi, i, f), -(sign(eps) - sign(eta)));
    return defect;
}

} // namespace ospbasis
