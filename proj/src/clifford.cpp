#include "ospbasis/clifford.hpp"

#include <stdexcept>

namespace ospbasis {

CliffordMonomial::CliffordMonomial(int p) : p_(p)
{
    if (p < 0 || p > max_clifford_generators)
        throw std::invalid_argument("Clifford algebra order must lie in [0, 64]");
}

CliffordMonomial::CliffordMonomial(int p, ParityMask parity, int sign) : CliffordMonomial(p)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("Clifford monomial sign must be +1 or -1");
    if (p < max_clifford_generators && (parity >> p) != 0)
        throw std::invalid_argument("parity mask uses generators beyond p");
    parity_ = parity;
    sign_ = sign;
}

std::vector<int> CliffordMonomial::parity_vector() const
{
    std::vector<int> v(static_cast<std::size_t>(p_));
    for (int a = 1; a <= p_; ++a)
        v[static_cast<std::size_t>(a - 1)] = has(a) ? 1 : 0;
    return v;
}

std::string CliffordMonomial::to_string() const
{
    std::string s = sign_ > 0 ? "+" : "-";
    if (parity_ == 0)
        return s + "1";
    bool first = true;
    for (int a = 1; a <= p_; ++a) {
        if (!has(a))
            continue;
        if (!first)
            s += '*';
        s += 'e' + std::to_string(a);
        first = false;
    }
    return s;
}

CliffordMonomial normalize_word(int p, std::span<const int> word)
{
    // Right-multiply the running normal form by each letter: e^eta e_a moves
    // e_a left past every present generator with a larger index.
    ParityMask eta = 0;
    int sign = 1;
    for (int a : word) {
        if (a < 1 || a > p)
            throw std::invalid_argument("Clifford generator index out of range");
        const ParityMask above = ~((generator_bit(a) << 1) - 1);
        if (std::popcount(eta & above) & 1)
            sign = -sign;
        eta ^= generator_bit(a);
    }
    return CliffordMonomial(p, eta, sign);
}

CliffordMonomial mul(const CliffordMonomial& a, const CliffordMonomial& b)
{
    if (a.p() != b.p())
        throw std::invalid_argument("Clifford multiplication of different orders");
    int sign = a.sign() * b.sign();
    ParityMask rest = b.parity();
    while (rest) {
        const int alpha = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        const ParityMask above = ~((generator_bit(alpha) << 1) - 1);
        if (std::popcount(a.parity() & above) & 1)
            sign = -sign;
    }
    return CliffordMonomial(a.p(), a.parity() ^ b.parity(), sign);
}

std::vector<int> column_reading_word(const FilledTableau& t)
{
    std::vector<int> word;
    const auto& rows = t.rows();
    if (rows.empty())
        return word;
    for (auto l = rows.front().size(); l-- > 0;)
        for (const auto& r : rows) {
            if (l >= r.size())
                break;
            word.push_back(r[l]);
        }
    return word;
}

long long tableau_inversions(const FilledTableau& t)
{
    const auto word = column_reading_word(t);
    long long count = 0;
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[a] > word[b])
                ++count;
    return count;
}

int tableau_sign(const FilledTableau& t)
{
    return (tableau_inversions(t) & 1) ? -1 : 1;
}

} // namespace ospbasis
