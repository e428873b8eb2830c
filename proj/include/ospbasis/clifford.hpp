#pragma once

// Monomials of the Clifford algebra Cl_p with e_a e_b + e_b e_a = 2 delta_ab,
// kept in the normal form  sign * e_1^{eta_1} ... e_p^{eta_p}.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ospbasis/combinatorics.hpp"

namespace ospbasis {

inline constexpr int max_clifford_generators = 64;

// Bit (alpha-1) of a parity mask stands for e_alpha.
using ParityMask = std::uint64_t;

constexpr ParityMask generator_bit(int alpha) noexcept
{
    return ParityMask{1} << (alpha - 1);
}

// Sign of e_alpha * e^eta when brought to normal form: e_alpha passes every
// generator of e^eta with a smaller index.
constexpr int left_mul_sign(ParityMask eta, int alpha) noexcept
{
    return (std::popcount(eta & (generator_bit(alpha) - 1)) & 1) ? -1 : 1;
}

class CliffordMonomial {
public:
    explicit CliffordMonomial(int p); // identity
    CliffordMonomial(int p, ParityMask parity, int sign = 1);

    int p() const noexcept { return p_; }
    int sign() const noexcept { return sign_; }
    ParityMask parity() const noexcept { return parity_; }
    bool has(int alpha) const noexcept { return (parity_ & generator_bit(alpha)) != 0; }
    std::vector<int> parity_vector() const;

    // "+e1*e3", "-e2", "+1"
    std::string to_string() const;

    bool operator==(const CliffordMonomial&) const = default;

private:
    int p_;
    ParityMask parity_ = 0;
    int sign_ = 1;
};

// Normal form of e_{w_1} e_{w_2} ... e_{w_r}; letters in {1..p}.
CliffordMonomial normalize_word(int p, std::span<const int> word);

// Throws std::invalid_argument if the p differ.
CliffordMonomial mul(const CliffordMonomial& a, const CliffordMonomial& b);

// Column reading word: rightmost column first, each column top to bottom.
std::vector<int> column_reading_word(const FilledTableau& t);

// Number of inversions of the column reading word; (-1)^this is the sign
// relating e_T to e^{eta} in normal form.
long long tableau_inversions(const FilledTableau& t);
int tableau_sign(const FilledTableau& t);

} // namespace ospbasis
