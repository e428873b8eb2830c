#pragma once

// Tableau vectors: the normalized basis vectors omega~_A(p) = omega_A(p) / lambda_A!
// and the coefficients c_A(gamma) of x^gamma e^{eta_gamma} in them.

#include <cstddef>
#include <functional>
#include <vector>

#include "ospbasis/combinatorics.hpp"
#include "ospbasis/polynomial.hpp"

namespace ospbasis {

// lambda! = prod_j (lambda'_j)!
Integer shape_factorial(const Partition& lambda);

class TableauVector {
public:
    TableauVector(SsytTableau label, int p, CliffordPoly value);

    const SsytTableau& label() const noexcept { return label_; }
    int p() const noexcept { return p_; }
    // The normalized vector omega~_A(p).
    const CliffordPoly& value() const noexcept { return value_; }
    WeightVector weight() const { return label_.weight(); }
    bool is_zero() const noexcept { return value_.is_zero(); }
    // omega_A(p) = lambda_A! * omega~_A(p).
    CliffordPoly unnormalized() const;

private:
    SsytTableau label_;
    int p_;
    CliffordPoly value_;
};

// Column operators applied to the vacuum, leftmost column first, then divided by lambda_A!.
TableauVector build_omega_sequential(const SsytTableau& a, int p);
// Direct sum over all column-distinct fillings of the shape.
TableauVector build_omega_expansion(const SsytTableau& a, int p);

// Calls visit(C) for every filling of `shape` with values 1..p that repeats no value in a column.
void for_each_column_distinct(const Partition& shape, int p, const std::function<void(const FilledTableau&)>& visit);

// gamma_{A,T}: (i, alpha) counts boxes holding i in A and alpha in T.
ExponentMatrix exponent_matrix(const SsytTableau& a, const FilledTableau& t, int p);

// D_A: row k filled with k. Throws std::invalid_argument if A has more than p rows.
FilledTableau leading_tableau(const SsytTableau& a, int p);
ExponentMatrix leading_exponent(const SsytTableau& a, int p);
// (-1)^{sum_j (j-1) l'_j (l'_j - 1) / 2} over the columns l'_j of lambda.
int leading_sign_closed_form(const Partition& lambda);

// T_{gamma,A}: strip i filled right to left by gamma_{i,1} 1's, gamma_{i,2} 2's, ...
// Throws std::invalid_argument unless the row sums of gamma equal the weight of A.
FilledTableau weight_tableau(const ExponentMatrix& gamma, const SsytTableau& a);

// An element of the Young subgroup S_{mu_1} x ... x S_{mu_n}: perm[i-1] is the
// one-line form of sigma_i with 1-based images.
using YoungPermutation = std::vector<std::vector<int>>;

YoungPermutation identity_permutation(const WeightVector& mu);
int permutation_sign(const YoungPermutation& sigma);
// Calls visit(sigma) for every element of S_mu.
void for_each_young_permutation(const WeightVector& mu, const std::function<void(const YoungPermutation&)>& visit);
// |S_mu| = prod mu_i!
Integer young_group_order(const WeightVector& mu);

// T^{sigma,A}: entry at strip box y_A(i,s) becomes T's entry at y_A(i, sigma_i^{-1}(s)).
FilledTableau permute_tableau(const FilledTableau& t, const YoungPermutation& sigma, const SsytTableau& a);

struct PermutationSumStats {
    std::size_t group_order = 0;         // |S_mu|
    std::size_t distinct_tableaux = 0;   // size of the orbit of T_{gamma,A}
    std::size_t not_column_distinct = 0; // orbit members that repeat a value in a column
    std::size_t positive = 0;            // column-distinct members with sign +1
    std::size_t negative = 0;            // column-distinct members with sign -1
};

// c_A(gamma) as a signed sum over the Young subgroup orbit of T_{gamma,A}.
Integer coeff_by_permutation(const SsytTableau& a, const ExponentMatrix& gamma, int p,
                             PermutationSumStats* stats = nullptr);
// Two readings of the closed sign formula. `literal` takes G, sgn(L) and the
// preimages in L exactly as printed; `corrected` uses k - l in the second case of G,
// sorts L descending and takes L through sigma rather than its inverse.
enum class AppendixReading { corrected, literal };

// c_A(gamma) by the closed sign formula built from G, N_0, N_1, N_2 and sgn(L).
Integer coeff_by_appendix_b(const SsytTableau& a, const ExponentMatrix& gamma, int p,
                            AppendixReading reading = AppendixReading::corrected);
// c_A(gamma) read off the expanded polynomial.
Integer coeff_by_extraction(const TableauVector& v, const ExponentMatrix& gamma);

// Parity exponent N_1 + N_2 of e_{T_{gamma,A}} relative to e^{eta_gamma}, as the closed formula gives it.
long long appendix_b_weight_tableau_exponent(const SsytTableau& a, const ExponentMatrix& gamma,
                                             AppendixReading reading = AppendixReading::corrected);
// sgn(sigma) * prod_alpha sgn(L(sigma, alpha)) * (-1)^{N_0}; 0 when the permuted tableau is not column distinct.
int appendix_b_orbit_sign(const SsytTableau& a, const ExponentMatrix& gamma, const YoungPermutation& sigma,
                          AppendixReading reading = AppendixReading::corrected);

} // namespace ospbasis
