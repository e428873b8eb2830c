#pragma once

// Clifford-valued polynomials with exact integer coefficients in the
// variables x_{i,alpha}, i in {1..n}, alpha in {1..p}, together with the
// multiplication operators X_i and the Dirac-type operators D_i.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ospbasis/clifford.hpp"
#include "ospbasis/combinatorics.hpp"

namespace ospbasis {

using Integer = mpz_class;

Integer factorial(int k);

// n x p matrix of nonnegative exponents; indices are 1-based.
class ExponentMatrix {
public:
    ExponentMatrix() = default;
    ExponentMatrix(int n, int p);
    // Throws std::invalid_argument on ragged or negative input.
    static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    int operator()(int i, int alpha) const { return entries_[index(i, alpha)]; }
    void set(int i, int alpha, int value);
    void add(int i, int alpha, int delta);

    WeightVector row_sums() const;      // mu_gamma
    std::vector<int> col_sums() const;  // eta_gamma
    ParityMask parity() const noexcept; // eta_gamma mod 2
    int total() const noexcept;
    Integer factorial_product() const;  // prod gamma_{i,alpha}!
    std::vector<std::vector<int>> rows() const;

    // Matrix with a single 1 at (i, alpha).
    static ExponentMatrix unit(int n, int p, int i, int alpha);

    auto operator<=>(const ExponentMatrix&) const = default;

private:
    std::size_t index(int i, int alpha) const
    {
        return static_cast<std::size_t>((i - 1) * p_ + (alpha - 1));
    }

    int n_ = 0;
    int p_ = 0;
    std::vector<std::uint16_t> entries_; // row-major
};

struct TermKey {
    ExponentMatrix gamma;
    ParityMask eta = 0;
    auto operator<=>(const TermKey&) const = default;
};

// Finitely supported map (gamma, eta) -> nonzero integer, i.e. sum c x^gamma e^eta.
class CliffordPoly {
public:
    using TermMap = std::map<TermKey, Integer>;

    CliffordPoly(int n, int p);
    static CliffordPoly vacuum(int n, int p); // the constant 1
    static CliffordPoly monomial(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff = 1);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Adds coeff * x^gamma e^eta, dropping the term if it cancels.
    void add_term(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff);
    Integer coefficient(const ExponentMatrix& gamma, ParityMask eta) const;

    CliffordPoly& operator+=(const CliffordPoly& other);
    CliffordPoly& operator-=(const CliffordPoly& other);
    CliffordPoly& operator*=(const Integer& scalar);
    // Throws consistency_error unless every coefficient is divisible.
    CliffordPoly exact_div(const Integer& divisor) const;
    // Adds scalar * other.
    void add_scaled(const CliffordPoly& other, const Integer& scalar);

    // Every term has row sums mu; returns false for the zero polynomial only if mu is unset.
    bool homogeneous_of_weight(const WeightVector& mu) const;
    // Every term satisfies eta == eta_gamma mod 2.
    bool parity_coupled() const;

    std::string to_string() const;

    bool operator==(const CliffordPoly& other) const;

private:
    int n_;
    int p_;
    TermMap terms_;
};

CliffordPoly operator+(CliffordPoly a, const CliffordPoly& b);
CliffordPoly operator-(CliffordPoly a, const CliffordPoly& b);
CliffordPoly operator*(const Integer& s, CliffordPoly a);

// Text form of one term, e.g. "-2*x[1,1]*x[2,1]^2*e1*e2".
std::string term_to_string(const ExponentMatrix& gamma, ParityMask eta, const Integer& coeff);

// X_i = sum_alpha x_{i,alpha} e_alpha (left multiplication).
CliffordPoly apply_X(int i, const CliffordPoly& f);
// D_i = sum_alpha d/dx_{i,alpha} e_alpha.
CliffordPoly apply_D(int i, const CliffordPoly& f);

enum class Ladder { raise, lower }; // B_i^+ = X_i, B_i^- = D_i

CliffordPoly apply_B(Ladder which, int i, const CliffordPoly& f);

// Antisymmetrized product sum_sigma sgn(sigma) X_{i_sigma(1)} ... X_{i_sigma(k)} f.
// Throws std::invalid_argument unless indices strictly increase within {1..n}.
CliffordPoly column_op(std::span<const int> indices, const CliffordPoly& f);

// Canonical pairing in which the x^gamma e^eta are orthonormal.
Integer inner_product(const CliffordPoly& f, const CliffordPoly& g);

// [{B_i^xi, B_j^eta}, B_l^eps] f - ((eps-xi) delta_il B_j^eta + (eps-eta) delta_jl B_i^xi) f
CliffordPoly triple_relation_defect(int i, int j, int l, Ladder xi, Ladder eta, Ladder eps,
                                    const CliffordPoly& f);

} // namespace ospbasis
