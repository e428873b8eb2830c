#pragma once

// Matrix elements of X_i, D_i on L_n(p) in the basis of normalized tableau
// vectors, and of B_i^+, B_i^- on the induced module by extrapolation in p.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospbasis/basis.hpp"
#include "ospbasis/combinatorics.hpp"
#include "ospbasis/polynomial.hpp"

namespace ospbasis {

enum class Generator { X, D, BPlus, BMinus };

// "X", "D", "B+", "B-"; parse also accepts "B−" and "Bp"/"Bm".
std::string generator_name(Generator g);
Generator parse_generator(const std::string& text);

// Square integer matrix, 0-based indexing.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t size) : size_(size), entries_(size * size) {}

    std::size_t size() const noexcept { return size_; }
    Integer& at(std::size_t k, std::size_t l) { return entries_.at(k * size_ + l); }
    const Integer& at(std::size_t k, std::size_t l) const { return entries_.at(k * size_ + l); }
    bool is_upper_unitriangular() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<Integer> entries_;
};

using IntVector = std::vector<Integer>;

// All tableau vectors of weight mu in L_n(p), ascending.
class BasisContext {
public:
    BasisContext(int n, int p, WeightVector mu);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    const WeightVector& weight() const noexcept { return mu_; }
    std::size_t dimension() const noexcept { return tableaux_.size(); }
    const std::vector<SsytTableau>& tableaux() const noexcept { return tableaux_; }
    const std::vector<TableauVector>& vectors() const noexcept { return vectors_; }
    // Position of a in the ordered list; throws std::invalid_argument if absent.
    std::size_t index_of(const SsytTableau& a) const;

    // gamma_{A_k, D_{A_k}} and c_{A_k}(gamma_{A_k, D_{A_k}}), k 0-based.
    const ExponentMatrix& leading_gamma(std::size_t k) const { return leading_gamma_.at(k); }
    int leading_coeff(std::size_t k) const { return leading_coeff_.at(k); }
    // U_mu, computed once on construction.
    const IntMatrix& u() const noexcept { return u_; }

private:
    int n_;
    int p_;
    WeightVector mu_;
    std::vector<SsytTableau> tableaux_;
    std::vector<TableauVector> vectors_;
    std::vector<ExponentMatrix> leading_gamma_;
    std::vector<int> leading_coeff_;
    IntMatrix u_;
};

// Process-wide cache keyed by (n, p, mu). Thread safe.
std::shared_ptr<const BasisContext> get_context(int n, int p, const WeightVector& mu);
void clear_context_cache();
std::size_t context_cache_size();

// (U_mu)_{k,l} = <x_{A_k,D_{A_k}} e_{D_{A_k}}, omega~_{A_l}(p)>. Throws consistency_error
// if the result is not upper unitriangular.
IntMatrix build_U(const BasisContext& ctx);
// Inverse of an upper unitriangular matrix, exact.
IntMatrix unitriangular_inverse(const IntMatrix& u);
// Solves U x = f by back substitution.
IntVector back_substitute(const IntMatrix& u, const IntVector& f);

// (f_mu)_k(v) = <x_{A_k,D_{A_k}} e_{D_{A_k}}, v>. Throws std::invalid_argument if v has
// a term of another weight.
IntVector f_vector(const CliffordPoly& v, const BasisContext& ctx);

struct CoeffBudget {
    // Largest |S_mu| for which the permutation sum is used; above it c_A(gamma) is
    // read off the expanded polynomial.
    std::size_t max_group_order = 40320;
};

// f_mu(X_i omega~_A) or f_mu(D_i omega~_A) from the coefficient identities, never
// touching the product polynomial. ctx must be the context at mu_A +- e_i.
IntVector f_vector_by_coefficients(Generator g, int i, const SsytTableau& a, const BasisContext& ctx,
                                   const CoeffBudget& budget = {});

// Unique x with v = sum_k x_k omega~_{A_k}(p). Throws out_of_span_error on a nonzero residual.
IntVector expand_in_basis(const CliffordPoly& v, const BasisContext& ctx);

struct ActionTable {
    SsytTableau source;
    Generator generator = Generator::X;
    int index = 1;
    int p = 1;
    std::map<SsytTableau, Integer, TableauLess> terms; // zero coefficients omitted

    std::string generator_label() const; // "X1", "D2", "B+1", "B-3"
    bool operator==(const ActionTable& other) const;
};

// X_i or D_i on omega~_A(p). Throws invalid_tableau unless A has at most p rows.
ActionTable act(Generator g, int i, const SsytTableau& a, int p);

// Same, plus the matrices behind the expansion (empty when a shortcut applies).
struct ActionDetail {
    ActionTable table;
    bool shortcut = false;
    std::vector<SsytTableau> basis;
    IntMatrix u;
    IntVector f;
};
ActionDetail act_detailed(Generator g, int i, const SsytTableau& a, int p);

// B_i^+ or B_i^- on v~_A(p) in the induced module, from X_i, D_i tables at orders n and n+1.
ActionTable act_verma(Generator g, int i, const SsytTableau& a, int p);
// Same, with the affine-in-p coefficients fitted from orders q1 != q2 (both >= n).
ActionTable act_verma_affine(Generator g, int i, const SsytTableau& a, int p, int q1, int q2);

// A(k, l, m): m columns (1,2), then l columns (1), then k columns (2).
SsytTableau n2_tableau(int k, int l, int m);
// The closed-form n = 2 tables, converted to the normalized basis.
ActionTable n2_oracle(Generator g, int i, int k, int l, int m, int p);

} // namespace ospbasis
