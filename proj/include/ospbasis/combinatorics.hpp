#pragma once

// Partitions, semistandard tableaux, fillings and the total order on
// semistandard tableaux used to make the leading-term structure unitriangular.
//
// Coordinates are (row k, column l), 1-based. Colors (tableau entries) are
// 1-based as well.

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ospbasis {

class Partition {
public:
    Partition() = default;
    // Throws invalid_tableau unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept; // |lambda|
    bool empty() const noexcept { return parts_.empty(); }
    // Row length, 0 beyond the last row. k is 1-based.
    int row(int k) const noexcept;
    // Number of boxes in column l (1-based), i.e. the conjugate part.
    int column(int l) const noexcept;
    bool contains(int k, int l) const noexcept { return k >= 1 && l >= 1 && row(k) >= l; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

std::ostream& operator<<(std::ostream& os, const Partition& lambda);

// Weight mu of a weight mu + p/2; the uniform p/2 shift is never stored.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    int n() const noexcept { return static_cast<int>(entries_.size()); }
    int total() const noexcept;
    // Entry for color i (1-based).
    int operator()(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    // mu + delta * e_i; throws std::invalid_argument if the result is negative.
    WeightVector shifted(int i, int delta) const;

    auto operator<=>(const WeightVector&) const = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const WeightVector& mu);

// Graded lexicographic order on N_0^n. Throws std::invalid_argument on length mismatch.
bool graded_lex_less(std::span<const int> a, std::span<const int> b);
// Graded lexicographic order on partitions, comparing zero-padded parts.
bool graded_lex_less(const Partition& a, const Partition& b);
bool graded_lex_less(const WeightVector& a, const WeightVector& b);

struct Coordinate {
    int row = 1;
    int col = 1;
    auto operator<=>(const Coordinate&) const = default;
};

// A semistandard tableau over the alphabet {1..n}. Stored row-major.
class SsytTableau {
public:
    SsytTableau() = default;
    // Empty tableau over n colors (the vacuum label).
    explicit SsytTableau(int n);
    // Throws invalid_tableau naming the offending row/column on violation.
    SsytTableau(int n, std::vector<std::vector<int>> rows);

    int n() const noexcept { return n_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int num_boxes() const noexcept;
    int at(int k, int l) const { return rows_.at(k - 1).at(l - 1); }

    Partition shape() const;
    WeightVector weight() const;
    // Columns left to right, each read top to bottom (strictly increasing).
    std::vector<std::vector<int>> columns() const;

    std::string to_string() const; // "1,1,2;2"

    bool operator==(const SsytTableau&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const SsytTableau& t);

// Parse "1,1,2;2" (rows separated by ';'). An empty string or "[]" is the empty tableau.
SsytTableau parse_tableau(const std::string& text, int n);
// Largest entry in the textual form, without semistandard validation; 0 if empty.
int max_entry(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> parse_rows(const std::string& text);

// A filling of a Young diagram with values in {1..p}; not necessarily semistandard.
class FilledTableau {
public:
    FilledTableau() = default;
    // Throws invalid_tableau if the row lengths do not form a partition or an entry is < 1.
    explicit FilledTableau(std::vector<std::vector<int>> rows);
    // Every box set to `value`.
    FilledTableau(const Partition& shape, int value);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    Partition shape() const;
    int at(Coordinate y) const { return rows_.at(y.row - 1).at(y.col - 1); }
    void set(Coordinate y, int value) { rows_.at(y.row - 1).at(y.col - 1) = value; }
    int max_entry() const noexcept;
    // True iff no value repeats within a column (membership in the column-distinct set).
    bool column_distinct() const noexcept;

    std::string to_string() const;

    auto operator<=>(const FilledTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const FilledTableau& t);

// strips[i-1] lists the boxes holding color i, right to left.
using StripCoordinates = std::vector<std::vector<Coordinate>>;

// Truncation of A to the entries 1..k. Throws std::invalid_argument unless 1 <= k <= n.
SsytTableau subtableau(const SsytTableau& a, int k);

// Total order on tableaux of the same alphabet: weight first, then the
// shapes of successive subtableaux. Throws std::invalid_argument if the n differ.
bool tableau_less(const SsytTableau& a, const SsytTableau& b);

struct TableauLess {
    bool operator()(const SsytTableau& a, const SsytTableau& b) const { return tableau_less(a, b); }
};

// All semistandard tableaux of weight mu with at most max_rows rows, ascending.
std::vector<SsytTableau> enumerate_ssyt(int n, const WeightVector& mu, int max_rows);

// Number of semistandard tableaux of shape lambda and weight mu.
std::size_t kostka(const Partition& lambda, const WeightVector& mu);

StripCoordinates strip_coordinates(const SsytTableau& a);

// All partitions of `total` with at most max_parts parts, in reverse lex order.
std::vector<Partition> partitions_of(int total, int max_parts);

} // namespace ospbasis
