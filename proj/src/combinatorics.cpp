#include "ospbasis/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ospbasis/errors.hpp"

namespace ospbasis {

namespace {

std::string rows_to_string(const std::vector<std::vector<int>>& rows)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k)
            os << ';';
        for (std::size_t l = 0; l < rows[k].size(); ++l) {
            if (l)
                os << ',';
            os << rows[k][l];
        }
    }
    return os.str();
}

void check_shape(const std::vector<std::vector<int>>& rows)
{
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].empty())
            throw invalid_tableau("row " + std::to_string(k + 1) + " is empty");
        if (k && rows[k].size() > rows[k - 1].size())
            throw invalid_tableau("row " + std::to_string(k + 1) + " is longer than row " + std::to_string(k));
    }
}

} // namespace

// --- Partition --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw invalid_tableau("partition parts must be positive");
        if (k && parts_[k] > parts_[k - 1])
            throw invalid_tableau("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int k) const noexcept
{
    return (k >= 1 && k <= length()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
}

int Partition::column(int l) const noexcept
{
    if (l < 1)
        return 0;
    int count = 0;
    for (int part : parts_) {
        if (part < l)
            break;
        ++count;
    }
    return count;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts;
    const int width = lambda.row(1);
    parts.reserve(static_cast<std::size_t>(width));
    for (int l = 1; l <= width; ++l)
        parts.push_back(lambda.column(l));
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda)
{
    os << '(';
    for (std::size_t k = 0; k < lambda.parts().size(); ++k)
        os << (k ? "," : "") << lambda.parts()[k];
    return os << ')';
}

// --- WeightVector -----------------------------------------------------------

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 0)
            throw std::invalid_argument("weight entries must be nonnegative");
}

int WeightVector::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

WeightVector WeightVector::shifted(int i, int delta) const
{
    if (i < 1 || i > n())
        throw std::invalid_argument("weight index out of range");
    auto e = entries_;
    e[static_cast<std::size_t>(i - 1)] += delta;
    return WeightVector(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const WeightVector& mu)
{
    os << '(';
    for (std::size_t k = 0; k < mu.entries().size(); ++k)
        os << (k ? "," : "") << mu.entries()[k];
    return os << ')';
}

// --- orders -----------------------------------------------------------------

bool graded_lex_less(std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("graded_lex_less: length mismatch");
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb)
        return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool graded_lex_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    const int len = std::max(a.length(), b.length());
    for (int k = 1; k <= len; ++k)
        if (a.row(k) != b.row(k))
            return a.row(k) < b.row(k);
    return false;
}

bool graded_lex_less(const WeightVector& a, const WeightVector& b)
{
    return graded_lex_less(std::span<const int>(a.entries()), std::span<const int>(b.entries()));
}

// --- SsytTableau ------------------------------------------------------------

SsytTableau::SsytTableau(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("alphabet size must be nonnegative");
}

SsytTableau::SsytTableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows))
{
    if (n < 0)
        throw std::invalid_argument("alphabet size must be nonnegative");
    check_shape(rows_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        for (std::size_t l = 0; l < rows_[k].size(); ++l) {
            const int v = rows_[k][l];
            const auto where = " at row " + std::to_string(k + 1) + ", column " + std::to_string(l + 1);
            if (v < 1 || v > n_)
                throw invalid_tableau("entry " + std::to_string(v) + where + " is outside {1.." +
                                      std::to_string(n_) + "}");
            if (l && rows_[k][l - 1] > v)
                throw invalid_tableau("rows must weakly increase; " + std::to_string(rows_[k][l - 1]) + " precedes " +
                                      std::to_string(v) + where);
            if (k && rows_[k - 1][l] >= v)
                throw invalid_tableau("columns must strictly increase; " + std::to_string(rows_[k - 1][l]) + " sits above " +
                                      std::to_string(v) + where);
        }
    }
}

int SsytTableau::num_boxes() const noexcept
{
    int total = 0;
    for (const auto& r : rows_)
        total += static_cast<int>(r.size());
    return total;
}

Partition SsytTableau::shape() const
{
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_)
        parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

WeightVector SsytTableau::weight() const
{
    std::vector<int> mu(static_cast<std::size_t>(n_), 0);
    for (const auto& r : rows_)
        for (int v : r)
            ++mu[static_cast<std::size_t>(v - 1)];
    return WeightVector(std::move(mu));
}

std::vector<std::vector<int>> SsytTableau::columns() const
{
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
    for (const auto& r : rows_)
        for (std::size_t l = 0; l < r.size(); ++l)
            cols[l].push_back(r[l]);
    return cols;
}

std::string SsytTableau::to_string() const
{
    return rows_to_string(rows_);
}

std::ostream& operator<<(std::ostream& os, const SsytTableau& t)
{
    return os << '[' << t.to_string() << ']';
}

std::vector<std::vector<int>> parse_rows(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s.push_back(c);
    if (s.empty() || s == "[]")
        return {};
    std::vector<std::vector<int>> rows;
    std::stringstream rows_in(s);
    std::string row_text;
    while (std::getline(rows_in, row_text, ';')) {
        if (row_text.empty())
            throw invalid_tableau("empty row in tableau \"" + text + "\"");
        std::vector<int> row;
        std::stringstream cells(row_text);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (cell.empty() || used != cell.size())
                throw invalid_tableau("cannot parse entry \"" + cell + "\" in tableau \"" + text + "\"");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int max_entry(const std::vector<std::vector<int>>& rows)
{
    int m = 0;
    for (const auto& r : rows)
        for (int v : r)
            m = std::max(m, v);
    return m;
}

SsytTableau parse_tableau(const std::string& text, int n)
{
    return SsytTableau(n, parse_rows(text));
}

// --- FilledTableau ----------------------------------------------------------

FilledTableau::FilledTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    check_shape(rows_);
    for (const auto& r : rows_)
        for (int v : r)
            if (v < 1)
                throw invalid_tableau("filling entries must be positive");
}

FilledTableau::FilledTableau(const Partition& shape, int value)
{
    for (int part : shape.parts())
        rows_.emplace_back(static_cast<std::size_t>(part), value);
}

Partition FilledTableau::shape() const
{
    std::vector<int> parts;
    for (const auto& r : rows_)
        parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int FilledTableau::max_entry() const noexcept
{
    return ospbasis::max_entry(rows_);
}

bool FilledTableau::column_distinct() const noexcept
{
    if (rows_.empty())
        return true;
    for (std::size_t l = 0; l < rows_.front().size(); ++l) {
        for (std::size_t k = 0; k < rows_.size() && l < rows_[k].size(); ++k)
            for (std::size_t k2 = k + 1; k2 < rows_.size() && l < rows_[k2].size(); ++k2)
                if (rows_[k][l] == rows_[k2][l])
                    return false;
    }
    return true;
}

std::string FilledTableau::to_string() const
{
    return rows_to_string(rows_);
}

std::ostream& operator<<(std::ostream& os, const FilledTableau& t)
{
    return os << '[' << t.to_string() << ']';
}

// --- tableau operations -----------------------------------------------------

SsytTableau subtableau(const SsytTableau& a, int k)
{
    if (k < 1 || k > a.n())
        throw std::invalid_argument("subtableau: color out of range");
    std::vector<std::vector<int>> rows;
    for (const auto& r : a.rows()) {
        std::vector<int> kept;
        for (int v : r)
            if (v <= k)
                kept.push_back(v);
        if (kept.empty())
            break;
        rows.push_back(std::move(kept));
    }
    return SsytTableau(a.n(), std::move(rows));
}

bool tableau_less(const SsytTableau& a, const SsytTableau& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("tableau_less: tableaux over different alphabets");
    const auto wa = a.weight();
    const auto wb = b.weight();
    if (wa != wb)
        return graded_lex_less(wa, wb);
    for (int k = 1; k <= a.n(); ++k) {
        const auto la = subtableau(a, k).shape();
        const auto lb = subtableau(b, k).shape();
        if (la != lb)
            return graded_lex_less(la, lb);
    }
    return false;
}

namespace {

// Extends `shape` by a horizontal strip of `count` boxes, row by row from the
// top; new boxes in row k may not pass the old length of row k-1.
void for_each_strip(const std::vector<int>& shape, int count, int max_rows, const std::vector<int>* bound,
                    const std::function<void(const std::vector<int>&)>& emit)
{
    std::vector<int> next = shape;
    const int rows = std::min<int>(max_rows, static_cast<int>(shape.size()) + 1);
    next.resize(static_cast<std::size_t>(rows), 0);

    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == rows) {
            if (left == 0) {
                std::vector<int> trimmed = next;
                while (!trimmed.empty() && trimmed.back() == 0)
                    trimmed.pop_back();
                emit(trimmed);
            }
            return;
        }
        const auto ku = static_cast<std::size_t>(k);
        const int old = ku < shape.size() ? shape[ku] : 0;
        int cap = k == 0 ? old + left : std::min(old + left, shape[ku - 1]);
        if (bound)
            cap = std::min(cap, ku < bound->size() ? (*bound)[ku] : 0);
        for (int len = old; len <= cap; ++len) {
            next[ku] = len;
            rec(k + 1, left - (len - old));
        }
        next[ku] = old;
    };
    rec(0, count);
}

} // namespace

std::vector<SsytTableau> enumerate_ssyt(int n, const WeightVector& mu, int max_rows)
{
    if (n < 1 || mu.n() != n)
        throw std::invalid_argument("enumerate_ssyt: weight length must equal n >= 1");
    if (max_rows < 1)
        throw std::invalid_argument("enumerate_ssyt: max_rows must be positive");

    std::vector<SsytTableau> out;
    std::vector<std::vector<int>> rows;
    std::function<void(int, const std::vector<int>&)> rec = [&](int color, const std::vector<int>& shape) {
        if (color > n) {
            out.emplace_back(n, rows);
            return;
        }
        for_each_strip(shape, mu(color), max_rows, nullptr, [&](const std::vector<int>& next) {
            auto saved = rows;
            rows.resize(next.size());
            for (std::size_t k = 0; k < next.size(); ++k)
                rows[k].resize(static_cast<std::size_t>(next[k]), color);
            rec(color + 1, next);
            rows = std::move(saved);
        });
    };
    rec(1, {});
    std::sort(out.begin(), out.end(), TableauLess{});
    return out;
}

std::size_t kostka(const Partition& lambda, const WeightVector& mu)
{
    if (lambda.size() != mu.total())
        return 0;
    std::size_t count = 0;
    const auto& target = lambda.parts();
    std::function<void(int, const std::vector<int>&)> rec = [&](int color, const std::vector<int>& shape) {
        if (color > mu.n()) {
            if (shape == target)
                ++count;
            return;
        }
        for_each_strip(shape, mu(color), lambda.length(), &target,
                       [&](const std::vector<int>& next) { rec(color + 1, next); });
    };
    if (mu.n() == 0)
        return lambda.empty() ? 1 : 0;
    rec(1, {});
    return count;
}

StripCoordinates strip_coordinates(const SsytTableau& a)
{
    StripCoordinates strips(static_cast<std::size_t>(a.n()));
    for (int k = 1; k <= a.num_rows(); ++k)
        for (int l = 1; l <= static_cast<int>(a.rows()[static_cast<std::size_t>(k - 1)].size()); ++l)
            strips[static_cast<std::size_t>(a.at(k, l) - 1)].push_back({k, l});
    // Each strip occupies distinct columns, so ordering by column is total.
    for (auto& s : strips)
        std::sort(s.begin(), s.end(), [](Coordinate x, Coordinate y) { return x.col > y.col; });
    return strips;
}

std::vector<Partition> partitions_of(int total, int max_parts)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

} // namespace ospbasis
