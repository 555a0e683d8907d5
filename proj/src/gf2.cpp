#include "smallcover/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace smallcover {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t length) : len_(length), words_(words_for(length), 0) {}

BitVector BitVector::unit(std::size_t length, std::size_t pos) {
    BitVector v(length);
    v.set(pos, true);
    return v;
}

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (std::size_t i = 0; i < length; ++i) v.set(i, true);
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw IndexError("bit index " + std::to_string(i) + " out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw IndexError("bit index " + std::to_string(i) + " out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) { set(i, !get(i)); }

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_)
        throw DimensionMismatchError("xor of bit vectors of lengths " + std::to_string(len_) +
                                     " and " + std::to_string(other.len_));
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::is_zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<int> BitVector::support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw DimensionMismatchError("rows of unequal length");
        for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r].get(c));
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols) {
    if (cols.empty()) return BitMatrix();
    BitMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_)
            throw DimensionMismatchError("columns of unequal length");
        for (std::size_t r = 0; r < m.rows_; ++r) m.set(r, c, cols[c].get(r));
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw IndexError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range");
    return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw IndexError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range");
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
        words_[r * stride_ + c / kWordBits] |= mask;
    else
        words_[r * stride_ + c / kWordBits] &= ~mask;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.set(c, get(r, c));
    return v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

std::vector<BitVector> BitMatrix::columns() const {
    std::vector<BitVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < stride_; ++w)
        words_[dst * stride_ + w] ^= words_[src * stride_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w)
        std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, c)) ++pivot;
        if (pivot == work.rows()) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < work.rows(); ++i)
            if (work.get(i, c)) work.xor_row_into(r, i);
        ++r;
    }
    return r;
}

bool is_invertible(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw NonSquareError("invertibility requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return rank(m) == m.rows();
}

BitVector column_sum(const BitMatrix& m, const std::vector<int>& columns) {
    BitVector acc(m.rows());
    for (int c : columns) {
        if (c < 1 || static_cast<std::size_t>(c) > m.cols())
            throw IndexError("column index " + std::to_string(c) + " out of range 1.." +
                             std::to_string(m.cols()));
        acc ^= m.column(static_cast<std::size_t>(c) - 1);
    }
    return acc;
}

namespace {

// True iff the subset of `cols` selected by mask is linearly dependent.
// The basis is kept fully reduced (no basis vector contains another's
// leading bit), so one reduction pass per candidate suffices.
bool subset_dependent(const std::vector<BitVector>& cols, std::uint64_t mask) {
    std::vector<std::pair<std::size_t, BitVector>> basis;  // (leading bit, vector)
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!((mask >> j) & 1)) continue;
        BitVector v = cols[j];
        for (const auto& [lead, b] : basis)
            if (v.get(lead)) v ^= b;
        if (v.is_zero()) return true;
        std::size_t lead = 0;
        while (!v.get(lead)) ++lead;
        for (auto& [l, b] : basis)
            if (b.get(lead)) b ^= v;
        basis.emplace_back(lead, std::move(v));
    }
    return false;
}

void k_subsets(std::size_t m, std::size_t k,
               const std::function<void(std::uint64_t, const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        std::uint64_t mask = 0;
        for (int j : idx) mask |= std::uint64_t{1} << j;
        fn(mask, idx);
        // next combination in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == static_cast<int>(m - k + i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::vector<int>> minimal_dependent_sets(const std::vector<BitVector>& columns,
                                                     std::size_t max_size) {
    const std::size_t m = columns.size();
    if (m == 0) return {};
    if (m > 64) throw IndexError("minimal_dependent_sets supports at most 64 columns");
    if (max_size > m)
        throw IndexError("max_size " + std::to_string(max_size) + " exceeds column count " +
                         std::to_string(m));
    for (const auto& c : columns)
        if (c.size() != columns[0].size())
            throw DimensionMismatchError("columns of unequal length");

    std::vector<std::vector<int>> circuits;
    std::vector<std::uint64_t> circuit_masks;
    for (std::size_t k = 1; k <= max_size; ++k) {
        k_subsets(m, k, [&](std::uint64_t mask, const std::vector<int>& idx) {
            // a superset of a known circuit is dependent but not minimal
            for (std::uint64_t cm : circuit_masks)
                if ((cm & mask) == cm) return;
            if (subset_dependent(columns, mask)) {
                std::vector<int> s;
                s.reserve(idx.size());
                for (int j : idx) s.push_back(j + 1);
                circuits.push_back(std::move(s));
                circuit_masks.push_back(mask);
            }
        });
    }
    return circuits;
}

std::string to_text(const BitMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << (m.get(r, c) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

BitMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) throw ParseError("unexpected end of matrix text", lineno + 1);
        return false;
    };

    next_line(true);
    std::istringstream header(line);
    long long rows = 0, cols = 0;
    if (!(header >> rows >> cols) || rows <= 0 || cols <= 0)
        throw ParseError("expected header \"rows cols\" with positive integers", lineno);
    std::string extra;
    if (header >> extra) throw ParseError("trailing content after matrix header", lineno);

    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long r = 0; r < rows; ++r) {
        next_line(true);
        std::size_t col = 0, pos = 0;
        while (pos < line.size()) {
            char ch = line[pos];
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++pos;
                continue;
            }
            if (ch != '0' && ch != '1')
                throw ParseError(std::string("expected 0 or 1, got '") + ch + "'", lineno,
                                 static_cast<int>(pos) + 1);
            if (col >= static_cast<std::size_t>(cols))
                throw ParseError("too many entries in matrix row", lineno,
                                 static_cast<int>(pos) + 1);
            m.set(static_cast<std::size_t>(r), col, ch == '1');
            ++col;
            ++pos;
        }
        if (col != static_cast<std::size_t>(cols))
            throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(col),
                             lineno);
    }
    if (next_line(false)) throw ParseError("trailing content after matrix rows", lineno);
    return m;
}

}  // namespace smallcover
