/*
 * Dense linear algebra over GF(2) on bit-packed words: ranks, invertibility,
 * column sums, and enumeration of minimal dependent column sets (circuits of
 * the binary matroid).
 */
#ifndef SMALLCOVER_GF2_HPP
#define SMALLCOVER_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcover/errors.hpp"

namespace smallcover {

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    static BitVector zeros(std::size_t length) { return BitVector(length); }
    // Standard basis vector e_pos, 0-based position.
    static BitVector unit(std::size_t length, std::size_t pos);
    static BitVector ones(std::size_t length);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool is_zero() const;
    std::size_t popcount() const;
    // 1-based positions of the nonzero entries, ascending.
    std::vector<int> support() const;

    bool operator==(const BitVector&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    static BitMatrix from_columns(const std::vector<BitVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    std::vector<BitVector> columns() const;

    void xor_row_into(std::size_t src, std::size_t dst);  // row dst ^= row src
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transpose() const;

    bool operator==(const BitMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> words_;  // row-major, stride_ words per row
};

// GF(2) rank by word-parallel row elimination.
std::size_t rank(const BitMatrix& m);

// True iff m is square of full rank; throws NonSquareError otherwise.
bool is_invertible(const BitMatrix& m);

// XOR of the columns selected by 1-based indices; an empty selection gives
// the zero vector. Repeated indices accumulate (two copies cancel).
BitVector column_sum(const BitMatrix& m, const std::vector<int>& columns);

// All circuits of the binary matroid on `columns` with cardinality at most
// max_size: the index sets (1-based, sorted) that are linearly dependent
// while every proper subset is independent. Result sorted by size, then
// lexicographically. Supports up to 64 columns.
std::vector<std::vector<int>> minimal_dependent_sets(
    const std::vector<BitVector>& columns, std::size_t max_size);

// Text format: header "rows cols", then one line per row of space-separated
// 0/1 digits. Round-trips bit-exactly.
std::string to_text(const BitMatrix& m);
BitMatrix parse_matrix_text(const std::string& text);

}  // namespace smallcover

#endif
