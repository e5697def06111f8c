#pragma once

// Mod-2 scalar arithmetic and dense bit-packed linear algebra over F2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ltk {

/// C(n, k) mod 2 by Lucas' theorem. Zero whenever k < 0, n < 0 or k > n.
constexpr bool binom_mod2(long long n, long long k) noexcept
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (static_cast<unsigned long long>(k) & ~static_cast<unsigned long long>(n)) == 0;
}

class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);

    std::size_t size() const noexcept { return length_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    std::vector<std::size_t> support() const;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Row-major dense matrix over F2; every row is a BitVector of length cols().
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Builds a matrix whose j-th column is columns[j]; all columns must have length `rows`.
    static BitMatrix from_columns(std::size_t rows, std::span<const BitVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool test(std::size_t r, std::size_t c) const { return row_data_.at(r).test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { row_data_.at(r).set(c, value); }
    void flip(std::size_t r, std::size_t c) { row_data_.at(r).flip(c); }

    const BitVector& row(std::size_t r) const { return row_data_.at(r); }
    BitVector& row(std::size_t r) { return row_data_.at(r); }
    BitVector column(std::size_t c) const;

    void swap_rows(std::size_t a, std::size_t b);
    void add_row(std::size_t target, std::size_t source);

    /// Matrix-vector product M x.
    BitVector multiply(const BitVector& x) const;
    BitMatrix transposed() const;
    /// Stacks `below` under this matrix; column counts must agree.
    BitMatrix stacked(const BitMatrix& below) const;
    /// Appends the columns of `right`; row counts must agree.
    BitMatrix concatenated(const BitMatrix& right) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> row_data_;
};

/// Reduced row echelon form of a matrix, optionally with the row operations
/// recorded so that later right-hand sides can be solved without re-eliminating.
class Elimination {
public:
    explicit Elimination(BitMatrix m, bool record_transform = false);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t cols() const noexcept { return reduced_.cols(); }
    std::size_t rows() const noexcept { return reduced_.rows(); }
    std::span<const std::size_t> pivot_columns() const noexcept { return pivots_; }
    const BitMatrix& reduced() const noexcept { return reduced_; }

    std::vector<BitVector> kernel_basis() const;
    /// Requires record_transform; returns some x with M x = b, or nullopt.
    std::optional<BitVector> solve(const BitVector& b) const;

private:
    BitMatrix reduced_;
    std::optional<BitMatrix> transform_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

} // namespace ltk
