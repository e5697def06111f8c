#include "ltk/f2.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace ltk {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void check_index(std::size_t i, std::size_t n)
{
    if (i >= n)
        throw std::out_of_range("bit index " + std::to_string(i) + " out of range " + std::to_string(n));
}

} // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

bool BitVector::test(std::size_t i) const
{
    check_index(i, length_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value)
{
    check_index(i, length_);
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i)
{
    check_index(i, length_);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

bool BitVector::is_zero() const noexcept
{
    for (Word w : words_)
        if (w != 0)
            return false;
    return true;
}

std::size_t BitVector::popcount() const noexcept
{
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept
{
    if (from >= length_)
        return length_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (w != 0) {
            std::size_t pos = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            return pos < length_ ? pos : length_;
        }
        if (++wi == words_.size())
            return length_;
        w = words_[wi];
    }
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.length_ != length_)
        throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = find_next(0); i < length_; i = find_next(i + 1))
        out.push_back(i);
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_data_(rows, BitVector(cols))
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, std::span<const BitVector> columns)
{
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("column length does not match row count");
        for (std::size_t r : columns[c].support())
            m.set(r, c);
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const
{
    check_index(c, cols_);
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (row_data_[r].test(c))
            v.set(r);
    return v;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    check_index(a, rows_);
    check_index(b, rows_);
    std::swap(row_data_[a], row_data_[b]);
}

void BitMatrix::add_row(std::size_t target, std::size_t source)
{
    check_index(target, rows_);
    check_index(source, rows_);
    row_data_[target] ^= row_data_[source];
}

BitVector BitMatrix::multiply(const BitVector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto a = row_data_[r].words();
        auto b = x.words();
        BitVector::Word acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            acc ^= a[i] & b[i];
        if (std::popcount(acc) & 1)
            y.set(r);
    }
    return y;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_data_[r].support())
            t.set(c, r);
    return t;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const
{
    if (below.cols_ != cols_)
        throw std::invalid_argument("stacked: column count mismatch");
    BitMatrix out = *this;
    out.rows_ += below.rows_;
    out.row_data_.insert(out.row_data_.end(), below.row_data_.begin(), below.row_data_.end());
    return out;
}

BitMatrix BitMatrix::concatenated(const BitMatrix& right) const
{
    if (right.rows_ != rows_)
        throw std::invalid_argument("concatenated: row count mismatch");
    BitMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c : row_data_[r].support())
            out.set(r, c);
        for (std::size_t c : right.row_data_[r].support())
            out.set(r, cols_ + c);
    }
    return out;
}

Elimination::Elimination(BitMatrix m, bool record_transform) : reduced_(std::move(m))
{
    if (record_transform)
        transform_ = BitMatrix::identity(reduced_.rows());

    const std::size_t nrows = reduced_.rows();
    const std::size_t ncols = reduced_.cols();
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < ncols && next_row < nrows; ++c) {
        std::size_t pivot = nrows;
        const std::size_t wi = c / BitVector::kWordBits;
        const BitVector::Word mask = BitVector::Word{1} << (c % BitVector::kWordBits);
        for (std::size_t r = next_row; r < nrows; ++r) {
            if (reduced_.row(r).words()[wi] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot == nrows)
            continue;
        if (pivot != next_row) {
            reduced_.swap_rows(pivot, next_row);
            if (transform_)
                transform_->swap_rows(pivot, next_row);
        }
        const BitVector& prow = reduced_.row(next_row);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r != next_row && (reduced_.row(r).words()[wi] & mask)) {
                reduced_.row(r) ^= prow;
                if (transform_)
                    transform_->add_row(r, next_row);
            }
        }
        pivots_.push_back(c);
        ++next_row;
    }
}

std::vector<BitVector> Elimination::kernel_basis() const
{
    const std::size_t ncols = reduced_.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots_)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    basis.reserve(ncols - pivots_.size());
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(ncols);
        v.set(f);
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (reduced_.test(i, f))
                v.set(pivots_[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> Elimination::solve(const BitVector& b) const
{
    if (!transform_)
        throw std::logic_error("Elimination::solve requires a recorded transform");
    if (b.size() != reduced_.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const BitVector tb = transform_->multiply(b);
    // Rows past the rank are zero in the reduced matrix; b is consistent iff they are zero in T b.
    if (tb.find_next(pivots_.size()) < tb.size())
        return std::nullopt;
    BitVector x(reduced_.cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (tb.test(i))
            x.set(pivots_[i]);
    return x;
}

std::size_t rank(const BitMatrix& m) { return Elimination(m).rank(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) { return Elimination(m).kernel_basis(); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    // Eliminate [M | b]; the system is consistent iff b's column is not a pivot.
    BitMatrix augmented = m.concatenated(BitMatrix::from_columns(m.rows(), std::span<const BitVector>(&b, 1)));
    Elimination e(std::move(augmented));
    const auto piv = e.pivot_columns();
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (e.reduced().test(i, m.cols()))
            x.set(piv[i]);
    return x;
}

} // namespace ltk
