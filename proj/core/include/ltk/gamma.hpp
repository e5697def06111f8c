#pragma once

// The divided power algebra Gamma(a_1, ..., a_s) = H_*(BV_s; F2) as a right module
// over the Steenrod algebra. A monomial a_1^{(t_1)} ... a_s^{(t_s)} is stored as its
// exponent vector; the right action is
//
//   (a^{(t)}) Sq^i = C(t - i, i) a^{(t - i)}
//
// extended to monomials by the Cartan formula.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace ltk {

class GammaMonomial {
public:
    explicit GammaMonomial(std::vector<int> exponents);
    GammaMonomial(std::initializer_list<int> exponents);

    int rank() const noexcept { return static_cast<int>(exponents_.size()); }
    int degree() const noexcept { return degree_; }
    std::span<const int> exponents() const noexcept { return exponents_; }
    int operator[](std::size_t i) const { return exponents_.at(i); }

    /// The monomial with the first factor removed (rank - 1).
    GammaMonomial tail() const;

    friend bool operator==(const GammaMonomial& a, const GammaMonomial& b) { return a.exponents_ == b.exponents_; }
    friend std::strong_ordering operator<=>(const GammaMonomial& a, const GammaMonomial& b)
    {
        return a.exponents_ <=> b.exponents_;
    }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

class GammaElement {
public:
    using Terms = std::set<GammaMonomial>;

    explicit GammaElement(int rank);
    GammaElement(int rank, std::initializer_list<GammaMonomial> terms);
    GammaElement(const GammaMonomial& m);

    int rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    Terms::const_iterator begin() const noexcept { return terms_.begin(); }
    Terms::const_iterator end() const noexcept { return terms_.end(); }
    bool contains(const GammaMonomial& m) const { return terms_.contains(m); }

    /// Throws std::invalid_argument when m has a different rank.
    void toggle(const GammaMonomial& m);

    GammaElement& operator+=(const GammaElement& other);
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend bool operator==(const GammaElement&, const GammaElement&) = default;

    bool is_homogeneous() const;
    /// Common degree of the terms (0 for the zero element). Throws NotHomogeneousError on mixed input.
    int degree() const;

private:
    int rank_;
    Terms terms_;
};

GammaElement sq_right(const GammaMonomial& m, int i);
GammaElement sq_right(const GammaElement& e, int i);

struct SquareCheck {
    int square = 0;
    GammaElement image;
};

struct PrimitivityEvidence {
    bool primitive = true;
    /// Every square that was applied, in increasing order, with its image.
    std::vector<SquareCheck> checks;
};

/// Checks the generators Sq^{2^k} with 2^{k+1} <= degree, plus the next square above that
/// cutoff (which vanishes by instability).
PrimitivityEvidence is_primitive(const GammaElement& e);

/// Exponent vectors of length s summing to d, in descending lexicographic order.
std::vector<GammaMonomial> gamma_basis(int s, int d);

/// Basis of the subspace of degree-d elements killed by all positive Steenrod squares.
/// Throws ResourceLimitError when the monomial basis exceeds max_basis.
std::vector<GammaElement> primitive_basis(int s, int d, std::size_t max_basis = 200'000);

} // namespace ltk
