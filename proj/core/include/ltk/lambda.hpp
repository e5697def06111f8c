#pragma once

// The mod-2 Lambda algebra.
//
// A word lambda_{t_1} ... lambda_{t_s} has bidegree (s, t_1 + ... + t_s). Words are
// admissible when t_k <= 2 t_{k+1} for every adjacent pair; the admissible words form
// an additive basis. An inadmissible pair lambda_a lambda_b (a > 2b) is rewritten with
//
//   lambda_{2b+1+n} lambda_b = sum_{j>=0} C(n-j-1, j) lambda_{2b+1+j} lambda_{b+n-j}
//
// and the differential is d(lambda_n) = sum_{j>=1} C(n-j, j) lambda_{j-1} lambda_{n-j},
// extended to words by the Leibniz rule. Every rewrite strictly increases the right
// letter of the rewritten pair, so normalization terminates for any strategy.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace ltk {

/// Homological length s and internal degree d; the topological degree is s + d.
struct Bidegree {
    int s = 0;
    int d = 0;

    constexpr int topological() const noexcept { return s + d; }
    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

class LambdaMonomial {
public:
    /// The empty word (unit), bidegree (0, 0).
    LambdaMonomial() = default;
    explicit LambdaMonomial(std::vector<int> indices);
    LambdaMonomial(std::initializer_list<int> indices);

    std::span<const int> indices() const noexcept { return indices_; }
    int length() const noexcept { return static_cast<int>(indices_.size()); }
    int degree() const noexcept { return degree_; }
    Bidegree bidegree() const noexcept { return {length(), degree_}; }
    bool is_unit() const noexcept { return indices_.empty(); }

    int operator[](std::size_t i) const { return indices_.at(i); }

    /// Word concatenation; the result is generally not admissible.
    friend LambdaMonomial concatenate(const LambdaMonomial& a, const LambdaMonomial& b);

    friend bool operator==(const LambdaMonomial& a, const LambdaMonomial& b) { return a.indices_ == b.indices_; }
    friend std::strong_ordering operator<=>(const LambdaMonomial& a, const LambdaMonomial& b)
    {
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<int> indices_;
    int degree_ = 0;
};

/// F2-linear combination of words; a word is present iff its coefficient is 1.
class LambdaElement {
public:
    using Terms = std::set<LambdaMonomial>;

    LambdaElement() = default;
    LambdaElement(LambdaMonomial m);
    LambdaElement(std::initializer_list<LambdaMonomial> terms);

    static LambdaElement unit() { return LambdaElement(LambdaMonomial{}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    Terms::const_iterator begin() const noexcept { return terms_.begin(); }
    Terms::const_iterator end() const noexcept { return terms_.end(); }
    bool contains(const LambdaMonomial& m) const { return terms_.contains(m); }

    /// Adds m with coefficient 1 (removes it if already present).
    void toggle(const LambdaMonomial& m);
    void toggle(LambdaMonomial&& m);

    LambdaElement& operator+=(const LambdaElement& other);
    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

    /// True when every term has one bidegree. Zero is homogeneous.
    bool is_homogeneous() const;
    /// The common bidegree of the terms; nullopt for zero. Throws NotHomogeneousError on mixed input.
    std::optional<Bidegree> bidegree() const;

private:
    Terms terms_;
};

enum class RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
};

bool is_admissible(const LambdaMonomial& m);

/// Expansion of the inadmissible pair lambda_first lambda_second into admissible pairs.
/// Requires first > 2 * second; throws std::invalid_argument otherwise.
LambdaElement adem_expand_pair(int first, int second);

LambdaElement normalize(const LambdaMonomial& m, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);
LambdaElement normalize(const LambdaElement& e, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

LambdaElement product(const LambdaElement& a, const LambdaElement& b);

/// d(lambda_n) as a sum of admissible two-letter words.
LambdaElement generator_differential(int n);
LambdaElement differential(const LambdaElement& e);

/// The squaring operation lambda_t -> lambda_{2t+1} applied letterwise, then normalized.
LambdaElement sq0(const LambdaElement& e);

/// Admissible words of length s and degree d, in lexicographic order.
std::vector<LambdaMonomial> admissible_basis(int s, int d);

/// Drops the memoized rewrite tables (for tests and benchmarks).
void clear_lambda_caches();

} // namespace ltk

template <>
struct std::hash<ltk::LambdaMonomial> {
    std::size_t operator()(const ltk::LambdaMonomial& m) const noexcept;
};
