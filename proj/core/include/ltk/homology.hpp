#pragma once

// Cohomology of the Lambda algebra: H^{s,d}(Lambda) = Ext_A^{s, s+d}(F2, F2).
//
// Classes are always carried by explicit normalized cycles; every class-level
// question is answered by rank or solve calls on cached differential matrices.

#include "ltk/f2.hpp"
#include "ltk/lambda.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace ltk {

/// The differential out of one bidegree, as a matrix between admissible bases.
struct DifferentialMatrix {
    Bidegree source;
    std::vector<LambdaMonomial> source_basis;
    std::vector<LambdaMonomial> target_basis;
    BitMatrix matrix; // rows: target_basis, cols: source_basis
    std::size_t rank = 0;
};

class BidegreeSlice {
public:
    BidegreeSlice(std::shared_ptr<const DifferentialMatrix> out, std::shared_ptr<const DifferentialMatrix> in);

    Bidegree bidegree() const noexcept { return out_->source; }
    const std::vector<LambdaMonomial>& basis() const noexcept { return out_->source_basis; }
    /// d : (s, d) -> (s+1, d-1); columns follow basis().
    const DifferentialMatrix& differential_out() const noexcept { return *out_; }
    /// d : (s-1, d+1) -> (s, d); rows follow basis().
    const DifferentialMatrix& differential_in() const noexcept { return *in_; }

    std::optional<std::size_t> index_of(const LambdaMonomial& m) const;
    /// Coordinates of a normalized element of this bidegree.
    BitVector coordinates(const LambdaElement& e) const;
    LambdaElement element(const BitVector& coords) const;

private:
    std::shared_ptr<const DifferentialMatrix> out_;
    std::shared_ptr<const DifferentialMatrix> in_;
    std::map<LambdaMonomial, std::size_t> index_;
};

struct ClassComparison {
    bool same = false;
    /// On equality, b with d(b) = e1 + e2 (zero when e1 == e2).
    std::optional<LambdaElement> witness;
};

struct HomologySpan {
    std::size_t dimension = 0;
    /// Positions (into the input list) of a subset whose classes form a basis of the span.
    std::vector<std::size_t> independent;
};

class LambdaHomology {
public:
    static constexpr std::size_t kDefaultMaxBasis = 200'000;

    explicit LambdaHomology(std::size_t max_basis = kDefaultMaxBasis) : max_basis_(max_basis) {}

    std::size_t max_basis() const noexcept { return max_basis_; }

    std::shared_ptr<const BidegreeSlice> slice(Bidegree b);

    bool is_cycle(const LambdaElement& e) const;
    std::optional<LambdaElement> boundary_witness(const LambdaElement& r);
    std::size_t ext_dimension(int s, int d);
    ClassComparison same_class(const LambdaElement& e1, const LambdaElement& e2);
    bool class_nonzero(const LambdaElement& e);

    /// Dimension of the subspace of H^{b} spanned by the classes of the given cycles.
    HomologySpan span_in_homology(Bidegree b, std::span<const LambdaElement> cycles);

private:
    std::shared_ptr<const DifferentialMatrix> differential_matrix(Bidegree source);
    std::shared_ptr<const Elimination> boundary_solver(Bidegree target);
    void require_cycle(const LambdaElement& e, const char* what) const;

    std::size_t max_basis_;
    std::mutex mutex_;
    std::map<Bidegree, std::shared_ptr<const DifferentialMatrix>> matrices_;
    std::map<Bidegree, std::shared_ptr<const BidegreeSlice>> slices_;
    std::map<Bidegree, std::shared_ptr<const Elimination>> solvers_;
};

} // namespace ltk
