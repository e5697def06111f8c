#include "ltk/homology.hpp"

#include "ltk/error.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ltk {

namespace {

std::string to_string(Bidegree b) { return "(" + std::to_string(b.s) + ", " + std::to_string(b.d) + ")"; }

Bidegree require_homogeneous(const LambdaElement& e, const char* what)
{
    if (!e.is_homogeneous())
        throw NotHomogeneousError(std::string(what) + ": element is not homogeneous");
    return e.is_zero() ? Bidegree{} : *e.bidegree();
}

} // namespace

BidegreeSlice::BidegreeSlice(std::shared_ptr<const DifferentialMatrix> out, std::shared_ptr<const DifferentialMatrix> in)
    : out_(std::move(out)), in_(std::move(in))
{
    const auto& basis = out_->source_basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index_.emplace(basis[i], i);
}

std::optional<std::size_t> BidegreeSlice::index_of(const LambdaMonomial& m) const
{
    if (auto it = index_.find(m); it != index_.end())
        return it->second;
    return std::nullopt;
}

BitVector BidegreeSlice::coordinates(const LambdaElement& e) const
{
    BitVector v(basis().size());
    for (const auto& m : e) {
        auto i = index_of(m);
        if (!i)
            throw std::invalid_argument("element term is not an admissible word of bidegree " + to_string(bidegree()));
        v.set(*i);
    }
    return v;
}

LambdaElement BidegreeSlice::element(const BitVector& coords) const
{
    LambdaElement e;
    for (std::size_t i : coords.support())
        e.toggle(basis().at(i));
    return e;
}

std::shared_ptr<const DifferentialMatrix> LambdaHomology::differential_matrix(Bidegree source)
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = matrices_.find(source); it != matrices_.end())
            return it->second;
    }

    auto dm = std::make_shared<DifferentialMatrix>();
    dm->source = source;
    dm->source_basis = admissible_basis(source.s, source.d);
    if (source.d >= 1)
        dm->target_basis = admissible_basis(source.s + 1, source.d - 1);
    if (dm->source_basis.size() > max_basis_ || dm->target_basis.size() > max_basis_)
        throw ResourceLimitError("Lambda basis near bidegree " + to_string(source) + " exceeds limit of "
                                 + std::to_string(max_basis_) + " words");

    std::map<LambdaMonomial, std::size_t> target_index;
    for (std::size_t i = 0; i < dm->target_basis.size(); ++i)
        target_index.emplace(dm->target_basis[i], i);

    dm->matrix = BitMatrix(dm->target_basis.size(), dm->source_basis.size());
    for (std::size_t c = 0; c < dm->source_basis.size(); ++c) {
        for (const auto& m : differential(LambdaElement(dm->source_basis[c])))
            dm->matrix.set(target_index.at(m), c);
    }
    dm->rank = rank(dm->matrix);

    std::lock_guard lock(mutex_);
    matrices_[source] = dm;
    return dm;
}

std::shared_ptr<const BidegreeSlice> LambdaHomology::slice(Bidegree b)
{
    if (b.s < 0 || b.d < 0)
        throw std::invalid_argument("slice: negative bidegree " + to_string(b));
    {
        std::lock_guard lock(mutex_);
        if (auto it = slices_.find(b); it != slices_.end())
            return it->second;
    }
    auto out = differential_matrix(b);
    std::shared_ptr<const DifferentialMatrix> in;
    if (b.s >= 1) {
        in = differential_matrix({b.s - 1, b.d + 1});
    } else {
        auto empty = std::make_shared<DifferentialMatrix>();
        empty->source = {b.s - 1, b.d + 1};
        empty->target_basis = out->source_basis;
        empty->matrix = BitMatrix(out->source_basis.size(), 0);
        in = std::move(empty);
    }
    auto s = std::make_shared<const BidegreeSlice>(std::move(out), std::move(in));
    std::lock_guard lock(mutex_);
    slices_[b] = s;
    return s;
}

std::shared_ptr<const Elimination> LambdaHomology::boundary_solver(Bidegree target)
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = solvers_.find(target); it != solvers_.end())
            return it->second;
    }
    auto sl = slice(target);
    auto solver = std::make_shared<const Elimination>(sl->differential_in().matrix, true);
    std::lock_guard lock(mutex_);
    solvers_[target] = solver;
    return solver;
}

bool LambdaHomology::is_cycle(const LambdaElement& e) const
{
    require_homogeneous(e, "is_cycle");
    return differential(e).is_zero();
}

void LambdaHomology::require_cycle(const LambdaElement& e, const char* what) const
{
    if (!is_cycle(e))
        throw NotACycleError(std::string(what) + ": element is not a cycle");
}

std::optional<LambdaElement> LambdaHomology::boundary_witness(const LambdaElement& r)
{
    require_homogeneous(r, "boundary_witness");
    const LambdaElement target = normalize(r);
    if (target.is_zero())
        return LambdaElement{};
    const Bidegree b = *target.bidegree();
    if (b.s == 0)
        return std::nullopt;

    auto sl = slice(b);
    auto x = boundary_solver(b)->solve(sl->coordinates(target));
    if (!x)
        return std::nullopt;

    LambdaElement witness;
    for (std::size_t i : x->support())
        witness.toggle(sl->differential_in().source_basis.at(i));
    if (differential(witness) != target)
        throw std::logic_error("boundary witness failed re-verification at " + to_string(b));
    return witness;
}

std::size_t LambdaHomology::ext_dimension(int s, int d)
{
    if (s < 0 || d < 0)
        throw std::invalid_argument("ext_dimension: negative bidegree");
    auto sl = slice({s, d});
    const std::size_t n = sl->basis().size();
    return n - sl->differential_out().rank - sl->differential_in().rank;
}

ClassComparison LambdaHomology::same_class(const LambdaElement& e1, const LambdaElement& e2)
{
    const Bidegree b1 = require_homogeneous(e1, "same_class");
    const Bidegree b2 = require_homogeneous(e2, "same_class");
    if (!e1.is_zero() && !e2.is_zero() && b1 != b2)
        throw NotHomogeneousError("same_class: bidegrees differ " + to_string(b1) + " vs " + to_string(b2));
    require_cycle(e1, "same_class");
    require_cycle(e2, "same_class");

    auto w = boundary_witness(normalize(e1 + e2));
    if (!w)
        return {false, std::nullopt};
    return {true, std::move(w)};
}

bool LambdaHomology::class_nonzero(const LambdaElement& e)
{
    require_homogeneous(e, "class_nonzero");
    require_cycle(e, "class_nonzero");
    return !boundary_witness(e).has_value();
}

HomologySpan LambdaHomology::span_in_homology(Bidegree b, std::span<const LambdaElement> cycles)
{
    auto sl = slice(b);
    const BitMatrix& in = sl->differential_in().matrix;
    std::vector<BitVector> columns;
    columns.reserve(cycles.size());
    for (const auto& c : cycles) {
        LambdaElement n = normalize(c);
        if (!n.is_zero() && *n.bidegree() != b)
            throw NotHomogeneousError("span_in_homology: element outside bidegree " + to_string(b));
        columns.push_back(sl->coordinates(n));
    }
    const BitMatrix combined = in.concatenated(BitMatrix::from_columns(in.rows(), columns));
    Elimination e(combined);

    HomologySpan out;
    for (std::size_t c : e.pivot_columns()) {
        if (c >= in.cols())
            out.independent.push_back(c - in.cols());
    }
    out.dimension = out.independent.size();
    return out;
}

} // namespace ltk
