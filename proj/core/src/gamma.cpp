#include "ltk/gamma.hpp"

#include "ltk/error.hpp"
#include "ltk/f2.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ltk {

GammaMonomial::GammaMonomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    if (exponents_.empty())
        throw std::invalid_argument("gamma monomial must have rank >= 1");
    for (int t : exponents_)
        if (t < 0)
            throw std::invalid_argument("divided power exponent must be non-negative, got " + std::to_string(t));
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

GammaMonomial::GammaMonomial(std::initializer_list<int> exponents) : GammaMonomial(std::vector<int>(exponents)) {}

GammaMonomial GammaMonomial::tail() const
{
    if (exponents_.size() < 2)
        throw std::logic_error("tail of a rank-1 gamma monomial");
    return GammaMonomial(std::vector<int>(exponents_.begin() + 1, exponents_.end()));
}

GammaElement::GammaElement(int rank) : rank_(rank)
{
    if (rank < 1)
        throw std::invalid_argument("gamma element must have rank >= 1");
}

GammaElement::GammaElement(int rank, std::initializer_list<GammaMonomial> terms) : GammaElement(rank)
{
    for (const auto& m : terms)
        toggle(m);
}

GammaElement::GammaElement(const GammaMonomial& m) : GammaElement(m.rank()) { terms_.insert(m); }

void GammaElement::toggle(const GammaMonomial& m)
{
    if (m.rank() != rank_)
        throw std::invalid_argument("gamma monomial of rank " + std::to_string(m.rank())
                                    + " added to element of rank " + std::to_string(rank_));
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

GammaElement& GammaElement::operator+=(const GammaElement& other)
{
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& m : other.terms_)
        toggle(m);
    return *this;
}

bool GammaElement::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = terms_.begin()->degree();
    for (const auto& m : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

int GammaElement::degree() const
{
    if (terms_.empty())
        return 0;
    if (!is_homogeneous())
        throw NotHomogeneousError("gamma element mixes degrees");
    return terms_.begin()->degree();
}

namespace {

// Distributes `remaining` over the factors k.. with each factor taking i_k where 2 i_k <= t_k
// and C(t_k - i_k, i_k) is odd.
void cartan(std::span<const int> t, std::size_t k, int remaining, std::vector<int>& current, GammaElement& out)
{
    if (k == t.size()) {
        if (remaining == 0)
            out.toggle(GammaMonomial(current));
        return;
    }
    int capacity = 0;
    for (std::size_t j = k + 1; j < t.size(); ++j)
        capacity += t[j] / 2;
    for (int i = 0; i <= remaining && 2 * i <= t[k]; ++i) {
        if (remaining - i > capacity)
            continue;
        if (!binom_mod2(t[k] - i, i))
            continue;
        current[k] = t[k] - i;
        cartan(t, k + 1, remaining - i, current, out);
    }
    current[k] = t[k];
}

} // namespace

GammaElement sq_right(const GammaMonomial& m, int i)
{
    if (i < 0)
        throw std::invalid_argument("sq_right: negative square");
    GammaElement out(m.rank());
    if (2 * i > m.degree())
        return out;
    std::vector<int> current(m.exponents().begin(), m.exponents().end());
    cartan(m.exponents(), 0, i, current, out);
    return out;
}

GammaElement sq_right(const GammaElement& e, int i)
{
    GammaElement out(e.rank());
    for (const auto& m : e)
        out += sq_right(m, i);
    return out;
}

PrimitivityEvidence is_primitive(const GammaElement& e)
{
    const int d = e.degree();
    PrimitivityEvidence ev;
    int square = 1;
    bool past_cutoff = false;
    while (!past_cutoff) {
        past_cutoff = 2 * square > d;
        SquareCheck check{square, sq_right(e, square)};
        if (!check.image.is_zero())
            ev.primitive = false;
        ev.checks.push_back(std::move(check));
        square *= 2;
    }
    return ev;
}

namespace {

void enumerate_exponents(std::vector<int>& prefix, int s, int remaining, std::vector<GammaMonomial>& out)
{
    if (static_cast<int>(prefix.size()) == s - 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int t = remaining; t >= 0; --t) {
        prefix.push_back(t);
        enumerate_exponents(prefix, s, remaining - t, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<GammaMonomial> gamma_basis(int s, int d)
{
    if (s < 1)
        throw std::invalid_argument("gamma_basis: rank must be >= 1");
    std::vector<GammaMonomial> out;
    if (d < 0)
        return out;
    std::vector<int> prefix;
    enumerate_exponents(prefix, s, d, out);
    return out;
}

std::vector<GammaElement> primitive_basis(int s, int d, std::size_t max_basis)
{
    const auto basis = gamma_basis(s, d);
    if (basis.size() > max_basis)
        throw ResourceLimitError("divided power basis in rank " + std::to_string(s) + ", degree " + std::to_string(d)
                                 + " has " + std::to_string(basis.size()) + " monomials (limit "
                                 + std::to_string(max_basis) + ")");

    // Stack the matrices of Sq^{2^k} for 2^{k+1} <= d; columns follow `basis`.
    BitMatrix stacked(0, basis.size());
    for (int square = 1; 2 * square <= d; square *= 2) {
        const auto targets = gamma_basis(s, d - square);
        std::map<GammaMonomial, std::size_t> index;
        for (std::size_t i = 0; i < targets.size(); ++i)
            index.emplace(targets[i], i);
        BitMatrix block(targets.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (const auto& m : sq_right(basis[c], square))
                block.set(index.at(m), c);
        stacked = stacked.stacked(block);
    }

    std::vector<GammaElement> out;
    for (const auto& v : kernel_basis(stacked)) {
        GammaElement e(s);
        for (std::size_t i : v.support())
            e.toggle(basis[i]);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace ltk
