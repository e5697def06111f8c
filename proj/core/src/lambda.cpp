#include "ltk/lambda.hpp"

#include "ltk/error.hpp"
#include "ltk/f2.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace ltk {

LambdaMonomial::LambdaMonomial(std::vector<int> indices) : indices_(std::move(indices))
{
    for (int t : indices_)
        if (t < 0)
            throw std::invalid_argument("lambda index must be non-negative, got " + std::to_string(t));
    degree_ = std::accumulate(indices_.begin(), indices_.end(), 0);
}

LambdaMonomial::LambdaMonomial(std::initializer_list<int> indices) : LambdaMonomial(std::vector<int>(indices)) {}

LambdaMonomial concatenate(const LambdaMonomial& a, const LambdaMonomial& b)
{
    LambdaMonomial out;
    out.indices_.reserve(a.indices_.size() + b.indices_.size());
    out.indices_ = a.indices_;
    out.indices_.insert(out.indices_.end(), b.indices_.begin(), b.indices_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

LambdaElement::LambdaElement(LambdaMonomial m) { terms_.insert(std::move(m)); }

LambdaElement::LambdaElement(std::initializer_list<LambdaMonomial> terms)
{
    for (const auto& m : terms)
        toggle(m);
}

void LambdaElement::toggle(const LambdaMonomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

void LambdaElement::toggle(LambdaMonomial&& m)
{
    auto [it, inserted] = terms_.insert(std::move(m));
    if (!inserted)
        terms_.erase(it);
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& other)
{
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& m : other.terms_)
        toggle(m);
    return *this;
}

bool LambdaElement::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const Bidegree first = terms_.begin()->bidegree();
    for (const auto& m : terms_)
        if (m.bidegree() != first)
            return false;
    return true;
}

std::optional<Bidegree> LambdaElement::bidegree() const
{
    if (terms_.empty())
        return std::nullopt;
    if (!is_homogeneous())
        throw NotHomogeneousError("lambda element mixes bidegrees");
    return terms_.begin()->bidegree();
}

bool is_admissible(const LambdaMonomial& m)
{
    const auto t = m.indices();
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k] > 2 * t[k + 1])
            return false;
    return true;
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

PairList expand_pair_uncached(int first, int second)
{
    const int n = first - 2 * second - 1;
    PairList out;
    for (int j = 0; 2 * j + 1 <= n; ++j)
        if (binom_mod2(n - j - 1, j))
            out.emplace_back(2 * second + 1 + j, second + n - j);
    return out;
}

class RewriteTables {
public:
    const PairList& pair(int first, int second)
    {
        const std::pair key{first, second};
        {
            std::shared_lock lock(pair_mutex_);
            if (auto it = pairs_.find(key); it != pairs_.end())
                return it->second;
        }
        PairList value = expand_pair_uncached(first, second);
        std::unique_lock lock(pair_mutex_);
        return pairs_.try_emplace(key, std::move(value)).first->second;
    }

    std::optional<LambdaElement> lookup(const LambdaMonomial& w, RewriteStrategy strategy)
    {
        auto& table = words_[static_cast<int>(strategy)];
        std::shared_lock lock(word_mutex_);
        if (auto it = table.find(w); it != table.end())
            return it->second;
        return std::nullopt;
    }

    void store(const LambdaMonomial& w, RewriteStrategy strategy, const LambdaElement& value)
    {
        auto& table = words_[static_cast<int>(strategy)];
        std::unique_lock lock(word_mutex_);
        table.try_emplace(w, value);
    }

    void clear()
    {
        std::unique_lock l1(pair_mutex_);
        std::unique_lock l2(word_mutex_);
        pairs_.clear();
        for (auto& t : words_)
            t.clear();
    }

private:
    std::shared_mutex pair_mutex_;
    std::map<std::pair<int, int>, PairList> pairs_;
    std::shared_mutex word_mutex_;
    std::unordered_map<LambdaMonomial, LambdaElement> words_[2];
};

RewriteTables& tables()
{
    static RewriteTables instance;
    return instance;
}

/// Position k of the first (or last) inadmissible pair (t_k, t_{k+1}), or -1.
int find_inadmissible(std::span<const int> t, RewriteStrategy strategy)
{
    const int n = static_cast<int>(t.size());
    if (strategy == RewriteStrategy::LeftmostFirst) {
        for (int k = 0; k + 1 < n; ++k)
            if (t[k] > 2 * t[k + 1])
                return k;
    } else {
        for (int k = n - 2; k >= 0; --k)
            if (t[k] > 2 * t[k + 1])
                return k;
    }
    return -1;
}

LambdaElement normalize_word(const LambdaMonomial& w, RewriteStrategy strategy)
{
    const int k = find_inadmissible(w.indices(), strategy);
    if (k < 0)
        return LambdaElement(w);
    if (auto cached = tables().lookup(w, strategy))
        return *std::move(cached);

    LambdaElement result;
    std::vector<int> letters(w.indices().begin(), w.indices().end());
    const PairList& expansion = tables().pair(letters[k], letters[k + 1]);
    for (const auto& [a, b] : expansion) {
        letters[k] = a;
        letters[k + 1] = b;
        result += normalize_word(LambdaMonomial(letters), strategy);
    }
    tables().store(w, strategy, result);
    return result;
}

} // namespace

LambdaElement adem_expand_pair(int first, int second)
{
    if (first < 0 || second < 0)
        throw std::invalid_argument("adem_expand_pair: negative index");
    if (first <= 2 * second)
        throw std::invalid_argument("adem_expand_pair: pair (" + std::to_string(first) + ", "
                                    + std::to_string(second) + ") is admissible");
    LambdaElement out;
    for (const auto& [a, b] : tables().pair(first, second))
        out.toggle(LambdaMonomial{a, b});
    return out;
}

LambdaElement normalize(const LambdaMonomial& m, RewriteStrategy strategy) { return normalize_word(m, strategy); }

LambdaElement normalize(const LambdaElement& e, RewriteStrategy strategy)
{
    LambdaElement out;
    for (const auto& m : e)
        out += normalize_word(m, strategy);
    return out;
}

LambdaElement product(const LambdaElement& a, const LambdaElement& b)
{
    LambdaElement raw;
    for (const auto& x : a)
        for (const auto& y : b)
            raw.toggle(concatenate(x, y));
    return normalize(raw);
}

LambdaElement generator_differential(int n)
{
    if (n < 0)
        throw std::invalid_argument("generator_differential: negative index");
    LambdaElement out;
    for (int j = 1; 2 * j <= n; ++j)
        if (binom_mod2(n - j, j))
            out.toggle(LambdaMonomial{j - 1, n - j});
    return out;
}

LambdaElement differential(const LambdaElement& e)
{
    LambdaElement raw;
    for (const auto& m : e) {
        const auto t = m.indices();
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
            for (const auto& piece : generator_differential(t[pos])) {
                std::vector<int> word(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos));
                word.push_back(piece[0]);
                word.push_back(piece[1]);
                word.insert(word.end(), t.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.end());
                raw.toggle(LambdaMonomial(std::move(word)));
            }
        }
    }
    return normalize(raw);
}

LambdaElement sq0(const LambdaElement& e)
{
    LambdaElement raw;
    for (const auto& m : e) {
        std::vector<int> word(m.indices().begin(), m.indices().end());
        for (int& t : word)
            t = 2 * t + 1;
        raw.toggle(LambdaMonomial(std::move(word)));
    }
    return normalize(raw);
}

namespace {

// Smallest possible sum of `count` further letters after a letter `prev` (each next >= ceil(prev/2)).
int min_tail(int prev, int count)
{
    int sum = 0;
    for (int i = 0; i < count; ++i) {
        prev = (prev + 1) / 2;
        sum += prev;
    }
    return sum;
}

void enumerate_admissible(std::vector<int>& prefix, int remaining_letters, int remaining_degree,
                          std::vector<LambdaMonomial>& out)
{
    if (remaining_letters == 0) {
        if (remaining_degree == 0)
            out.emplace_back(prefix);
        return;
    }
    const int lo = prefix.empty() ? 0 : (prefix.back() + 1) / 2;
    for (int t = lo; t <= remaining_degree; ++t) {
        if (t + min_tail(t, remaining_letters - 1) > remaining_degree)
            break;
        if (remaining_letters == 1 && t != remaining_degree)
            continue;
        prefix.push_back(t);
        enumerate_admissible(prefix, remaining_letters - 1, remaining_degree - t, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<LambdaMonomial> admissible_basis(int s, int d)
{
    std::vector<LambdaMonomial> out;
    if (s < 0 || d < 0)
        return out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(s));
    enumerate_admissible(prefix, s, d, out);
    return out;
}

void clear_lambda_caches() { tables().clear(); }

} // namespace ltk

std::size_t std::hash<ltk::LambdaMonomial>::operator()(const ltk::LambdaMonomial& m) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(m.length());
    for (int t : m.indices())
        h = (h ^ static_cast<std::size_t>(t)) * 0x100000001b3ULL;
    return h;
}
