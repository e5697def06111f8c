#pragma once

#include "oracles.hpp"

#include "ltk/catalog.hpp"
#include "ltk/lambda.hpp"

#include <random>

namespace test_support {

inline oracle::Chain to_chain(const ltk::LambdaElement& e)
{
    oracle::Chain c;
    for (const auto& m : e)
        c.insert(oracle::Word(m.indices().begin(), m.indices().end()));
    return c;
}

inline ltk::LambdaElement from_chain(const oracle::Chain& c)
{
    ltk::LambdaElement e;
    for (const auto& w : c)
        e.toggle(ltk::LambdaMonomial(w));
    return e;
}

/// Sum of up to `terms` random words, all of one length.
inline ltk::LambdaElement random_element(std::mt19937& rng, int max_len, int max_index, int terms = 3)
{
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> count(1, terms);
    const int s = len(rng);
    ltk::LambdaElement e;
    for (int i = count(rng); i > 0; --i)
        e.toggle(ltk::LambdaMonomial(oracle::random_word(rng, s, max_index, s)));
    return e;
}

inline const ltk::Catalog& catalog()
{
    static const ltk::Catalog c = ltk::Catalog::load(LTK_TEST_CATALOG_DIR);
    return c;
}

} // namespace test_support
