#include "support.hpp"

#include "ltk/error.hpp"
#include "ltk/transfer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ltk;
using test_support::catalog;

TEST(Psi, BaseCaseAndSmallExamples)
{
    EXPECT_EQ(psi(GammaMonomial{3}), LambdaElement(LambdaMonomial{3}));
    EXPECT_EQ(psi(GammaMonomial{2, 1}), LambdaElement(LambdaMonomial{2, 1}));
    EXPECT_EQ(psi(GammaMonomial{1, 2}), (LambdaElement{LambdaMonomial{1, 2}, LambdaMonomial{2, 1}}));
    EXPECT_TRUE(psi(GammaElement(3)).is_zero());
}

TEST(Psi, DisplayedValuesForU24)
{
    const auto target = LambdaElement(LambdaMonomial{1, 7, 7, 5, 4});
    EXPECT_TRUE(psi(GammaMonomial{1, 15, 3, 3, 2}).is_zero());
    EXPECT_EQ(psi(GammaMonomial{1, 15, 3, 4, 1}), target);
    EXPECT_EQ(psi(GammaMonomial{1, 15, 5, 2, 1}),
              normalize(LambdaElement{LambdaMonomial{1, 15, 5, 2, 1}, LambdaMonomial{1, 15, 6, 1, 1}}));
    EXPECT_EQ(psi(GammaMonomial{1, 15, 5, 2, 1}), target);
    // The length-5 reading of the last displayed value.
    EXPECT_EQ(psi(GammaMonomial{1, 15, 6, 1, 1}), normalize(LambdaMonomial{1, 15, 6, 1, 1}));
    EXPECT_EQ(psi(catalog().at("u24").gamma()), normalize(LambdaMonomial{1, 15, 3, 3, 2}));
}

TEST(Psi, LinearAndBidegreePreserving)
{
    std::mt19937 rng(301);
    for (int trial = 0; trial < 100; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 5);
        const int d = static_cast<int>(rng() % 14);
        const auto basis = gamma_basis(s, d);
        GammaElement x(s), y(s);
        for (int i = 0; i < 3; ++i) {
            x.toggle(basis[rng() % basis.size()]);
            y.toggle(basis[rng() % basis.size()]);
        }
        ASSERT_EQ(psi(x + y), psi(x) + psi(y));
        const auto p = psi(x);
        if (!p.is_zero())
            ASSERT_EQ(*p.bidegree(), (Bidegree{s, d}));
    }
}

TEST(Psi, PrimitivesMapToCycles)
{
    LambdaHomology h;
    for (int s = 1; s <= 5; ++s)
        for (int d = 0; d <= (s == 5 ? 14 : 16); ++d)
            for (const auto& p : primitive_basis(s, d))
                ASSERT_TRUE(h.is_cycle(psi(p))) << "(" << s << "," << d << ")";
}

TEST(Psi, CatalogInputsMapToCycles)
{
    LambdaHomology h;
    for (const char* name : {"u14", "u20", "u24"})
        EXPECT_TRUE(h.is_cycle(psi(catalog().at(name).gamma()))) << name;
}

TEST(Psi, CacheClearingIsTransparent)
{
    const auto& u20 = catalog().at("u20").gamma();
    const auto before = psi(u20);
    clear_transfer_caches();
    EXPECT_EQ(psi(u20), before);
}

TEST(Sq0Family, Examples)
{
    const auto& c = catalog();
    for (int t = 0; t <= 4; ++t)
        EXPECT_EQ(sq0_family(c.at("h0").lambda(), t), c.at("h" + std::to_string(t)).lambda()) << t;
    EXPECT_EQ(sq0_family(c.at("c0").lambda(), 0), c.at("c0").lambda());
    const auto d1 = sq0_family(c.at("d0").lambda(), 1);
    ASSERT_FALSE(d1.is_zero());
    EXPECT_EQ(*d1.bidegree(), (Bidegree{4, 32}));
    EXPECT_THROW((void)sq0_family(c.at("h0").lambda(), -1), std::invalid_argument);
}

TEST(TransferImage, LowBidegrees)
{
    LambdaHomology h;
    const auto h0 = transfer_image_dim(1, 0, h);
    EXPECT_EQ(h0.dimension, 1u);
    ASSERT_EQ(h0.representatives.size(), 1u);
    EXPECT_EQ(h0.representatives[0], LambdaElement(LambdaMonomial{0}));

    const auto p9 = transfer_image_dim(5, 9, h);
    EXPECT_EQ(p9.primitive_count, 191u);
    EXPECT_EQ(p9.ext_dimension, 1u);
    EXPECT_EQ(p9.dimension, 0u);

    const auto d14 = transfer_image_dim(5, 14, h);
    EXPECT_EQ(d14.dimension, 1u);
    ASSERT_EQ(d14.representatives.size(), 1u);
    const auto h0d0 = product(LambdaElement(LambdaMonomial{0}), catalog().at("d0").lambda());
    EXPECT_TRUE(h.same_class(d14.representatives[0], h0d0).same);
}

TEST(FindPreimage, Examples)
{
    LambdaHomology h;
    const auto h0d0 = product(LambdaElement(LambdaMonomial{0}), catalog().at("d0").lambda());
    const auto r = find_preimage(5, h0d0, h);
    ASSERT_TRUE(r.preimage.has_value());
    EXPECT_FALSE(r.target_is_boundary);
    EXPECT_TRUE(is_primitive(*r.preimage).primitive);
    EXPECT_TRUE(h.same_class(psi(*r.preimage), h0d0).same);
    EXPECT_TRUE(h.same_class(psi(catalog().at("u14").gamma()), psi(*r.preimage)).same);

    const auto boundary = differential(LambdaElement(LambdaMonomial{0, 2, 4}));
    ASSERT_FALSE(boundary.is_zero());
    const auto b = find_preimage(4, boundary, h);
    EXPECT_TRUE(b.target_is_boundary);
    ASSERT_TRUE(b.preimage.has_value());
    EXPECT_TRUE(b.preimage->is_zero());

    EXPECT_THROW((void)find_preimage(1, LambdaElement(LambdaMonomial{2}), h), NotACycleError);
}

TEST(FindPreimage, NoPreimageAtRankFiveDegreeNine)
{
    LambdaHomology h;
    // A cycle representing the nonzero class at (5, 9).
    auto sl = h.slice({5, 9});
    std::optional<LambdaElement> rep;
    for (const auto& v : kernel_basis(sl->differential_out().matrix)) {
        const auto e = sl->element(v);
        if (h.class_nonzero(e)) {
            rep = e;
            break;
        }
    }
    ASSERT_TRUE(rep.has_value());
    const auto r = find_preimage(5, *rep, h);
    EXPECT_FALSE(r.preimage.has_value());
    EXPECT_FALSE(r.target_is_boundary);
}

TEST(Verify, ZeroInputIsTrivial)
{
    LambdaHomology h;
    DetectionRequest req;
    req.input_name = "zero";
    req.input = GammaElement(5);
    const auto r = verify_detection(req, h);
    EXPECT_EQ(r.verdict, Verdict::Trivial);
    EXPECT_STREQ(to_string(r.verdict), "trivial");
}

TEST(Verify, CatalogClassesVerify)
{
    LambdaHomology h;
    for (const auto& cls : detection_classes()) {
        const auto r = verify_detection(catalog().detection_request(cls), h);
        EXPECT_EQ(r.verdict, Verdict::Verified) << cls;
        EXPECT_TRUE(r.failed_checks.empty()) << cls;
        ASSERT_TRUE(r.witness.has_value()) << cls;
        EXPECT_TRUE(r.witness_reverified) << cls;
        EXPECT_EQ(r.ext_dimension, std::optional<std::size_t>(1)) << cls;
    }
}

TEST(Verify, WrongTargetIsFalsified)
{
    LambdaHomology h;
    auto req = catalog().detection_request("h2e0");
    req.target = product(LambdaElement(LambdaMonomial{0}), catalog().at("d0").lambda());
    const auto r = verify_detection(req, h);
    EXPECT_EQ(r.verdict, Verdict::Falsified);
    EXPECT_NE(std::find(r.failed_checks.begin(), r.failed_checks.end(), "target_bidegree"), r.failed_checks.end());
}

TEST(Verify, ReferenceWitnesses)
{
    LambdaHomology h;
    const auto& c = catalog();
    const auto r1 = verify_detection(c.detection_request("h0d0"), h);
    ASSERT_TRUE(r1.reference_witness.has_value());
    EXPECT_FALSE(r1.reference_witness->valid);
    const auto r2 = verify_detection(c.detection_request("h2e0"), h);
    ASSERT_TRUE(r2.reference_witness.has_value());
    EXPECT_TRUE(r2.reference_witness->valid);

    const auto u14 = psi(c.at("u14").gamma());
    const auto h0d0 = product(LambdaElement(LambdaMonomial{0}), c.at("d0").lambda());
    EXPECT_EQ(differential(c.at("witness_i_corrected").lambda()), normalize(u14 + h0d0));
    EXPECT_EQ(normalize(differential(c.at("witness_i").lambda()) + u14 + h0d0),
              normalize(LambdaElement{LambdaMonomial{0, 3, 3, 5, 3}, LambdaMonomial{0, 3, 5, 3, 3}}));
}
