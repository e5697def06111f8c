#include "support.hpp"

#include "ltk/catalog.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace ltk;
using test_support::catalog;

TEST(Catalog, LoadsAllEntries)
{
    const auto& c = catalog();
    for (const char* name : {"h0", "h1", "h2", "h3", "h4", "c0", "d0", "e0", "e0_lin", "g1", "u14", "u20", "u24",
                             "witness_i", "witness_i_corrected", "witness_ii"})
        EXPECT_TRUE(c.contains(name)) << name;
    EXPECT_EQ(c.at("d0").bidegree, (Bidegree{4, 14}));
    EXPECT_EQ(c.at("u20").bidegree, (Bidegree{5, 20}));
    EXPECT_EQ(c.at("u14").gamma().size(), 36u);
    EXPECT_EQ(c.at("u20").gamma().size(), 44u);
    EXPECT_EQ(c.at("u24").gamma().size(), 4u);
    EXPECT_THROW((void)c.at("nope"), std::out_of_range);
    EXPECT_THROW((void)c.at("u14").lambda(), std::invalid_argument);
}

TEST(Catalog, ClassEntriesAreCycles)
{
    LambdaHomology h;
    EXPECT_TRUE(catalog().validate(h).empty());
}

TEST(Catalog, TwoRepresentativesOfE0AreHomologous)
{
    LambdaHomology h;
    const auto cmp = h.same_class(catalog().at("e0").lambda(), catalog().at("e0_lin").lambda());
    EXPECT_TRUE(cmp.same);
    EXPECT_TRUE(h.class_nonzero(catalog().at("e0_lin").lambda()));
}

TEST(Catalog, DetectionRequests)
{
    const auto& c = catalog();
    EXPECT_EQ(detection_classes().size(), 3u);
    const auto r = c.detection_request("h1h4c0");
    EXPECT_EQ(r.input_name, "u24");
    ASSERT_TRUE(r.expected_psi.has_value());
    EXPECT_EQ(*r.expected_psi, normalize(LambdaMonomial{1, 15, 3, 3, 2}));
    EXPECT_THROW((void)c.detection_request("h5"), std::invalid_argument);
}

TEST(Catalog, RejectsWrongBidegreeAndMissingDirectory)
{
    const auto dir = std::filesystem::temp_directory_path() / "ltk_catalog_test_bad";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "bad.f2elt");
        f << "name: bad\nkind: lambda\nbidegree: 3 9\nL[3,3,2]\n";
    }
    EXPECT_THROW((void)Catalog::load(dir), std::invalid_argument);
    std::filesystem::remove_all(dir);
    EXPECT_THROW((void)Catalog::load(dir), std::runtime_error);
}

TEST(Catalog, EnvironmentOverridesDefaultDirectory)
{
    ::setenv("LTK_CATALOG", "/tmp/somewhere", 1);
    EXPECT_EQ(Catalog::default_directory(), std::filesystem::path("/tmp/somewhere"));
    ::unsetenv("LTK_CATALOG");
    EXPECT_TRUE(std::filesystem::is_directory(Catalog::default_directory()));
}
