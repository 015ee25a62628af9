#include <gtest/gtest.h>

#include <filesystem>

#include "volrig/errors.hpp"
#include "volrig/io.hpp"

using namespace volrig;

TEST(Json, RationalRoundTrip)
{
    for (const Rational& x : {Rational(0), Rational(-7, 3), Rational(123456789, 1000)})
        EXPECT_EQ(rational_from_json(to_json(x)), x);
    EXPECT_EQ(rational_from_json(Json(5)), 5);
    EXPECT_THROW(rational_from_json(Json(0.5)), Error);
}

TEST(Json, HypergraphRoundTrip)
{
    const Hypergraph b = bipyramid(8);
    EXPECT_EQ(hypergraph_from_json(to_json(b)), b);
    const Json unsorted = Json::parse(R"({"d": 2, "n": 4, "hyperedges": [[3,2,1],[4,1,2]]})");
    EXPECT_EQ(to_json(hypergraph_from_json(unsorted))["hyperedges"], Json::parse("[[1,2,3],[1,2,4]]"));
    EXPECT_THROW(hypergraph_from_json(Json::parse(R"({"d": 2, "hyperedges": []})")), Error);
}

TEST(Json, FrameworkRoundTrip)
{
    const Framework f{bipyramid(6), random_generic_configuration(2, 6, 3)};
    const Framework back = framework_from_json(to_json(f));
    EXPECT_EQ(back.hypergraph, f.hypergraph);
    EXPECT_EQ(back.configuration, f.configuration);
    Json wrong = to_json(f);
    wrong["points"].erase(0);
    EXPECT_THROW(framework_from_json(wrong), Error);
}

TEST(Json, ConfigurationAcceptsIntegersAndInfersDimension)
{
    const Configuration p = configuration_from_json(Json::parse(R"({"points": [[0, "1/2"], [3, 4]]})"));
    EXPECT_EQ(p.dimension(), 2);
    EXPECT_EQ(p.point(1), (Point{0, Rational(1, 2)}));
    EXPECT_THROW(configuration_from_json(Json::parse(R"({"points": [[0, 1], [3]]})")), Error);
}

TEST(Json, ReportShapes)
{
    const auto analysis = analyze_bipyramid(random_pinned_configuration(2, 7, 1));
    const Json j = to_json(analysis);
    for (const char* key : {"n", "degree", "coefficients", "real_roots", "classes", "excluded_roots",
                            "discriminant_sign"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(to_json(analyze_bipyramid(random_pinned_configuration(2, 6, 1)))["discriminant_sign"], nullptr);

    const Json b = to_json(combined_bounds(2, 6, true, true, false));
    EXPECT_EQ(b["upper"], 5);
    EXPECT_EQ(b["rules"], Json::parse(R"(["Eq1","Catalan"])"));

    const Json r = to_json(rank_report(bipyramid(6), random_generic_configuration(2, 6, 2)));
    for (const char* key : {"rank", "max_rank", "nullity", "trivial_dim", "nontrivial_flex_dim"})
        EXPECT_TRUE(r.contains(key)) << key;
}

TEST(Json, LargeIntegersBecomeStrings)
{
    Integer big = 1;
    for (int i = 0; i < 30; ++i)
        big *= 10;
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(to_json(Integer(42)), 42);
}

TEST(Json, Files)
{
    const auto path = std::filesystem::temp_directory_path() / "volrig_io_test.json";
    write_json_file(path, to_json(bipyramid(5)));
    EXPECT_EQ(hypergraph_from_json(read_json_file(path)), bipyramid(5));
    std::filesystem::remove(path);
    EXPECT_THROW(read_json_file(path), Error);
    const auto pentagonal = configuration_from_json(read_json_file(std::filesystem::path(VOLRIG_TEST_DATA) / "pentagonal_p.json"));
    EXPECT_EQ(pentagonal.size(), 7);
}
