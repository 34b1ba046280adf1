#include <fstream>

#include <gtest/gtest.h>

#include "toric/toric.hpp"

using namespace toric;

TEST(Json, FanRoundTrip)
{
    for (const auto& e : corpus()) {
        Json j = fan_to_json(e.fan);
        EXPECT_EQ(fan_from_json(j), e.fan) << e.id;
        EXPECT_EQ(fan_from_json(Json::parse(j.dump())), e.fan) << e.id;
    }
}

TEST(Json, OneBasedConesOnDisk)
{
    Json j = fan_to_json(projective_space(2));
    EXPECT_EQ(j.dump(), R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[1,2],[1,3],[2,3]]})");
}

TEST(Json, BigIntegersAsStrings)
{
    Int big("123456789012345678901234567890");
    EXPECT_EQ(int_to_json(big), Json("123456789012345678901234567890"));
    EXPECT_EQ(int_from_json(Json("123456789012345678901234567890"), "x"), big);
    EXPECT_EQ(int_from_json(Json("-5"), "x"), -5);
    EXPECT_EQ(int_to_json(Int(-7)), Json(-7));
    EXPECT_THROW(int_from_json(Json("12a"), "x"), ParseError);
    EXPECT_THROW(int_from_json(Json(1.5), "x"), ParseError);
}

TEST(Json, ParseErrorsCarryPosition)
{
    try {
        parse_json_text("{\"dim\": 2, \"rays\": [[1,0]", "input");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("at byte"), std::string::npos);
    }
    EXPECT_THROW(fan_from_json(Json::parse(R"({"rays": []})")), ParseError);
    EXPECT_THROW(fan_from_json(Json::parse(R"({"dim": 2, "rays": [[1, 0.5]], "max_cones": []})")), ParseError);
    EXPECT_THROW(fan_from_json(Json::parse(R"({"dim": 2, "rays": [], "max_cones": [["a"]]})")), ParseError);
}

TEST(Json, CharacteristicFunctionRoundTrip)
{
    auto c = from_fan(hirzebruch(2));
    Json j = characteristic_to_json(c);
    EXPECT_EQ(characteristic_from_json(j), c);
    EXPECT_EQ(any_complex_from_json(j), c.complex);
    EXPECT_EQ(any_complex_from_json(fan_to_json(hirzebruch(2))), c.complex);
    EXPECT_EQ(any_complex_from_json(complex_to_json(c.complex)), c.complex);
}

TEST(Json, ReportsAreDeterministic)
{
    auto t = example_4_3_triple();
    auto a = classification_to_json(classify_family({"a", "b", "c"}, t, 1)).dump();
    auto b = classification_to_json(classify_family({"a", "b", "c"}, t, 1)).dump();
    EXPECT_EQ(a, b);
}

TEST(Corpus, FilesMatchConstructors)
{
    const std::string dir = std::string(TORIC_DATA_DIR) + "/corpus/";
    Json manifest = read_json_file(dir + "manifest.json");
    auto entries = corpus();
    ASSERT_EQ(manifest.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_EQ(manifest[i]["id"], entries[i].id);
        EXPECT_EQ(manifest[i]["provenance"], entries[i].provenance);
        Fan f = read_fan_file(dir + manifest[i]["file"].get<std::string>());
        EXPECT_EQ(f, entries[i].fan) << entries[i].id;
    }
}
