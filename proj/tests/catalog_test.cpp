#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracle.hpp"

using namespace selfdual;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t error_line(const std::string& text) {
    try {
        parse_catalog(text);
    } catch (const CatalogError& e) {
        return e.line();
    }
    return 0;
}

const char* kC361 =
    "C36.1 four_negacirc F3 36 rA=0,1,2,0,0,0,0,1,2 rB=1,2,2,1,1,1,1,0,0 expect alpha=72 "
    "cite=length36-four-negacirculant-table\n";

TEST(CatalogTest, ParsesAnEntry) {
    const auto cat = parse_catalog(std::string(kC361));
    ASSERT_EQ(cat.entries.size(), 1u);
    const auto& e = cat.entries[0];
    EXPECT_EQ(e.id, "C36.1");
    EXPECT_EQ(e.family, Family::FourNegacirc);
    EXPECT_EQ(e.field, Field::F3);
    EXPECT_EQ(e.length, 36u);
    EXPECT_EQ(e.param("rA"), "0,1,2,0,0,0,0,1,2");
    EXPECT_EQ(e.expect.alpha, 72);
    EXPECT_EQ(e.expect.cite, "length36-four-negacirculant-table");
    EXPECT_FALSE(e.expect.optional);
}

TEST(CatalogTest, EmptyFileGivesEmptyCatalog) {
    EXPECT_TRUE(parse_catalog(std::string()).entries.empty());
    EXPECT_TRUE(parse_catalog(std::string("# only a comment\n\n")).entries.empty());
}

TEST(CatalogTest, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("# c\nN1 neighbor F3 8 base=Z x=1,1,1,0\n"), 2u);                // unknown base
    EXPECT_EQ(error_line(std::string(kC361) + kC361), 2u);                                 // duplicate id
    EXPECT_EQ(error_line("X four_circ F5 8 rA=1,0 rB=1,0\n"), 1u);                         // field
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,0,0\n"), 1u);                       // row length
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,w\n"), 1u);                         // token
    EXPECT_EQ(error_line("X triangle F3 8\n"), 1u);                                        // family
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0\n"), 1u);                                // missing rB
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,0 mu=1\n"), 1u);                    // stray param
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,0 expect alpha=8\n"), 1u);          // no cite
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,0 expect alpha=x cite=c\n"), 1u);   // value
    EXPECT_EQ(error_line("X four_circ F3 8 rA=1,0 rB=1,0 expect gamma=1 cite=c\n"), 1u);   // key
    EXPECT_EQ(error_line("X four_circ F3\n"), 1u);
    EXPECT_EQ(error_line("X ito F3 36 rA=1 rB=1 rC=1 rD=1\n"), 1u);
    // a base must be defined before its neighbors
    EXPECT_EQ(error_line("N neighbor F3 8 base=B x=1,1,1,0\nB four_circ F3 8 rA=1,0 rB=1,0\n"), 1u);
    EXPECT_EQ(error_line("R reference F3 36 expect alpha=8 cite=c\nN neighbor F3 36 base=R x=0\n"), 2u);
    EXPECT_EQ(error_line(kC361), 0u);
}

TEST(CatalogTest, ShippedCatalogRoundTripsByteForByte) {
    const std::string text = read_file(SELFDUAL_CATALOG);
    ASSERT_FALSE(text.empty());
    const auto cat = parse_catalog(text);
    EXPECT_EQ(serialize_catalog(cat), text);
    EXPECT_EQ(serialize_catalog(parse_catalog(serialize_catalog(cat))), text);
}

TEST(CatalogTest, CanonicalOrderingOfKeys) {
    const auto cat = parse_catalog(std::string(
        "B four_circ F3 8 rB=0,1 rA=1,0 expect cite=c A6=4 min_weight=3 A3=2 self_dual=false\n"));
    EXPECT_EQ(serialize_entry(cat.entries[0]),
              "B four_circ F3 8 rA=1,0 rB=0,1 expect self_dual=false min_weight=3 A3=2 A6=4 cite=c");
}

TEST(CatalogTest, ShippedCatalogContents) {
    const auto cat = load_catalog(SELFDUAL_CATALOG);
    auto count = [&](const std::string& prefix) {
        std::size_t c = 0;
        for (const auto& e : cat.entries) c += e.id.rfind(prefix, 0) == 0;
        return c;
    };
    EXPECT_EQ(cat.select("C36.1..C36.19").size(), 19u);
    EXPECT_EQ(count("N36."), 52u);
    EXPECT_EQ(count("N48."), 61u);
    EXPECT_EQ(count("N60."), 60u);
    EXPECT_EQ(count("C72.ito."), 40u);
    EXPECT_EQ(count("C72.bdcc."), 25u);
    EXPECT_EQ(count("N30."), 23u);
    EXPECT_EQ(cat.at("N24.1").expect.alpha, 864);
    EXPECT_EQ(cat.at("N24.2").expect.alpha, 1026);
    EXPECT_EQ(cat.at("D30.1").expect.alpha, 3249);
    EXPECT_EQ(cat.at("N30.19").expect.alpha, 3168);
    EXPECT_TRUE(cat.at("C72.ito.1").expect.optional);
    EXPECT_THROW(cat.at("NOPE"), std::out_of_range);
    EXPECT_THROW(cat.select("C36.19..C36.1"), std::invalid_argument);
}

TEST(CatalogTest, EveryShippedAlphaPassesTheModulusTripwire) {
    const auto cat = load_catalog(SELFDUAL_CATALOG);
    std::size_t checked = 0;
    for (const auto& e : cat.entries) {
        if (!e.expect.alpha) continue;
        const unsigned mod = e.field == Field::F3 ? 8 : 9;
        EXPECT_EQ(*e.expect.alpha % mod, 0) << e.id;
        EXPECT_FALSE(e.expect.cite.empty()) << e.id;
        ++checked;
    }
    EXPECT_GT(checked, 280u);
}

TEST(CodeBuilderTest, BuildsFamiliesAndNeighbors) {
    const auto cat = parse_catalog(std::string(
        "Z bordered_dcc F4 24 rA=1,w,1,1,w,1,0,0,0,0,0\n"
        "N neighbor F4 24 base=Z x=0,0,0,0,1,w2,1,1,w,w2,1,1 expect alpha=864 cite=c\n"
        "D mu_circ F4 30 mu=w rA=0,0,0,w,w,1,1,1,w2,w,w,0,w,w2,w2\n"
        "R reference F3 72 expect alpha=8 cite=c\n"
        "S direct_sum F4 54 parts=Z+D\n"));
    CodeBuilder b(cat);
    EXPECT_TRUE(is_self_dual(b.build("N")));
    EXPECT_EQ(&b.build("Z"), &b.build("Z"));
    EXPECT_EQ(b.build("D").dimension(), 15u);
    EXPECT_THROW(b.build("R"), std::invalid_argument);
    EXPECT_FALSE(b.has_generator("R"));
    EXPECT_EQ(b.build("S").dimension(), 27u);
    EXPECT_TRUE(is_self_dual(b.build("S")));
    EXPECT_EQ(error_line("Z bordered_dcc F4 24 rA=1,w,1,1,w,1,0,0,0,0,0\nS direct_sum F4 50 parts=Z+Z\n"), 2u);
}

}  // namespace
