#include <catch2/catch_amalgamated.hpp>

#include "visemap/catalog.hpp"
#include "visemap/inventory.hpp"

using namespace visemap;

TEST_CASE("minimal inventory file") {
    auto inv = parse_inventory("p consonant\nae vowel\n", "mini");
    REQUIRE(inv.size() == 2);
    CHECK(inv.phonemes()[0].symbol == "p");
    CHECK(inv.classify("p") == PhonemeClass::Consonant);
    CHECK(inv.classify("ae") == PhonemeClass::Vowel);
}

TEST_CASE("comments and blank lines are ignored") {
    auto inv = parse_inventory("# header\n\np consonant\n  # indented comment\ni vowel iː\n", "c");
    REQUIRE(inv.size() == 2);
    CHECK(inv.classify("i") == PhonemeClass::Vowel);
    CHECK(inv.phonemes()[1].ipa == "iː");
}

TEST_CASE("duplicate symbol is rejected") {
    try {
        parse_inventory("p consonant\np consonant\n", "dup");
        FAIL("expected DuplicatePhoneme");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicatePhoneme);
    }
}

TEST_CASE("unknown class token is rejected") {
    try {
        parse_inventory("p fricative\n", "bad");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("classify raises on symbols outside the inventory") {
    auto inv = parse_inventory("p consonant\ni vowel\n", "mini");
    try {
        inv.classify("zz");
        FAIL("expected UnknownPhoneme");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownPhoneme);
    }
}

TEST_CASE("shipped AVL2 inventory has 29 phonemes") {
    auto inv = load_inventory(std::filesystem::path(VISEMAP_DATA_DIR) / "avl2.inv");
    CHECK(inv.size() == 29);
    CHECK(inv.classify("p") == PhonemeClass::Consonant);
    CHECK(inv.classify("iy") == PhonemeClass::Vowel);
    // matches the compiled-in copy
    CHECK(serialize_inventory(inv) == serialize_inventory(avl2_inventory()));
}

TEST_CASE("shipped inventory round-trips byte-identically") {
    auto path = std::filesystem::path(VISEMAP_DATA_DIR) / "avl2.inv";
    auto bytes = read_file(path);
    CHECK(serialize_inventory(parse_inventory(bytes, "avl2")) == bytes);
}

TEST_CASE("declaration order is preserved") {
    auto inv = parse_inventory("z consonant\na vowel\nm consonant\n", "ord");
    std::vector<std::string> symbols;
    for (const auto& p : inv) symbols.push_back(p.symbol);
    CHECK(symbols == std::vector<std::string>{"z", "a", "m"});
}
