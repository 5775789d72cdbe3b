#include <stdexcept>

#include "doctest.h"
#include "frb/word.hpp"

using namespace frb;

TEST_CASE("both parse syntaxes agree") {
    CHECK(Word::parse("aBa", 2) == Word::parse("1,-2,1", 2));
    CHECK(Word::parse("e", 2) == Word());
    CHECK(Word::parse("", 2) == Word());
    CHECK(Word::parse("c", 3) == Word::parse("3", 3));
}

TEST_CASE("construction rejects malformed words") {
    CHECK_THROWS_AS(Word::parse("aA", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("abBa", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("c", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("1,0,1", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::vector<Letter>{1, -1}), std::invalid_argument);
}

TEST_CASE("string form round trips") {
    for (const char* text : {"a", "aB", "abAB", "bbbA"}) {
        Word w = Word::parse(text, 2);
        CHECK(Word::parse(w.str(), 2) == w);
        CHECK(w.str() == text);
    }
}

TEST_CASE("multiplication cancels freely") {
    Word u = Word::parse("abA", 2);
    CHECK(multiply(u, u.inverse()).empty());
    CHECK(multiply(u.inverse(), u).empty());
    CHECK(multiply(Word::parse("ab", 2), Word::parse("Ba", 2)) == Word::parse("aa", 2));
    CHECK(multiply(Word::parse("ab", 2), Word::parse("BA", 2)).empty());
    CHECK(multiply(Word(), u) == u);

    Word x = Word::parse("aab", 2), y = Word::parse("BaB", 2), z = Word::parse("bAA", 2);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
}

TEST_CASE("prefix and suffix accessors") {
    Word w = Word::parse("abAB", 2);
    CHECK(w.prefix(2) == Word::parse("ab", 2));
    CHECK(w.suffix(2) == Word::parse("AB", 2));
    CHECK(w.starts_with(Word::parse("ab", 2)));
    CHECK(!w.starts_with(Word::parse("aB", 2)));
    CHECK(w.ends_with(Word::parse("B", 2)));
    CHECK(common_prefix_len(w, Word::parse("aba", 2)) == 2);
    CHECK(common_prefix_len(w, Word::parse("ba", 2)) == 0);
}

TEST_CASE("canonical order is length first") {
    CHECK(Word::parse("bb", 2) < Word::parse("aaa", 2));
    CHECK(Word::parse("a", 2) < Word::parse("b", 2));
}
