//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cycred/error.hpp"
#include "cycred/syntax.hpp"

#include "support/oracles.hpp"

namespace cycred {

  using testing::W;

  namespace {

    std::size_t offset_of(std::string_view   text,
                          AlphabetPtr const& a,
                          WordSyntax         syntax) {
      try {
        parse_word(text, a, syntax);
      } catch (ParseError const& e) {
        return e.offset();
      }
      FAIL("parse unexpectedly succeeded");
      return 0;
    }

  }  // namespace

  TEST_CASE("parse_word: compact", "[syntax]") {
    auto const a = testing::txyz();
    REQUIRE(parse_word("txyYzT", a) == W("txyYzT"));
    REQUIRE(parse_word("1", a).empty());
    REQUIRE(parse_word("", a).empty());
    REQUIRE(parse_word("x^-1y", a) == W("Xy"));
    REQUIRE(offset_of("xyq", a, WordSyntax::compact) == 2);
    REQUIRE(offset_of("xy z", a, WordSyntax::compact) == 2);
    REQUIRE(offset_of("x1", a, WordSyntax::compact) == 1);
  }

  TEST_CASE("parse_word: spaced", "[syntax]") {
    auto const a = make_alphabet({"a1", "b_2"});
    Word const w = parse_word("a1 b_2^-1  a1", a, WordSyntax::spaced);
    REQUIRE(w.size() == 3);
    REQUIRE(w[1] == Letter(1, true));
    REQUIRE(parse_word("1", a, WordSyntax::spaced).empty());
    REQUIRE(parse_word("  ", a, WordSyntax::spaced).empty());
    REQUIRE(offset_of("a1 1", a, WordSyntax::spaced) == 3);
    REQUIRE(offset_of("a1 c", a, WordSyntax::spaced) == 3);
    REQUIRE(offset_of("a1 b-2", a, WordSyntax::spaced) == 4);
  }

  TEST_CASE("format_word", "[syntax]") {
    REQUIRE(format_word(W("xYz")) == "xYz");
    REQUIRE(format_word(W("1")) == "1");
    REQUIRE(format_word(W("xYz"), WordSyntax::spaced) == "x y^-1 z");
    auto const a = make_alphabet({"ab"});
    REQUIRE_THROWS_AS(format_word(Word(a, {Letter(0, false)})),
                      PreconditionError);
  }

  TEST_CASE("parse and format round-trip", "[syntax]") {
    testing::Random rng(51);
    auto const      a = testing::txyz();
    for (int i = 0; i < 1000; ++i) {
      Word const w = rng.word(a, 0, 12);
      for (auto syntax : {WordSyntax::compact, WordSyntax::spaced}) {
        REQUIRE(parse_word(format_word(w, syntax), a, syntax) == w);
      }
    }
  }

  TEST_CASE("infer_alphabet", "[syntax]") {
    std::vector<std::string> const compact{"yX", "1", "z^-1"};
    auto a = infer_alphabet(compact, WordSyntax::compact);
    REQUIRE(a->names() == std::vector<std::string>{"x", "y", "z"});
    std::vector<std::string> const spaced{"b a^-1", "1", "c b"};
    a = infer_alphabet(spaced, WordSyntax::spaced);
    REQUIRE(a->names() == std::vector<std::string>{"b", "a", "c"});
    std::vector<std::string> const bad{"x#"};
    REQUIRE_THROWS_AS(infer_alphabet(bad, WordSyntax::compact), ParseError);
  }

  TEST_CASE("parse_syntax", "[syntax]") {
    REQUIRE(parse_syntax("compact") == WordSyntax::compact);
    REQUIRE(parse_syntax("spaced") == WordSyntax::spaced);
    REQUIRE(std::string(to_string(WordSyntax::spaced)) == "spaced");
    REQUIRE_THROWS_AS(parse_syntax("other"), ParseError);
  }

}  // namespace cycred
