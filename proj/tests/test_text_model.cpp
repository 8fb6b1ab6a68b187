#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "inproc/error.hpp"
#include "inproc/text_model.hpp"

using namespace inproc;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected inproc::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("encode single passive sentence") {
  Paragraph p = encode_text(testing::kS1);
  REQUIRE(p.sentences.size() == 1);
  CHECK(p.sentences[0].id == "s1");
  CHECK(p.sentences[0].tokens ==
        std::vector<std::string>{"the", "cat", "was", "bitten", "by", "the", "dog"});
}

TEST_CASE("encode paragraph strips commas and lowercases") {
  Paragraph p = encode_text("The cat killed the dog. Then, the dog was pushed by the cat.");
  REQUIRE(p.sentences.size() == 2);
  const Sentence& s2 = p.sentences[1];
  CHECK(s2.id == "s2");
  CHECK(s2.word(1) == "then");
  CHECK(s2.word(8) == "cat");
  CHECK(s2.size() == 8);
}

TEST_CASE("encode errors") {
  CHECK(error_of([] { encode_text("."); }) == Errc::empty_sentence);
  CHECK(error_of([] { encode_text("The cat ran. , ."); }) == Errc::empty_sentence);
  CHECK(error_of([] { encode_text(""); }) == Errc::empty_text);
  CHECK(error_of([] { encode_text("   \n\t "); }) == Errc::empty_text);
}

TEST_CASE("encode accepts a trailing sentence without terminator and other delimiters") {
  Paragraph p = encode_text("Did the cat bite? Yes! the dog ran");
  REQUIRE(p.sentences.size() == 3);
  CHECK(p.sentences[2].tokens == std::vector<std::string>{"the", "dog", "ran"});
}

TEST_CASE("position_of with n = 2") {
  Sentence s1 = testing::sentence(testing::kS1);
  PositionParameter n{2};
  CHECK(position_of(1, s1, n) == Position::initial);
  CHECK(position_of(4, s1, n) == Position::medial);
  CHECK(position_of(6, s1, n) == Position::final);
  CHECK(position_of(7, s1, n) == Position::final);

  std::map<Position, int> counts;
  for (std::size_t k = 1; k <= s1.size(); ++k) ++counts[position_of(k, s1, n)];
  CHECK(counts[Position::initial] == 2);
  CHECK(counts[Position::medial] == 3);
  CHECK(counts[Position::final] == 2);
}

TEST_CASE("initial wins when ranges overlap") {
  Sentence s = testing::sentence("the cat ran");
  CHECK(position_of(2, s, PositionParameter{2}) == Position::initial);
  CHECK(position_of(3, s, PositionParameter{2}) == Position::final);
}

TEST_CASE("position_of index errors") {
  Sentence s = testing::sentence("the cat ran");
  CHECK(error_of([&] { position_of(0, s, PositionParameter{2}); }) == Errc::index_out_of_range);
  CHECK(error_of([&] { position_of(4, s, PositionParameter{2}); }) == Errc::index_out_of_range);
  CHECK_THROWS_AS(PositionParameter{0}, std::invalid_argument);
}

TEST_CASE("property: positions partition indices and re-encoding is idempotent") {
  std::mt19937 rng(7);
  const std::vector<std::string> pool{"The", "cat,", "WAS", "bitten", "by", "dog", "Then,", "man;"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) text += pool[rng() % pool.size()] + " ";
    text += ".";
    Sentence s = encode_text(text).sentences.front();

    for (int n = 1; n <= 6; ++n) {
      PositionParameter width{n};
      for (std::size_t k = 1; k <= s.size(); ++k) {
        Position p = position_of(k, s, width);
        bool initial = k <= static_cast<std::size_t>(n);
        bool final = k + n > s.size();
        CHECK(p == (initial ? Position::initial : final ? Position::final : Position::medial));
      }
    }

    std::string joined;
    for (const auto& t : s.tokens) joined += t + " ";
    CHECK(encode_text(joined).sentences.front().tokens == s.tokens);
  }
}
