#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "inproc/error.hpp"
#include "inproc/principle2.hpp"
#include "oracle.hpp"

using namespace inproc;

namespace {

EventTerm ev(const char* a, const char* x, const char* y) { return {a, x, y}; }

const Lexicon& lex() { return testing::shipped_lexicon(); }
const KnowledgeBase& kb() { return testing::shipped_world(); }

P1Model canonical(const Sentence& s, const LearnerProfile& p) {
  return enumerate_p1_models(s, p).front();
}

DirRev pair_of(const char* text) {
  Sentence s = testing::sentence(text);
  return dir_rev_m(canonical(s, beginner_profile(lex())), s);
}

std::vector<Sentence> grammar_sentences() {
  std::vector<Sentence> out;
  for (const auto& g : oracle::all_schema_sentences(lex(), kb())) {
    out.push_back(testing::sentence(g.text));
    // active counterpart: The N1 <verb> the N2.
    std::string active = g.text;
    active.replace(active.find(" was "), 5, " ");
    active.replace(active.find(" by the "), 8, " the ");
    out.push_back(testing::sentence(active));
  }
  return out;
}

}  // namespace

TEST_CASE("dir_rev_m") {
  CHECK(pair_of(testing::kS1) == DirRev{ev("bite", "cat", "dog"), ev("bite", "dog", "cat")});
  Sentence s8 = testing::sentence("Then, the dog was pushed by the cat.");
  CHECK(dir_rev_m(canonical(s8, beginner_profile(lex())), s8).dir == ev("push", "dog", "cat"));

  Sentence s1 = testing::sentence(testing::kS1);
  P1Model only_cat{{MapAtom{2, "s1", Category::content_words, {ConceptKind::entity, "cat"}}}, {}};
  CHECK_THROWS_AS(dir_rev_m(only_cat, s1), Error);
  // capacity 2 gives cat and dog but no verb
  CHECK_THROWS_AS(dir_rev_m(canonical(s1, beginner_profile(lex(), 2)), s1), Error);
}

TEST_CASE("voice_of and templates") {
  CHECK(voice_of(testing::sentence(testing::kS1), lex()) == Voice::passive);
  CHECK(voice_of(testing::sentence("the cat pushed the dog"), lex()) == Voice::active);
  CHECK(voice_of(testing::sentence(testing::kS4), lex()) == Voice::passive);
  CHECK(voice_of(testing::sentence("Then, the dog was pushed by the cat."), lex()) == Voice::passive);
  try {
    voice_of(testing::sentence("cat dog the"), lex());
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unrecognized_template);
  }
  CHECK_THROWS_AS(voice_of(testing::sentence("the cat was bitten the dog"), lex()), Error);
  CHECK_THROWS_AS(voice_of(testing::sentence("the cat pushed the dog twice"), lex()), Error);

  TemplateMatch m = match_template(testing::sentence(testing::kS1), lex());
  CHECK(m.first_noun == 2);
  CHECK(m.verb == 4);
  CHECK(m.second_noun == 7);
}

TEST_CASE("correct_meaning") {
  DirRev s1 = pair_of(testing::kS1);
  CHECK(correct_meaning(s1, Voice::passive) == ev("bite", "dog", "cat"));
  CHECK(correct_meaning(pair_of("The cat pushed the dog."), Voice::active) == ev("push", "cat", "dog"));
  DirRev same{ev("push", "cat", "cat"), ev("push", "cat", "cat")};
  CHECK(correct_meaning(same, Voice::active) == correct_meaning(same, Voice::passive));
}

TEST_CASE("grm_cues_available") {
  Sentence s1 = testing::sentence(testing::kS1);
  auto adv11 = advanced_profile(lex(), 11);
  auto adv3 = advanced_profile(lex(), 3);
  auto beg = beginner_profile(lex(), 11);
  CHECK(grm_cues_available(canonical(s1, adv11), s1, Voice::passive, adv11));
  CHECK_FALSE(grm_cues_available(canonical(s1, beg), s1, Voice::passive, beg));
  CHECK_FALSE(grm_cues_available(canonical(s1, adv3), s1, Voice::passive, adv3));
  Sentence s5 = testing::sentence("The cat pushed the dog.");
  CHECK(grm_cues_available(canonical(s5, adv3), s5, Voice::active, adv3));
  CHECK_FALSE(grm_cues_available(canonical(s5, beg), s5, Voice::active, beg));
}

TEST_CASE("extract_fnp") {
  const WorldState fresh = fresh_state(kb());
  auto s1 = extract_fnp(pair_of(testing::kS1), fresh, kb());
  CHECK(s1.first == ev("bite", "cat", "dog"));
  CHECK(s1.second == Strategy::fnp_default);
  auto s2 = extract_fnp(pair_of(testing::kS2), fresh, kb());
  CHECK(s2.first == ev("bite", "dog", "shoe"));
  CHECK(s2.second == Strategy::lex_sem_2a);
  auto s3 = extract_fnp(pair_of(testing::kS3), fresh, kb());
  CHECK(s3.first == ev("bite", "dog", "man"));
  CHECK(s3.second == Strategy::event_prob_2b);
  auto s4 = extract_fnp(pair_of(testing::kS4), fresh, kb());
  CHECK(s4.first == ev("bite", "tyson", "holyfield"));
  CHECK(s4.second == Strategy::prior_knowledge_2d);
  // both readings impossible: default fires
  auto nonsense = extract_fnp(pair_of("The shoe was bitten by the ball."), fresh, kb());
  CHECK(nonsense.first == ev("bite", "shoe", "ball"));
  CHECK(nonsense.second == Strategy::fnp_default);
}

TEST_CASE("interpret_paragraph") {
  auto beg = beginner_profile(lex());
  auto p2 = interpret_paragraph(encode_text(testing::kP2), beg, kb(), lex());
  REQUIRE(p2.size() == 2);
  CHECK(*p2[0].event == ev("kill", "cat", "dog"));
  CHECK(p2[0].step == 1);
  CHECK(*p2[1].event == ev("push", "cat", "dog"));
  CHECK(p2[1].strategy == Strategy::lex_sem_2a);
  CHECK(p2[1].step == 2);
  CHECK(p2[1].evidence.dir_impossible);
  CHECK(p2[1].is_correct());

  auto p1 = interpret_paragraph(encode_text(testing::kP1), beg, kb(), lex());
  REQUIRE(p1.size() == 2);
  CHECK(*p1[0].event == ev("push", "cat", "dog"));
  CHECK(p1[0].is_correct());
  CHECK(*p1[1].event == ev("bite", "dog", "cat"));
  CHECK(p1[1].strategy == Strategy::fnp_default);
  CHECK_FALSE(p1[1].is_correct());

  auto s4 = interpret_paragraph(encode_text(testing::kS4), beg, kb(), lex());
  CHECK(*s4[0].event == ev("bite", "tyson", "holyfield"));
  CHECK(s4[0].strategy == Strategy::prior_knowledge_2d);
}

TEST_CASE("uninterpretable sentences are recorded and still advance the story") {
  auto tiny = beginner_profile(lex(), 1);
  auto out = interpret_paragraph(encode_text(testing::kP2), tiny, kb(), lex());
  REQUIRE(out.size() == 2);
  CHECK_FALSE(out[0].interpreted());
  CHECK(out[1].step == 2);
  CHECK(out[0].correct == ev("kill", "cat", "dog"));
  CHECK_THROWS_AS(interpret_paragraph(encode_text("cat dog the."), tiny, kb(), lex()), Error);
}

TEST_CASE("property: advanced learners interpret every grammar sentence correctly") {
  for (int cap : {11, 12, 15, 40}) {
    auto adv = advanced_profile(lex(), cap);
    for (const auto& s : grammar_sentences()) {
      auto m = interpret_sentence(s, adv, kb(), fresh_state(kb()), lex());
      CHECK(m.strategy == Strategy::grm_cues);
      CHECK(m.is_correct());
    }
  }
}

TEST_CASE("property: Principle-2 output is the same for every P1 model") {
  for (const auto& profile : {advanced_profile(lex()), beginner_profile(lex())}) {
    for (const auto& s : grammar_sentences()) {
      auto models = enumerate_p1_models(s, profile);
      const auto first = interpret_with_model(models.front(), s, profile, kb(), fresh_state(kb()), lex());
      for (const auto& m : models)
        CHECK(interpret_with_model(m, s, profile, kb(), fresh_state(kb()), lex()) == first);
    }
  }
}

TEST_CASE("property: neutral KB makes the first noun the agent") {
  KnowledgeBase neutral;
  for (const auto& [name, def] : kb().entities) neutral.entities[name] = {name, {Property::animate}};
  auto beg = beginner_profile(lex());
  for (const auto& s : grammar_sentences()) {
    auto m = interpret_sentence(s, beg, neutral, fresh_state(neutral), lex());
    REQUIRE(m.event);
    CHECK(m.strategy == Strategy::fnp_default);
    CHECK(*m.event == m.dir_rev->dir);
  }
}

TEST_CASE("property: fnp_default label implies the direct event") {
  const WorldState fresh = fresh_state(kb());
  for (const auto& s : grammar_sentences()) {
    DirRev dr = dir_rev_m(canonical(s, beginner_profile(lex())), s);
    auto [event, strategy] = extract_fnp(dr, fresh, kb());
    CHECK((strategy == Strategy::fnp_default) == (event == dr.dir || dr.dir == dr.rev));
  }
}

TEST_CASE("interpretation is deterministic") {
  auto beg = beginner_profile(lex());
  auto a = interpret_paragraph(encode_text(testing::kP1), beg, kb(), lex());
  auto b = interpret_paragraph(encode_text(testing::kP1), beg, kb(), lex());
  CHECK(a == b);
}
