#include "inproc/pias.hpp"

#include <algorithm>
#include <set>

#include "inproc/error.hpp"

namespace inproc {

namespace {

constexpr int kAdvancedCapacity = 11;
constexpr int kPositionWidth = 2;

}  // namespace

ValuableVerdict check_sentence(const Sentence& s, const KnowledgeBase& kb,
                               const WorldState& state, const Lexicon& full_lexicon) {
  const LearnerProfile profile = advanced_profile(full_lexicon, kAdvancedCapacity, kPositionWidth);
  const Voice voice = voice_of(s, full_lexicon);
  const auto models = enumerate_p1_models(s, profile);

  ValuableVerdict v;
  v.target = s.id;
  DirRev dr;
  try {
    dr = dir_rev_m(models.front(), s);
  } catch (const Error& err) {
    if (err.code() != Errc::no_interpretation) throw;
    v.note = "no_interpretation";
    return v;
  }
  auto [fnp_event, strategy] = extract_fnp(dr, state, kb);
  v.fnp_event = fnp_event;
  v.fnp_strategy = strategy;
  v.cue_event = correct_meaning(dr, voice);
  v.valuable = *v.fnp_event != *v.cue_event;
  return v;
}

ParagraphVerdict check_paragraph(const Paragraph& p, const KnowledgeBase& kb,
                                 const Lexicon& full_lexicon) {
  ParagraphVerdict out;
  out.target = p.id;
  WorldState state = fresh_state(kb);
  for (const auto& s : p.sentences) {
    out.sentences.push_back(check_sentence(s, kb, state, full_lexicon));
    const auto& v = out.sentences.back();
    out.valuable = out.valuable || v.valuable;
    if (v.cue_event) {
      state = apply_effects(state, *v.cue_event, kb);
    } else {
      ++state.step;
    }
  }
  return out;
}

std::string render_schema(const Schema& schema) {
  return "The " + schema.n1 + " was " + schema.v + " by the " + schema.n2 + ".";
}

std::vector<Schema> enumerate_schemas(const KnowledgeBase& kb, const Lexicon& lexicon) {
  const Concept participle{ConceptKind::semantic, "past_participle"};
  std::set<std::string> nouns;
  std::set<std::string> verbs;
  for (const auto& e : lexicon) {
    if (e.category != Category::content_words) continue;
    if (e.meaning.kind == ConceptKind::entity && kb.declares(e.meaning.name)) {
      nouns.insert(e.word);
    } else if (e.meaning.kind == ConceptKind::action && is_builtin_action(e.meaning.name) &&
               has_meaning(e.word, participle, lexicon)) {
      verbs.insert(e.word);
    }
  }
  std::vector<Schema> out;
  for (const auto& n1 : nouns)
    for (const auto& v : verbs)
      for (const auto& n2 : nouns)
        if (n1 != n2) out.push_back({n1, v, n2});
  return out;
}

std::vector<GeneratedSentence> generate_valuable(const KnowledgeBase& kb, const Lexicon& lexicon) {
  std::vector<GeneratedSentence> out;
  const WorldState start = fresh_state(kb);
  for (const auto& schema : enumerate_schemas(kb, lexicon)) {
    std::string text = render_schema(schema);
    const Paragraph p = encode_text(text);
    ValuableVerdict verdict = check_sentence(p.sentences.front(), kb, start, lexicon);
    if (verdict.valuable) out.push_back({std::move(text), std::move(verdict)});
  }
  std::sort(out.begin(), out.end(),
            [](const GeneratedSentence& a, const GeneratedSentence& b) { return a.text < b.text; });
  return out;
}

}  // namespace inproc
