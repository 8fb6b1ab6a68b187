#include "inproc/principle2.hpp"

#include <algorithm>

#include "inproc/error.hpp"

namespace inproc {

namespace {

const Concept kPassiveVoice{ConceptKind::semantic, "passive_voice"};
const Concept kPastParticiple{ConceptKind::semantic, "past_participle"};
const Concept kAgency{ConceptKind::semantic, "agency"};
const Concept kDefinite{ConceptKind::semantic, "definite"};

bool has_atom(const P1Model& model, const Concept& c) {
  return std::any_of(model.atoms.begin(), model.atoms.end(),
                     [&](const MapAtom& a) { return a.meaning == c; });
}

std::optional<std::string> first_meaning(std::string_view word, ConceptKind kind,
                                         const Lexicon& lex) {
  for (const auto& e : lex) {
    if (e.word == word && e.category == Category::content_words && e.meaning.kind == kind) {
      return e.meaning.name;
    }
  }
  return std::nullopt;
}

class TemplateReader {
 public:
  TemplateReader(const Sentence& s, const Lexicon& lex) : s_(s), lex_(lex) {}

  bool done() const { return k_ > s_.size(); }
  std::size_t at() const { return k_; }

  bool word_is(ConceptKind kind) const {
    return !done() && has_meaning(s_.word(k_), kind, lex_);
  }
  bool word_is(const Concept& c) const { return !done() && has_meaning(s_.word(k_), c, lex_); }
  bool noun() const { return word_is(ConceptKind::entity); }
  bool verb() const { return word_is(ConceptKind::action); }

  void skip_discourse() {
    while (!done() && word_is(ConceptKind::discourse) && !noun()) ++k_;
  }

  // [the] N; returns the noun index or 0.
  std::size_t noun_phrase() {
    if (word_is(kDefinite) && k_ + 1 <= s_.size() && has_meaning(s_.word(k_ + 1), ConceptKind::entity, lex_)) {
      ++k_;
    }
    if (!noun()) return 0;
    return k_++;
  }

  bool take(const Concept& c) {
    if (!word_is(c)) return false;
    ++k_;
    return true;
  }

  std::size_t take_verb(bool participle) {
    if (!verb()) return 0;
    if (participle && !word_is(kPastParticiple)) return 0;
    return k_++;
  }

  void reset(std::size_t k) { k_ = k; }

 private:
  const Sentence& s_;
  const Lexicon& lex_;
  std::size_t k_ = 1;
};

[[noreturn]] void unrecognized(const Sentence& s) {
  std::string text;
  for (const auto& t : s.tokens) text += (text.empty() ? "" : " ") + t;
  throw Error(Errc::unrecognized_template,
              "sentence " + s.id + " matches no template: \"" + text + "\"");
}

// The event pair read off the sentence surface with the full vocabulary.
DirRev surface_dir_rev(const TemplateMatch& m, const Sentence& s, const Lexicon& lex) {
  auto first = first_meaning(s.word(m.first_noun), ConceptKind::entity, lex);
  auto second = first_meaning(s.word(m.second_noun), ConceptKind::entity, lex);
  auto action = first_meaning(s.word(m.verb), ConceptKind::action, lex);
  EventTerm dir{*action, *first, *second};
  return {dir, {dir.action, dir.patient, dir.agent}};
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::fnp_default: return "fnp_default";
    case Strategy::lex_sem_2a: return "lex_sem_2a";
    case Strategy::event_prob_2b: return "event_prob_2b";
    case Strategy::prior_knowledge_2d: return "prior_knowledge_2d";
    case Strategy::grm_cues: return "grm_cues";
  }
  return "?";
}

std::string_view route_name(Strategy s) { return s == Strategy::grm_cues ? "grm_cues" : "fnp"; }

std::string_view to_string(Voice v) { return v == Voice::active ? "active" : "passive"; }

DirRev dir_rev_m(const P1Model& model, const Sentence& s) {
  std::vector<const MapAtom*> entities;
  const MapAtom* action = nullptr;
  for (const auto& a : model.atoms) {
    if (a.category != Category::content_words) continue;
    if (a.meaning.kind == ConceptKind::entity) {
      if (entities.empty() || entities.back()->k != a.k) entities.push_back(&a);
    } else if (a.meaning.kind == ConceptKind::action && !action) {
      action = &a;
    }
  }
  if (entities.size() < 2 || !action) {
    throw Error(Errc::no_interpretation,
                "sentence " + s.id + ": learner processed too few entities or no action");
  }
  EventTerm dir{action->meaning.name, entities[0]->meaning.name, entities[1]->meaning.name};
  return {dir, {dir.action, dir.patient, dir.agent}};
}

TemplateMatch match_template(const Sentence& s, const Lexicon& full_lexicon) {
  TemplateReader r(s, full_lexicon);
  r.skip_discourse();
  const std::size_t first = r.noun_phrase();
  if (first == 0) unrecognized(s);
  const std::size_t after_subject = r.at();

  if (r.take(kPassiveVoice)) {
    if (std::size_t verb = r.take_verb(true); verb != 0 && r.take(kAgency)) {
      if (std::size_t second = r.noun_phrase(); second != 0 && r.done()) {
        return {Voice::passive, first, verb, second};
      }
    }
    r.reset(after_subject);
  }
  if (std::size_t verb = r.take_verb(false); verb != 0) {
    if (std::size_t second = r.noun_phrase(); second != 0 && r.done()) {
      return {Voice::active, first, verb, second};
    }
  }
  unrecognized(s);
}

Voice voice_of(const Sentence& s, const Lexicon& full_lexicon) {
  return match_template(s, full_lexicon).voice;
}

EventTerm correct_meaning(const DirRev& dr, Voice voice) {
  return voice == Voice::active ? dr.dir : dr.rev;
}

bool grm_cues_available(const P1Model& model, const Sentence& /*s*/, Voice voice,
                        const LearnerProfile& profile) {
  if (voice == Voice::passive) {
    return has_atom(model, kPassiveVoice) && has_atom(model, kPastParticiple);
  }
  return std::any_of(profile.lexicon.begin(), profile.lexicon.end(),
                     [](const LexEntry& e) { return is_form(e.category); });
}

Evidence gather_evidence(const DirRev& dr, const WorldState& state, const KnowledgeBase& kb) {
  Evidence e;
  e.dir_impossible = impossible(dr.dir, state, kb);
  e.rev_impossible = impossible(dr.rev, state, kb);
  e.dir_unlikely = unlikely(dr.dir, state, kb);
  e.rev_unlikely = unlikely(dr.rev, state, kb);
  e.dir_hpd = hpd(dr.dir, kb);
  e.rev_hpd = hpd(dr.rev, kb);
  return e;
}

std::pair<EventTerm, Strategy> extract_fnp(const DirRev& dr, const WorldState& state,
                                           const KnowledgeBase& kb) {
  const Evidence e = gather_evidence(dr, state, kb);
  if (e.rev_hpd) return {dr.rev, Strategy::prior_knowledge_2d};
  if (e.dir_impossible && !e.rev_impossible) return {dr.rev, Strategy::lex_sem_2a};
  if (!e.dir_impossible && e.dir_unlikely && !e.dir_hpd && !e.rev_impossible && !e.rev_unlikely) {
    return {dr.rev, Strategy::event_prob_2b};
  }
  return {dr.dir, Strategy::fnp_default};
}

ExtractedMeaning interpret_with_model(const P1Model& model, const Sentence& s,
                                      const LearnerProfile& profile, const KnowledgeBase& kb,
                                      const WorldState& state, const Lexicon& full_lexicon) {
  const TemplateMatch match = match_template(s, full_lexicon);
  ExtractedMeaning out;
  out.sentence = s.id;
  out.step = state.step;
  out.voice = match.voice;
  out.correct = correct_meaning(surface_dir_rev(match, s, full_lexicon), match.voice);

  DirRev dr;
  try {
    dr = dir_rev_m(model, s);
  } catch (const Error& err) {
    if (err.code() != Errc::no_interpretation) throw;
    return out;
  }
  out.dir_rev = dr;
  out.evidence = gather_evidence(dr, state, kb);
  if (grm_cues_available(model, s, match.voice, profile)) {
    out.event = correct_meaning(dr, match.voice);
    out.strategy = Strategy::grm_cues;
  } else {
    std::tie(out.event, out.strategy) = extract_fnp(dr, state, kb);
  }
  return out;
}

ExtractedMeaning interpret_sentence(const Sentence& s, const LearnerProfile& profile,
                                    const KnowledgeBase& kb, const WorldState& state,
                                    const Lexicon& full_lexicon) {
  const auto models = enumerate_p1_models(s, profile);
  return interpret_with_model(models.front(), s, profile, kb, state, full_lexicon);
}

std::vector<ExtractedMeaning> interpret_paragraph(const Paragraph& p,
                                                  const LearnerProfile& profile,
                                                  const KnowledgeBase& kb,
                                                  const Lexicon& full_lexicon) {
  std::vector<ExtractedMeaning> out;
  WorldState state = fresh_state(kb);
  for (const auto& s : p.sentences) {
    out.push_back(interpret_sentence(s, profile, kb, state, full_lexicon));
    if (out.back().event) {
      state = apply_effects(state, *out.back().event, kb);
    } else {
      ++state.step;
    }
  }
  return out;
}

}  // namespace inproc
