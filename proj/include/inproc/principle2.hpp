#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inproc/lexicon.hpp"
#include "inproc/principle1.hpp"
#include "inproc/text_model.hpp"
#include "inproc/world.hpp"

namespace inproc {

/// Direct meaning: first noun as agent. Reverse: agent and patient swapped.
struct DirRev {
  EventTerm dir;
  EventTerm rev;

  bool operator==(const DirRev&) const = default;
};

enum class Strategy { fnp_default, lex_sem_2a, event_prob_2b, prior_knowledge_2d, grm_cues };

std::string_view to_string(Strategy s);

/// `fnp` for every First-Noun-family strategy, `grm_cues` otherwise.
std::string_view route_name(Strategy s);

enum class Voice { active, passive };

std::string_view to_string(Voice v);

/// World facts about the direct and reverse events at the sentence's step.
struct Evidence {
  bool dir_impossible = false;
  bool rev_impossible = false;
  bool dir_unlikely = false;
  bool rev_unlikely = false;
  bool dir_hpd = false;
  bool rev_hpd = false;

  bool operator==(const Evidence&) const = default;
};

struct ExtractedMeaning {
  std::string sentence;
  int step = 1;
  Voice voice = Voice::active;
  // Empty when the learner processed too little to form an event.
  std::optional<EventTerm> event;
  Strategy strategy = Strategy::fnp_default;
  std::optional<DirRev> dir_rev;
  std::optional<EventTerm> correct;
  Evidence evidence;

  bool interpreted() const { return event.has_value(); }
  bool is_correct() const { return event && correct && *event == *correct; }
  bool operator==(const ExtractedMeaning&) const = default;
};

/// Builds the direct/reverse pair from the two lowest-indexed entity atoms and
/// the lowest-indexed action atom. Throws Error(no_interpretation).
DirRev dir_rev_m(const P1Model& model, const Sentence& s);

/// Surface analysis against the two controlled templates:
///   [disc*] [the] N V [the] N
///   [disc*] [the] N was V by [the] N
struct TemplateMatch {
  Voice voice;
  std::size_t first_noun;
  std::size_t verb;
  std::size_t second_noun;
};

/// Throws Error(unrecognized_template).
TemplateMatch match_template(const Sentence& s, const Lexicon& full_lexicon);

Voice voice_of(const Sentence& s, const Lexicon& full_lexicon);

EventTerm correct_meaning(const DirRev& dr, Voice voice);

bool grm_cues_available(const P1Model& model, const Sentence& s, Voice voice,
                        const LearnerProfile& profile);

Evidence gather_evidence(const DirRev& dr, const WorldState& state, const KnowledgeBase& kb);

/// First Noun Principle with its exceptions, checked 2d, 2a, 2b in that order.
std::pair<EventTerm, Strategy> extract_fnp(const DirRev& dr, const WorldState& state,
                                           const KnowledgeBase& kb);

/// One sentence at the given story state, using the canonical (no-skip) P1 model.
ExtractedMeaning interpret_sentence(const Sentence& s, const LearnerProfile& profile,
                                    const KnowledgeBase& kb, const WorldState& state,
                                    const Lexicon& full_lexicon);

/// Same, for an explicit P1 model.
ExtractedMeaning interpret_with_model(const P1Model& model, const Sentence& s,
                                      const LearnerProfile& profile, const KnowledgeBase& kb,
                                      const WorldState& state, const Lexicon& full_lexicon);

/// Sentences in order from a fresh state; each extracted event updates the
/// state before the next sentence.
std::vector<ExtractedMeaning> interpret_paragraph(const Paragraph& p,
                                                  const LearnerProfile& profile,
                                                  const KnowledgeBase& kb,
                                                  const Lexicon& full_lexicon);

}  // namespace inproc
