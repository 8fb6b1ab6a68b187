#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inproc/lexicon.hpp"
#include "inproc/principle2.hpp"
#include "inproc/text_model.hpp"
#include "inproc/world.hpp"

namespace inproc {

// A teaching sentence is valuable when the First Noun route and the
// grammatical-cue route disagree on the event.
struct ValuableVerdict {
  std::string target;
  bool valuable = false;
  std::optional<EventTerm> fnp_event;
  std::optional<EventTerm> cue_event;
  Strategy fnp_strategy = Strategy::fnp_default;
  // Empty, or "no_interpretation" when no event could be formed.
  std::string note;

  bool operator==(const ValuableVerdict&) const = default;
};

struct ParagraphVerdict {
  std::string target;
  bool valuable = false;
  std::vector<ValuableVerdict> sentences;
};

/// Both routes computed for an advanced learner (capacity 11, n = 2).
ValuableVerdict check_sentence(const Sentence& s, const KnowledgeBase& kb,
                               const WorldState& state, const Lexicon& full_lexicon);

/// Story context is threaded with the grammatical-cue events. Valuable when
/// any sentence is.
ParagraphVerdict check_paragraph(const Paragraph& p, const KnowledgeBase& kb,
                                 const Lexicon& full_lexicon);

struct Schema {
  std::string n1;
  std::string v;
  std::string n2;

  auto operator<=>(const Schema&) const = default;
  bool operator==(const Schema&) const = default;
};

/// "The N1 was V by the N2."
std::string render_schema(const Schema& schema);

/// Every (n1, v, n2) with n1 != n2, nouns drawn from entity words declared in
/// the KB and verbs from words with both an action meaning and a past
/// participle form.
std::vector<Schema> enumerate_schemas(const KnowledgeBase& kb, const Lexicon& lexicon);

struct GeneratedSentence {
  std::string text;
  ValuableVerdict verdict;
};

/// Valuable schema sentences, sorted by text.
std::vector<GeneratedSentence> generate_valuable(const KnowledgeBase& kb, const Lexicon& lexicon);

}  // namespace inproc
