#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "inproc/lexicon.hpp"
#include "inproc/text_model.hpp"

namespace inproc {

/// The k-th word of `sentence` was processed as `category` and mapped to `meaning`.
struct MapAtom {
  std::size_t k;
  std::string sentence;
  Category category;
  Concept meaning;

  auto operator<=>(const MapAtom&) const = default;
  bool operator==(const MapAtom&) const = default;
};

using MapSet = std::set<MapAtom>;

struct CandidateMeaning {
  std::size_t k;
  Category category;
  Concept meaning;
  int consumed;  // rank_of
  bool gated;    // consumed + overhead(category) < capacity
};

/// One Principle-1 interpretation. `skipped` holds the redundant mappings
/// this model leaves out; atoms and skipped partition the gated candidates.
struct P1Model {
  MapSet atoms;
  MapSet skipped;

  bool operator==(const P1Model&) const = default;
};

/// Word k1 as c1 is strictly more likely to be processed than word k2 as c2.
/// False unless the learner knows both words in the given categories.
bool ml_wrd(std::size_t k1, Category c1, std::size_t k2, Category c2, const Sentence& s,
            const LearnerProfile& profile);

/// Number of candidate (word, category, concept) triples of `s` that are
/// strictly more likely than word k as `category`.
int rank_of(std::size_t k, Category category, const Sentence& s, const LearnerProfile& profile);

/// Extra unit charged for processing the whole sentence before redundant or
/// nonmeaningful forms.
int overhead(Category category);

/// Every candidate triple of the sentence, in (k, category, concept) order.
std::vector<CandidateMeaning> candidates(const Sentence& s, const LearnerProfile& profile);

MapSet deterministic_maps(const Sentence& s, const LearnerProfile& profile);

/// Form atoms whose concept is already supplied by a strictly more likely
/// atom on a different word surface.
MapSet skippable(const MapSet& atoms, const Sentence& s, const LearnerProfile& profile);

/// 2^|skippable| models ordered lexicographically by skipped set; the
/// no-skip model is always first.
std::vector<P1Model> enumerate_p1_models(const Sentence& s, const LearnerProfile& profile);

}  // namespace inproc
