#include "inproc/principle1.hpp"

#include <algorithm>
#include <stdexcept>

namespace inproc {

namespace {

// ml_wrd without the membership check, for callers that already iterate
// over known candidates.
bool more_likely(std::size_t k1, Category c1, std::size_t k2, Category c2, const Sentence& s,
                 PositionParameter n) {
  if (is_ml_ctg_closed(c1, c2)) return true;
  return c1 == c2 && is_ml_pos_closed(position_of(k1, s, n), position_of(k2, s, n));
}

}  // namespace

bool ml_wrd(std::size_t k1, Category c1, std::size_t k2, Category c2, const Sentence& s,
            const LearnerProfile& profile) {
  if (!is_leaf(c1) || !is_leaf(c2)) return false;
  if (!in_category(s.word(k1), c1, profile.lexicon) ||
      !in_category(s.word(k2), c2, profile.lexicon)) {
    return false;
  }
  return more_likely(k1, c1, k2, c2, s, profile.n);
}

int rank_of(std::size_t k, Category category, const Sentence& s, const LearnerProfile& profile) {
  int count = 0;
  for (std::size_t k1 = 1; k1 <= s.size(); ++k1) {
    for (const auto& e : entries_for(s.word(k1), profile)) {
      if (more_likely(k1, e.category, k, category, s, profile.n)) ++count;
    }
  }
  return count;
}

int overhead(Category category) {
  return category == Category::r_m_forms || category == Category::nm_forms ? 1 : 0;
}

std::vector<CandidateMeaning> candidates(const Sentence& s, const LearnerProfile& profile) {
  std::vector<CandidateMeaning> out;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    for (const auto& e : entries_for(s.word(k), profile)) {
      int consumed = rank_of(k, e.category, s, profile);
      out.push_back({k, e.category, e.meaning, consumed,
                     consumed + overhead(e.category) < profile.capacity});
    }
  }
  return out;
}

MapSet deterministic_maps(const Sentence& s, const LearnerProfile& profile) {
  MapSet out;
  for (const auto& c : candidates(s, profile)) {
    if (c.gated) out.insert({c.k, s.id, c.category, c.meaning});
  }
  return out;
}

MapSet skippable(const MapSet& atoms, const Sentence& s, const LearnerProfile& profile) {
  MapSet out;
  for (const auto& a : atoms) {
    if (!is_form(a.category)) continue;
    for (const auto& b : atoms) {
      if (b.k == a.k || b.meaning != a.meaning) continue;
      if (s.word(b.k) == s.word(a.k)) continue;
      if (more_likely(b.k, b.category, a.k, a.category, s, profile.n)) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

std::vector<P1Model> enumerate_p1_models(const Sentence& s, const LearnerProfile& profile) {
  const MapSet base = deterministic_maps(s, profile);
  const MapSet skip = skippable(base, s, profile);
  const std::vector<MapAtom> optional(skip.begin(), skip.end());
  if (optional.size() >= 8 * sizeof(std::size_t) - 1) {
    throw std::length_error("too many skippable atoms to enumerate");
  }

  std::vector<P1Model> models;
  const std::size_t total = std::size_t{1} << optional.size();
  models.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    P1Model m{base, {}};
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        m.atoms.erase(optional[i]);
        m.skipped.insert(optional[i]);
      }
    }
    models.push_back(std::move(m));
  }
  std::sort(models.begin(), models.end(),
            [](const P1Model& a, const P1Model& b) { return a.skipped < b.skipped; });
  return models;
}

}  // namespace inproc
