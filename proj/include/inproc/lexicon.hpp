#pragma once

#include <compare>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "inproc/text_model.hpp"

namespace inproc {

// Word-category hierarchy:
//   words -> content_words | forms
//   forms -> m_forms | nm_forms
//   m_forms -> r_m_forms | nr_m_forms
enum class Category { words, content_words, forms, m_forms, nm_forms, r_m_forms, nr_m_forms };

inline constexpr Category kAllCategories[] = {
    Category::words,    Category::content_words, Category::forms,     Category::m_forms,
    Category::nm_forms, Category::r_m_forms,     Category::nr_m_forms};

inline constexpr Category kLeafCategories[] = {Category::content_words, Category::nr_m_forms,
                                               Category::r_m_forms, Category::nm_forms};

std::string_view to_string(Category c);
bool is_leaf(Category c);
std::optional<Category> parent(Category c);
/// True if `c` equals `ancestor` or lies below it in the hierarchy.
bool is_under(Category c, Category ancestor);
bool is_form(Category c);

enum class ConceptKind { entity, action, semantic, discourse };

std::string_view to_string(ConceptKind k);

struct Concept {
  ConceptKind kind;
  std::string name;

  auto operator<=>(const Concept&) const = default;
  bool operator==(const Concept&) const = default;
};

/// `kind:name` with the file spellings entity/action/sem/disc.
std::string to_string(const Concept& c);

struct LexEntry {
  std::string word;
  Category category;
  Concept meaning;

  auto operator<=>(const LexEntry&) const = default;
  bool operator==(const LexEntry&) const = default;
};

using Lexicon = std::set<LexEntry>;

/// TSV rows `word<TAB>category<TAB>kind:name`; `#` starts a comment line.
Lexicon parse_lexicon(std::istream& in);
Lexicon parse_lexicon(std::string_view text);
Lexicon load_lexicon(const std::filesystem::path& path);

/// Only content_words entries.
Lexicon content_only(const Lexicon& lex);
/// Only form entries.
Lexicon forms_only(const Lexicon& lex);

/// Category likelihood: closure of content_words > forms, m_forms > nm_forms,
/// nr_m_forms > r_m_forms, extended downward to subclasses.
bool is_ml_ctg_closed(Category c1, Category c2);

/// Position likelihood: initial > final > medial.
bool is_ml_pos_closed(Position p1, Position p2);

struct LearnerProfile {
  std::string name;
  Lexicon lexicon;
  int capacity = 11;
  PositionParameter n{2};
};

/// Beginners know content words only; advanced learners know everything.
LearnerProfile beginner_profile(const Lexicon& full, int capacity = 11, int n = 2);
LearnerProfile advanced_profile(const Lexicon& full, int capacity = 11, int n = 2);

std::vector<LexEntry> entries_for(std::string_view word, const LearnerProfile& profile);
std::vector<LexEntry> entries_for(std::string_view word, const Lexicon& lexicon);

/// The learner knows `word` as a member of `category` (some entry exists).
bool in_category(std::string_view word, Category category, const Lexicon& lexicon);

bool has_meaning(std::string_view word, ConceptKind kind, const Lexicon& lexicon);
bool has_meaning(std::string_view word, const Concept& c, const Lexicon& lexicon);

}  // namespace inproc
