#include "inproc/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "inproc/error.hpp"

namespace inproc {

namespace {

constexpr std::size_t kCategoryCount = std::size(kAllCategories);

std::size_t index_of(Category c) { return static_cast<std::size_t>(c); }

using Relation = std::array<std::array<bool, kCategoryCount>, kCategoryCount>;

// Base likelihood facts extended down to subclasses on both sides, then
// closed transitively.
Relation build_category_order() {
  constexpr std::pair<Category, Category> base[] = {
      {Category::content_words, Category::forms},
      {Category::m_forms, Category::nm_forms},
      {Category::nr_m_forms, Category::r_m_forms},
  };
  Relation rel{};
  for (auto [hi, lo] : base) {
    for (Category a : kAllCategories) {
      for (Category b : kAllCategories) {
        if (is_under(a, hi) && is_under(b, lo)) rel[index_of(a)][index_of(b)] = true;
      }
    }
  }
  for (std::size_t k = 0; k < kCategoryCount; ++k)
    for (std::size_t i = 0; i < kCategoryCount; ++i)
      for (std::size_t j = 0; j < kCategoryCount; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  return rel;
}

const Relation& category_order() {
  static const Relation rel = build_category_order();
  return rel;
}

int position_rank(Position p) {
  switch (p) {
    case Position::initial: return 0;
    case Position::final: return 1;
    case Position::medial: return 2;
  }
  return 3;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Category parse_category(const std::string& field, std::size_t line_no) {
  if (field == "content") return Category::content_words;
  if (field == "nr_m_form") return Category::nr_m_forms;
  if (field == "r_m_form") return Category::r_m_forms;
  if (field == "nm_form") return Category::nm_forms;
  throw Error(Errc::unknown_category,
              "line " + std::to_string(line_no) + ": unknown category '" + field + "'", line_no);
}

Concept parse_concept(const std::string& field, std::size_t line_no) {
  auto colon = field.find(':');
  auto fail = [&](const std::string& why) {
    return Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + why, line_no);
  };
  if (colon == std::string::npos) throw fail("concept '" + field + "' is not kind:name");
  std::string kind = field.substr(0, colon);
  std::string name = field.substr(colon + 1);
  if (name.empty()) throw fail("concept name is empty");
  if (kind == "entity") return {ConceptKind::entity, name};
  if (kind == "action") return {ConceptKind::action, name};
  if (kind == "sem") return {ConceptKind::semantic, name};
  if (kind == "disc") return {ConceptKind::discourse, name};
  throw fail("unknown concept kind '" + kind + "'");
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::words: return "words";
    case Category::content_words: return "content_words";
    case Category::forms: return "forms";
    case Category::m_forms: return "m_forms";
    case Category::nm_forms: return "nm_forms";
    case Category::r_m_forms: return "r_m_forms";
    case Category::nr_m_forms: return "nr_m_forms";
  }
  return "?";
}

bool is_leaf(Category c) {
  return c == Category::content_words || c == Category::nm_forms || c == Category::r_m_forms ||
         c == Category::nr_m_forms;
}

std::optional<Category> parent(Category c) {
  switch (c) {
    case Category::words: return std::nullopt;
    case Category::content_words:
    case Category::forms: return Category::words;
    case Category::m_forms:
    case Category::nm_forms: return Category::forms;
    case Category::r_m_forms:
    case Category::nr_m_forms: return Category::m_forms;
  }
  return std::nullopt;
}

bool is_under(Category c, Category ancestor) {
  for (std::optional<Category> cur = c; cur; cur = parent(*cur)) {
    if (*cur == ancestor) return true;
  }
  return false;
}

bool is_form(Category c) { return is_under(c, Category::forms); }

std::string_view to_string(ConceptKind k) {
  switch (k) {
    case ConceptKind::entity: return "entity";
    case ConceptKind::action: return "action";
    case ConceptKind::semantic: return "sem";
    case ConceptKind::discourse: return "disc";
  }
  return "?";
}

std::string to_string(const Concept& c) { return std::string(to_string(c.kind)) + ":" + c.name; }

Lexicon parse_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim_cr(std::move(line));
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3 || fields[0].empty()) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected word<TAB>category<TAB>concept",
                  line_no);
    }
    if (fields[0].find_first_of(" \t") != std::string::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": word has whitespace",
                  line_no);
    }
    LexEntry entry{fields[0], parse_category(fields[1], line_no),
                   parse_concept(fields[2], line_no)};
    if (!lex.insert(std::move(entry)).second) {
      throw Error(Errc::duplicate_entry, "line " + std::to_string(line_no) + ": duplicate entry",
                  line_no);
    }
  }
  return lex;
}

Lexicon parse_lexicon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_lexicon(in);
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open lexicon " + path.string());
  return parse_lexicon(in);
}

Lexicon content_only(const Lexicon& lex) {
  Lexicon out;
  for (const auto& e : lex)
    if (e.category == Category::content_words) out.insert(e);
  return out;
}

Lexicon forms_only(const Lexicon& lex) {
  Lexicon out;
  for (const auto& e : lex)
    if (is_form(e.category)) out.insert(e);
  return out;
}

bool is_ml_ctg_closed(Category c1, Category c2) {
  return category_order()[index_of(c1)][index_of(c2)];
}

bool is_ml_pos_closed(Position p1, Position p2) { return position_rank(p1) < position_rank(p2); }

LearnerProfile beginner_profile(const Lexicon& full, int capacity, int n) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  return {"beginner", content_only(full), capacity, PositionParameter{n}};
}

LearnerProfile advanced_profile(const Lexicon& full, int capacity, int n) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  return {"advanced", full, capacity, PositionParameter{n}};
}

std::vector<LexEntry> entries_for(std::string_view word, const Lexicon& lexicon) {
  std::vector<LexEntry> out;
  for (const auto& e : lexicon)
    if (e.word == word) out.push_back(e);
  return out;
}

std::vector<LexEntry> entries_for(std::string_view word, const LearnerProfile& profile) {
  return entries_for(word, profile.lexicon);
}

bool in_category(std::string_view word, Category category, const Lexicon& lexicon) {
  for (const auto& e : lexicon)
    if (e.word == word && e.category == category) return true;
  return false;
}

bool has_meaning(std::string_view word, ConceptKind kind, const Lexicon& lexicon) {
  for (const auto& e : lexicon)
    if (e.word == word && e.meaning.kind == kind) return true;
  return false;
}

bool has_meaning(std::string_view word, const Concept& c, const Lexicon& lexicon) {
  for (const auto& e : lexicon)
    if (e.word == word && e.meaning == c) return true;
  return false;
}

}  // namespace inproc
