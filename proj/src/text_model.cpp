#include "inproc/text_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "inproc/error.hpp"

namespace inproc {

namespace {

constexpr std::string_view kStripped = ",.!?;:";

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

std::vector<std::string> tokenize(std::string_view chunk) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(chunk)};
  std::string raw;
  while (in >> raw) {
    std::string token;
    for (char c : raw) {
      if (kStripped.find(c) != std::string_view::npos) continue;
      token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (!token.empty()) tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

std::string_view to_string(Position p) {
  switch (p) {
    case Position::initial: return "initial";
    case Position::medial: return "medial";
    case Position::final: return "final";
  }
  return "?";
}

const std::string& Sentence::word(std::size_t k) const {
  if (k < 1 || k > tokens.size()) {
    throw Error(Errc::index_out_of_range, "word index " + std::to_string(k) +
                                              " outside sentence " + id + " of length " +
                                              std::to_string(tokens.size()));
  }
  return tokens[k - 1];
}

PositionParameter::PositionParameter(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("position parameter n must be >= 1");
}

Paragraph encode_text(std::string_view raw, std::string_view paragraph_id,
                      std::string_view sentence_prefix) {
  Paragraph p{std::string(paragraph_id), {}};
  std::size_t start = 0;
  auto emit = [&](std::string_view chunk) {
    Sentence s;
    s.id = std::string(sentence_prefix) + std::to_string(p.sentences.size() + 1);
    s.tokens = tokenize(chunk);
    p.sentences.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!is_terminal(raw[i])) continue;
    std::string_view chunk = raw.substr(start, i - start);
    // "?!" and "..." close a single sentence.
    if (tokenize(chunk).empty() && i > 0 && is_terminal(raw[i - 1]) && !p.sentences.empty()) {
      start = i + 1;
      continue;
    }
    if (tokenize(chunk).empty()) {
      throw Error(Errc::empty_sentence, "sentence " + std::to_string(p.sentences.size() + 1) +
                                            " has no words");
    }
    emit(chunk);
    start = i + 1;
  }
  if (start < raw.size()) {
    std::string_view tail = raw.substr(start);
    if (!tokenize(tail).empty()) emit(tail);
  }
  if (p.sentences.empty()) throw Error(Errc::empty_text, "text contains no words");
  return p;
}

Position position_of(std::size_t k, const Sentence& s, PositionParameter n) {
  if (k < 1 || k > s.size()) {
    throw Error(Errc::index_out_of_range, "word index " + std::to_string(k) +
                                              " outside sentence " + s.id);
  }
  const auto width = static_cast<std::size_t>(n.value());
  if (k <= width) return Position::initial;
  if (k + width > s.size()) return Position::final;
  return Position::medial;
}

}  // namespace inproc
