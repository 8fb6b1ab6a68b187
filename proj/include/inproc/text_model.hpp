#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace inproc {

enum class Position { initial, medial, final };

std::string_view to_string(Position p);

struct Sentence {
  std::string id;
  std::vector<std::string> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  // 1-indexed access; throws Error(index_out_of_range).
  const std::string& word(std::size_t k) const;

  bool operator==(const Sentence&) const = default;
};

struct Paragraph {
  std::string id;
  std::vector<Sentence> sentences;

  bool operator==(const Paragraph&) const = default;
};

/// Number of words counted as sentence-initial (and, symmetrically,
/// sentence-final). Always >= 1.
class PositionParameter {
 public:
  explicit PositionParameter(int n);
  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Split controlled-English text into sentences on '.', '!' and '?'.
/// Tokens are whitespace-separated, lowercased, with ",.!?;:" removed.
/// Sentences are named `<prefix>1`, `<prefix>2`, ...
Paragraph encode_text(std::string_view raw, std::string_view paragraph_id = "p",
                      std::string_view sentence_prefix = "s");

/// Initial if k <= n, final if k > len - n, medial otherwise.
/// Initial wins when the two ranges overlap.
Position position_of(std::size_t k, const Sentence& s, PositionParameter n);

}  // namespace inproc
