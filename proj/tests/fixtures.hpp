#pragma once

#include <string>

#include "inproc/lexicon.hpp"
#include "inproc/text_model.hpp"
#include "inproc/world.hpp"

namespace inproc::testing {

inline std::string data_path(const std::string& rel) { return std::string(INPROC_DATA_DIR) + "/" + rel; }

inline const Lexicon& shipped_lexicon() {
  static const Lexicon lex = load_lexicon(data_path("lexicon.tsv"));
  return lex;
}

inline const KnowledgeBase& shipped_world() {
  static const KnowledgeBase kb = load_world(data_path("world.tsv"));
  return kb;
}

inline Sentence sentence(const std::string& text) { return encode_text(text).sentences.front(); }

inline const char* const kS1 = "The cat was bitten by the dog.";
inline const char* const kS2 = "The shoe was bitten by the dog.";
inline const char* const kS3 = "The man was bitten by the dog.";
inline const char* const kS4 = "Holyfield was bitten by Tyson.";
inline const char* const kP1 = "The cat pushed the dog. Then, the dog was bitten by the cat.";
inline const char* const kP2 = "The cat killed the dog. Then, the dog was pushed by the cat.";
inline const char* const kRabbit = "The ball was pushed by the rabbit.";

}  // namespace inproc::testing
