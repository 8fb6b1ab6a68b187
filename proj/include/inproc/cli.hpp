#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "inproc/pias.hpp"
#include "inproc/principle1.hpp"
#include "inproc/principle2.hpp"

namespace inproc::cli {

enum class Format { text, structured };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInterpretError = 3;

// Renderers. Text output uses the logic-program atom notation; structured
// output is JSON Lines with sorted keys, one record per line.
void render_p1map(std::ostream& out, const Sentence& s, const std::vector<P1Model>& models,
                  Format format);
void render_interpretation(std::ostream& out, const std::vector<ExtractedMeaning>& meanings,
                           Format format);
void render_check(std::ostream& out, const ParagraphVerdict& verdict, Format format);
void render_generated(std::ostream& out, const std::vector<GeneratedSentence>& sentences,
                      Format format);

/// Parses structured output line by line and serializes it again.
std::string reformat_structured(std::string_view structured);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inproc::cli
