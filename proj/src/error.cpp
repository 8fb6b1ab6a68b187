#include "inproc/error.hpp"

namespace inproc {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::empty_text: return "EmptyText";
    case Errc::empty_sentence: return "EmptySentence";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_category: return "UnknownCategory";
    case Errc::duplicate_entry: return "DuplicateEntry";
    case Errc::unknown_entity: return "UnknownEntity";
    case Errc::unknown_action: return "UnknownAction";
    case Errc::no_interpretation: return "NoInterpretation";
    case Errc::unrecognized_template: return "UnrecognizedTemplate";
    case Errc::io_error: return "IOError";
  }
  return "Unknown";
}

}  // namespace inproc
