#include "inproc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "inproc/error.hpp"

namespace inproc::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string learner = "advanced";
  int capacity = 11;
  int n = 2;
  std::string lexicon;
  std::string world;
  std::string text;
  std::string format = "text";
};

Format parse_format(const std::string& f) { return f == "structured" ? Format::structured : Format::text; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string atom_text(const MapAtom& a) {
  std::ostringstream os;
  os << "(" << a.k << ", " << a.sentence << ", " << to_string(a.category) << ", " << a.meaning.name
     << ")";
  return os.str();
}

json atom_json(const MapAtom& a, const std::string& type, std::size_t model) {
  return {{"type", type},
          {"model", model},
          {"k", a.k},
          {"sentence", a.sentence},
          {"category", std::string(to_string(a.category))},
          {"concept", to_string(a.meaning)}};
}

json opt_event(const std::optional<EventTerm>& ev) {
  return ev ? json(to_string(*ev)) : json(nullptr);
}

std::vector<std::string> evidence_facts(const ExtractedMeaning& m) {
  std::vector<std::string> facts;
  if (!m.dir_rev) return facts;
  const auto& [dir, rev] = *m.dir_rev;
  const std::string step = std::to_string(m.step);
  const auto& e = m.evidence;
  if (e.dir_impossible) facts.push_back("impossible(" + to_string(dir) + ", " + step + ")");
  if (e.rev_impossible) facts.push_back("impossible(" + to_string(rev) + ", " + step + ")");
  if (e.dir_unlikely) facts.push_back("unlikely(" + to_string(dir) + ", " + step + ")");
  if (e.rev_unlikely) facts.push_back("unlikely(" + to_string(rev) + ", " + step + ")");
  if (e.dir_hpd) facts.push_back("hpd(" + to_string(dir) + ")");
  if (e.rev_hpd) facts.push_back("hpd(" + to_string(rev) + ")");
  return facts;
}

std::string routes_text(const ValuableVerdict& v) {
  if (!v.note.empty()) return v.note;
  return "fnp: " + to_string(*v.fnp_event) + " [" + std::string(to_string(v.fnp_strategy)) +
         "]; grm_cues: " + to_string(*v.cue_event);
}

json verdict_json(const ValuableVerdict& v) {
  return {{"type", "valuable"},
          {"target", v.target},
          {"valuable", v.valuable},
          {"fnp_event", opt_event(v.fnp_event)},
          {"fnp_strategy", std::string(to_string(v.fnp_strategy))},
          {"cue_event", opt_event(v.cue_event)},
          {"note", v.note}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open text " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LearnerProfile make_profile(const RunConfig& cfg, const Lexicon& lex) {
  return cfg.learner == "beginner" ? beginner_profile(lex, cfg.capacity, cfg.n)
                                   : advanced_profile(lex, cfg.capacity, cfg.n);
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const Lexicon lex = load_lexicon(cfg.lexicon);
  if (cfg.command == "generate") {
    render_generated(out, generate_valuable(load_world(cfg.world), lex), format);
    return kOk;
  }
  const Paragraph p = encode_text(read_file(cfg.text));
  if (cfg.command == "p1map") {
    const LearnerProfile profile = make_profile(cfg, lex);
    for (const auto& s : p.sentences) render_p1map(out, s, enumerate_p1_models(s, profile), format);
    return kOk;
  }
  const KnowledgeBase kb = load_world(cfg.world);
  if (cfg.command == "interpret") {
    render_interpretation(out, interpret_paragraph(p, make_profile(cfg, lex), kb, lex), format);
  } else {
    render_check(out, check_paragraph(p, kb, lex), format);
  }
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::empty_text:
    case Errc::empty_sentence:
    case Errc::parse_error:
    case Errc::unknown_category:
    case Errc::duplicate_entry:
    case Errc::io_error: return kInputError;
    default: return kInterpretError;
  }
}

}  // namespace

void render_p1map(std::ostream& out, const Sentence& s, const std::vector<P1Model>& models,
                  Format format) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::size_t index = i + 1;
    if (format == Format::structured) {
      out << json{{"type", "answer_set"}, {"sentence", s.id}, {"model", index},
                  {"count", models.size()}}.dump()
          << '\n';
      for (const auto& a : models[i].atoms) out << atom_json(a, "map", index).dump() << '\n';
      for (const auto& a : models[i].skipped) out << atom_json(a, "skipped", index).dump() << '\n';
      continue;
    }
    out << "% answer set " << index << " of " << models.size() << " for " << s.id << '\n';
    for (const auto& a : models[i].atoms) out << "map" << atom_text(a) << '\n';
    for (const auto& a : models[i].skipped) out << "% skipped map" << atom_text(a) << '\n';
  }
}

void render_interpretation(std::ostream& out, const std::vector<ExtractedMeaning>& meanings,
                           Format format) {
  for (const auto& m : meanings) {
    const auto facts = evidence_facts(m);
    if (format == Format::structured) {
      out << json{{"type", "extr_m"},
                  {"sentence", m.sentence},
                  {"step", m.step},
                  {"voice", std::string(to_string(m.voice))},
                  {"event", opt_event(m.event)},
                  {"route", m.event ? json(std::string(route_name(m.strategy))) : json(nullptr)},
                  {"strategy", m.event ? json(std::string(to_string(m.strategy))) : json(nullptr)},
                  {"correct_event", opt_event(m.correct)},
                  {"correct", m.is_correct()},
                  {"facts", facts}}
                 .dump()
          << '\n';
      continue;
    }
    if (m.event) {
      out << "extr_m(" << to_string(*m.event) << ", " << m.sentence << ")\n";
      out << "extr_m_by(" << m.sentence << ", " << route_name(m.strategy) << ")\n";
      out << "strategy(" << m.sentence << ", " << to_string(m.strategy) << ")\n";
    } else {
      out << "no_interpretation(" << m.sentence << ")\n";
    }
    for (const auto& f : facts) out << f << '\n';
    out << "correct(" << m.sentence << ", " << yes_no(m.is_correct()) << ")\n";
  }
}

void render_check(std::ostream& out, const ParagraphVerdict& verdict, Format format) {
  for (const auto& v : verdict.sentences) {
    if (format == Format::structured) {
      out << verdict_json(v).dump() << '\n';
    } else {
      out << "valuable(" << v.target << ") = " << (v.valuable ? "true" : "false") << "  % "
          << routes_text(v) << '\n';
    }
  }
  if (format == Format::structured) {
    out << json{{"type", "paragraph"}, {"target", verdict.target}, {"valuable", verdict.valuable}}
               .dump()
        << '\n';
  } else {
    out << "valuable(" << verdict.target << ") = " << (verdict.valuable ? "true" : "false") << '\n';
  }
}

void render_generated(std::ostream& out, const std::vector<GeneratedSentence>& sentences,
                      Format format) {
  for (const auto& g : sentences) {
    if (format == Format::structured) {
      json j = verdict_json(g.verdict);
      j["type"] = "generated";
      j["text"] = g.text;
      out << j.dump() << '\n';
    } else {
      out << g.text << "  % " << routes_text(g.verdict) << '\n';
    }
  }
}

std::string reformat_structured(std::string_view structured) {
  std::istringstream in{std::string(structured)};
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << json::parse(line).dump() << '\n';
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Input Processing predictions for controlled English text", "inproc"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    bool text;
    bool world;
  };
  constexpr Command commands[] = {
      {"p1map", "Principle-1 word-to-concept mappings (all answer sets)", true, false},
      {"interpret", "Extracted event meaning per sentence", true, true},
      {"check", "Whether sentences and the paragraph are valuable teaching material", true, true},
      {"generate", "All valuable passive sentences over the vocabulary", false, true},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--learner", cfg.learner, "beginner or advanced")
        ->check(CLI::IsMember({"beginner", "advanced"}))
        ->capture_default_str();
    sub->add_option("--capacity", cfg.capacity, "processing resource units")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--n", cfg.n, "words in the initial/final position")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--lexicon", cfg.lexicon, "lexicon TSV")->required();
    auto* world = sub->add_option("--world", cfg.world, "world knowledge TSV");
    if (c.world) world->required();
    auto* text = sub->add_option("--text", cfg.text, "input paragraph");
    if (c.text) text->required();
    sub->add_option("--format", cfg.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace inproc::cli
