#include "inproc/world.hpp"

#include <fstream>
#include <sstream>

#include "inproc/error.hpp"

namespace inproc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

Error parse_error(std::size_t line_no, const std::string& why) {
  return Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + why, line_no);
}

std::optional<Property> parse_property(const std::string& field, std::size_t line_no) {
  if (field == "animate") return Property::animate;
  if (field == "human") return Property::human;
  throw parse_error(line_no, "unknown property '" + field + "'");
}

std::optional<Property> parse_pattern(const std::string& field, std::size_t line_no) {
  if (field == "*") return std::nullopt;
  return parse_property(field, line_no);
}

const EntityDef& entity(const KnowledgeBase& kb, const std::string& name) {
  auto it = kb.entities.find(name);
  if (it == kb.entities.end()) throw Error(Errc::unknown_entity, "unknown entity '" + name + "'");
  return it->second;
}

void validate(const EventTerm& ev, const KnowledgeBase& kb) {
  if (!is_builtin_action(ev.action)) {
    throw Error(Errc::unknown_action, "unknown action '" + ev.action + "'");
  }
  entity(kb, ev.agent);
  entity(kb, ev.patient);
}

bool matches(const std::optional<Property>& pattern, const EntityDef& e) {
  return !pattern || e.has(*pattern);
}

}  // namespace

std::string to_string(const EventTerm& ev) {
  return "ev(" + ev.action + ", " + ev.agent + ", " + ev.patient + ")";
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::animate: return "animate";
    case Property::human: return "human";
  }
  return "?";
}

bool KnowledgeBase::declares(std::string_view name) const {
  return entities.contains(std::string(name));
}

const std::vector<std::string>& builtin_actions() {
  static const std::vector<std::string> actions{"bite", "kill", "push"};
  return actions;
}

bool is_builtin_action(std::string_view action) {
  for (const auto& a : builtin_actions())
    if (a == action) return true;
  return false;
}

KnowledgeBase parse_world(std::istream& in) {
  KnowledgeBase kb;
  std::vector<std::pair<std::size_t, EventTerm>> happened;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto f = split(line, '\t');
    const std::string& kind = f[0];
    if (kind == "entity") {
      if (f.size() < 2 || f.size() > 3 || f[1].empty()) {
        throw parse_error(line_no, "expected entity<TAB>name[<TAB>props]");
      }
      EntityDef def{f[1], {}};
      if (f.size() == 3 && !f[2].empty()) {
        for (const auto& p : split(f[2], ',')) def.properties.insert(*parse_property(p, line_no));
      }
      if (!kb.entities.emplace(def.name, def).second) {
        throw Error(Errc::duplicate_entry,
                    "line " + std::to_string(line_no) + ": entity '" + def.name + "' redeclared",
                    line_no);
      }
    } else if (kind == "unlikely") {
      if (f.size() != 4) throw parse_error(line_no, "expected unlikely<TAB>action<TAB>agent<TAB>patient");
      if (!is_builtin_action(f[1])) throw parse_error(line_no, "unknown action '" + f[1] + "'");
      kb.unlikely_rules.push_back({f[1], parse_pattern(f[2], line_no), parse_pattern(f[3], line_no)});
    } else if (kind == "hpd") {
      if (f.size() != 4) throw parse_error(line_no, "expected hpd<TAB>action<TAB>agent<TAB>patient");
      if (!is_builtin_action(f[1])) throw parse_error(line_no, "unknown action '" + f[1] + "'");
      happened.emplace_back(line_no, EventTerm{f[1], f[2], f[3]});
    } else {
      throw parse_error(line_no, "unknown record type '" + kind + "'");
    }
  }
  // hpd facts may precede the entity declarations they mention.
  for (auto& [at, ev] : happened) {
    if (!kb.declares(ev.agent) || !kb.declares(ev.patient)) {
      throw parse_error(at, "hpd event references an undeclared entity");
    }
    kb.happened.insert(std::move(ev));
  }
  return kb;
}

KnowledgeBase parse_world(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_world(in);
}

KnowledgeBase load_world(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open world file " + path.string());
  return parse_world(in);
}

WorldState fresh_state(const KnowledgeBase& kb) {
  WorldState state;
  for (const auto& [name, def] : kb.entities) state.alive.insert(name);
  return state;
}

bool impossible(const EventTerm& ev, const WorldState& state, const KnowledgeBase& kb) {
  validate(ev, kb);
  const EntityDef& agent = entity(kb, ev.agent);
  if (!agent.has(Property::animate)) return true;
  if (!state.alive.contains(ev.agent)) return true;
  if (ev.action == "kill" && !state.alive.contains(ev.patient)) return true;
  return false;
}

bool unlikely(const EventTerm& ev, const WorldState& /*state*/, const KnowledgeBase& kb) {
  validate(ev, kb);
  const EntityDef& agent = entity(kb, ev.agent);
  const EntityDef& patient = entity(kb, ev.patient);
  for (const auto& rule : kb.unlikely_rules) {
    if (rule.action == ev.action && matches(rule.agent, agent) && matches(rule.patient, patient)) {
      return true;
    }
  }
  return false;
}

bool hpd(const EventTerm& ev, const KnowledgeBase& kb) { return kb.happened.contains(ev); }

WorldState apply_effects(const WorldState& state, const EventTerm& ev, const KnowledgeBase& kb) {
  validate(ev, kb);
  WorldState next = state;
  ++next.step;
  if (ev.action == "kill") next.alive.erase(ev.patient);
  return next;
}

}  // namespace inproc
