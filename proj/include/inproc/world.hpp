#pragma once

#include <compare>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace inproc {

struct EventTerm {
  std::string action;
  std::string agent;
  std::string patient;

  auto operator<=>(const EventTerm&) const = default;
  bool operator==(const EventTerm&) const = default;
};

/// `ev(action, agent, patient)`
std::string to_string(const EventTerm& ev);

enum class Property { animate, human };

std::string_view to_string(Property p);

struct EntityDef {
  std::string name;
  std::set<Property> properties;

  bool has(Property p) const { return properties.contains(p); }
  bool operator==(const EntityDef&) const = default;
};

/// Matches events of `action` whose agent/patient carry the given flag;
/// nullopt is the wildcard.
struct UnlikelyRule {
  std::string action;
  std::optional<Property> agent;
  std::optional<Property> patient;

  auto operator<=>(const UnlikelyRule&) const = default;
  bool operator==(const UnlikelyRule&) const = default;
};

struct KnowledgeBase {
  std::map<std::string, EntityDef> entities;
  std::vector<UnlikelyRule> unlikely_rules;
  std::set<EventTerm> happened;

  bool declares(std::string_view entity) const;
};

struct WorldState {
  int step = 1;
  std::set<std::string> alive;

  bool operator==(const WorldState&) const = default;
};

/// bite, push and kill.
const std::vector<std::string>& builtin_actions();
bool is_builtin_action(std::string_view action);

KnowledgeBase parse_world(std::istream& in);
KnowledgeBase parse_world(std::string_view text);
KnowledgeBase load_world(const std::filesystem::path& path);

/// Step 1, every declared entity alive.
WorldState fresh_state(const KnowledgeBase& kb);

/// Executability: the agent must be animate and alive; kill also needs a
/// living patient.
bool impossible(const EventTerm& ev, const WorldState& state, const KnowledgeBase& kb);

/// Some unlikely pattern matches. Does not consult impossibility.
bool unlikely(const EventTerm& ev, const WorldState& state, const KnowledgeBase& kb);

bool hpd(const EventTerm& ev, const KnowledgeBase& kb);

/// Advances one step; kill removes the patient from the living.
WorldState apply_effects(const WorldState& state, const EventTerm& ev, const KnowledgeBase& kb);

}  // namespace inproc
