#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace punchline {

// Index of an atom within its universe. Comparison is by index; two
// universes never share ids.
struct AtomId {
  std::uint32_t value = 0;
  friend auto operator<=>(AtomId, AtomId) = default;
};

// Ordered set of named propositional atoms. Declaration order is the
// canonical order: atom k owns bit k of an interpretation index.
//
// The universe is capped at 24 atoms so that exhaustive enumeration
// (2^n interpretations) stays tractable.
class AtomUniverse {
 public:
  static constexpr std::size_t kMaxAtoms = 24;

  AtomUniverse() = default;
  explicit AtomUniverse(const std::vector<std::string>& names);

  // Returns the existing id or adds the atom at the end.
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;

  const std::string& name(AtomId id) const { return names_[id.value]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  // Number of interpretations, 2^size().
  std::uint32_t world_count() const { return std::uint32_t{1} << names_.size(); }

  // True iff the string is a well-formed atom name:
  // letter or underscore followed by letters, digits or underscores.
  static bool valid_name(std::string_view name);

  friend bool operator==(const AtomUniverse&, const AtomUniverse&) = default;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace punchline
