#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ifr {

enum class Actor { Government, Business, Citizens };
enum class Theme { Resilience, AdaptiveCapacity };
enum class Orientation { Positive, Negative };

inline constexpr std::array<Actor, 3> kActors = {Actor::Government, Actor::Business,
                                                  Actor::Citizens};
inline constexpr std::array<Theme, 2> kThemes = {Theme::Resilience, Theme::AdaptiveCapacity};

std::string_view to_string(Actor actor);
std::string_view to_string(Theme theme);
std::string_view to_string(Orientation orientation);

/// One cell of the actor x theme matrix. The code (GR, GA, ...) is a pure
/// function of the pair, so only the six valid elements are representable.
class ElementId {
 public:
  constexpr ElementId(Actor actor, Theme theme) : actor_(actor), theme_(theme) {}

  constexpr Actor actor() const { return actor_; }
  constexpr Theme theme() const { return theme_; }

  /// Position in canonical order GR, GA, BR, BA, CR, CA.
  constexpr std::size_t index() const {
    return static_cast<std::size_t>(actor_) * 2 + static_cast<std::size_t>(theme_);
  }

  std::string_view code() const;
  std::string_view name() const;  // "Government Resilience", ...

  static std::optional<ElementId> from_code(std::string_view code);
  static constexpr ElementId from_index(std::size_t i) {
    return ElementId(static_cast<Actor>(i / 2), static_cast<Theme>(i % 2));
  }

  friend constexpr bool operator==(ElementId, ElementId) = default;

 private:
  Actor actor_;
  Theme theme_;
};

inline constexpr std::size_t kElementCount = 6;

inline constexpr std::array<ElementId, kElementCount> kElements = {
    ElementId::from_index(0), ElementId::from_index(1), ElementId::from_index(2),
    ElementId::from_index(3), ElementId::from_index(4), ElementId::from_index(5)};

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct IndicatorDef {
  std::string id;
  std::string display_name;
  std::string sub_element_id;
  Orientation orientation = Orientation::Positive;
  std::string units;
  std::optional<Bounds> fixed_bounds;
  // Orientation is a judgement call the source framework does not settle.
  bool orientation_provisional = false;

  friend bool operator==(const IndicatorDef&, const IndicatorDef&) = default;
};

struct SubElementDef {
  std::string id;
  ElementId element{Actor::Government, Theme::Resilience};
  std::string display_name;
  std::vector<std::string> indicator_ids;

  friend bool operator==(const SubElementDef&, const SubElementDef&) = default;
};

/// The index taxonomy: elements -> sub-elements -> indicators. Element
/// membership is carried by each sub-element; the six elements themselves
/// are fixed by the type system.
struct HierarchySpec {
  std::string name;
  std::string version;
  std::vector<SubElementDef> sub_elements;
  std::vector<IndicatorDef> indicators;

  const IndicatorDef* find_indicator(std::string_view id) const;
  const SubElementDef* find_sub_element(std::string_view id) const;
  std::vector<const SubElementDef*> sub_elements_of(ElementId element) const;

  friend bool operator==(const HierarchySpec&, const HierarchySpec&) = default;
};

struct Diagnostic {
  std::string subject;  // offending id (element code, sub-element or indicator id)
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

/// Checks every structural invariant. Empty iff the spec is valid; otherwise
/// one diagnostic per violation, sorted by subject id.
std::vector<Diagnostic> validate_hierarchy(const HierarchySpec& spec);

/// The shipped default taxonomy: 6 elements, 29 sub-elements, 99 indicators.
HierarchySpec build_default_ifr_hierarchy();

inline constexpr std::size_t kDefaultSubElementCount = 29;
inline constexpr std::size_t kDefaultIndicatorCount = 99;

/// JSON hierarchy document. parse throws SyntaxError for malformed text and
/// SemanticError for invariant violations (naming the offending id).
HierarchySpec parse_hierarchy(std::string_view text);
std::string serialize_hierarchy(const HierarchySpec& spec);

}  // namespace ifr
