#pragma once

// Serialization of fans, surface resolutions and McKay data to JSON, the SVG
// drawing of a fan in the junior simplex, and the aggregate verification
// report over every invariant family.

#include "mckay/labels.hpp"
#include "mckay/surface.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mckay {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Bare exponent array.
Json monomial_json(const Monomial& m);
/// [num..., den]
Json point_json(const LatticePoint& p);

Json group_json(const GroupSpec& g);

/// {"schema_version", "group", "vertices", "cones", "edges", "tripods"}.
Json fan_to_json(const Fan3& f);
/// Inverse of fan_to_json; the tripods key is optional. Throws ParseError on
/// malformed input and DomainError on points outside L.
Fan3 fan_from_json(const Json& j);

/// fan_to_json with labels on interior edges plus surfaces, bundles, pairs and
/// the table.
Json correspondence_to_json(const Fan3& f, const Correspondence& c);

Json surface_to_json(const SurfaceResolution& s);

/// Junior simplex drawn in an equilateral triangle of side 1000 with x at the
/// top, y bottom left and z bottom right. Interior edges carry their label
/// character, hexagon stars are shaded. Coordinates use fixed two-decimal
/// formatting, so the output is byte-identical across runs.
std::string emit_svg(const Fan3& f);

enum class CheckStatus { Pass, Warn, Fail, Skip };
std::string_view status_name(CheckStatus s);

struct VerifyItem {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyReport {
  std::string group;
  std::vector<VerifyItem> items;

  /// No item failed; warnings and skips are allowed.
  bool ok() const;
  const VerifyItem* find(std::string_view name) const;
  std::string to_string() const;
  Json to_json() const;
};

struct VerifyOptions {
  std::size_t max_order = 200;
  unsigned threads = 1;
};

/// Builds the fan and the correspondence and records pass, warn or fail per
/// family: the fan's structural checks, chart agreement, dual basis,
/// nefness, hexagon relations, c2 normalization, module-product witnesses and
/// the stringy Euler number. Exceptions inside a family become failures.
VerifyReport verify_all(const GroupSpec& g, const VerifyOptions& opts = {});

}  // namespace mckay
