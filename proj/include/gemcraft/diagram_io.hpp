#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemcraft/heegaard.hpp"

namespace gemcraft {

/// The end of a curve arc at a crossing: the arc of `curve` leaving its
/// `position`-th crossing forward (dir = +1) or backward (dir = -1).
struct ArcEnd {
  int curve = 0;
  int position = 0;
  int dir = 1;
  bool operator==(const ArcEnd&) const = default;
};

/// Crossing-level description of a diagram: curves as cyclic crossing
/// sequences and a (signed) rotation system.
struct RotationSpec {
  int crossings = 0;
  std::vector<CurveSystem> systems;
  std::vector<std::vector<int>> curve_crossings;
  std::vector<std::array<ArcEnd, 4>> rotations;
  std::vector<std::pair<int, int>> twisted;  // arcs (curve, position) with a twist
  std::vector<std::string> labels;
  std::optional<PlanarPresentation> planar;
  std::optional<SurfaceType> declared_surface;
};

/// Builds the map by face tracing. Curves without crossings are counted as
/// free circles.
HeegaardDiagram diagram_from_rotations(const RotationSpec& spec);

/// hdiag-v1 JSON.
std::string rotation_spec_to_json(const RotationSpec& spec);
RotationSpec rotation_spec_from_json(const std::string& text);

/// Rotation system of the diagram drawn by a planar presentation.
RotationSpec rotations_from_planar(const PlanarPresentation& planar,
                                   const std::vector<std::string>& labels = {});

}  // namespace gemcraft
