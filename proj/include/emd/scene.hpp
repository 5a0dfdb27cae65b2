#pragma once

#include <string>
#include <vector>

#include "emd/geometry.hpp"

namespace emd {

enum class SideKind { Points, Segments, Triangles, Simplices };

const char* side_kind_name(SideKind k);

struct WeightedPoint {
  Vec position;
  double mass = 0.0;
};

/// One of the two mass distributions: weighted points, or uniform-density
/// geometric objects whose mass is their measure.
struct MassSide {
  SideKind kind = SideKind::Points;
  std::vector<WeightedPoint> points;   // kind == Points
  std::vector<SegmentGeom> segments;   // kind == Segments
  std::vector<SimplexGeom> simplices;  // kind == Triangles or Simplices

  int object_count() const;
  double total_mass() const;
  /// Mass of one object (point weight or geometric measure).
  double object_mass(int index) const;
};

struct MassScene {
  MassSide sideP, sideS;
  Metric metric = Metric::L2;
  int dimension = 2;
  /// input distance = scale_factor * normalized distance
  double scale_factor = 1.0;
  /// per-side total mass of the original input (before weight normalization)
  double total_input_mass = 1.0;
  /// longest object edge after normalization (the grid pitch)
  double longest_edge = 0.0;
};

struct LoadOptions {
  bool rebalance = false;
};

MassScene load_scene(const std::string& text, const LoadOptions& opt = {});
MassScene load_scene_file(const std::string& path, const LoadOptions& opt = {});
std::string scene_to_json(const MassScene& scene);

/// Scales coordinates so each side's total mass is one. Idempotent.
MassScene normalize(const MassScene& scene);

}  // namespace emd
