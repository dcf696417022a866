#pragma once

#include "lics/catalog.hpp"
#include "lics/moduli.hpp"
#include "lics/plucker.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lics {

/// A declared limit point to measure a path against.
struct PathTarget {
  std::string label;
  Subspace point;
};

struct PathPoint {
  std::vector<Param> params;
  std::optional<std::string> error;  // set when the family degenerates here
  std::optional<Subspace> subspace;
  bool in_V = false;
  std::optional<std::size_t> k;
  std::optional<StructureKind> kind;
  std::optional<PluckerVector> plucker;
};

struct TargetTrack {
  std::string label;
  std::vector<std::optional<double>> distances;
  bool strictly_decreasing = false;
  std::optional<double> final_distance;
  bool converged = false;  // strictly decreasing and final distance < tolerance
};

struct PathReport {
  std::string family;
  double tolerance = 0.0;
  std::vector<PathPoint> points;
  std::vector<std::optional<double>> step_distances;  // between consecutive points
  std::vector<TargetTrack> targets;
  std::optional<std::string> attained;  // the unique converged target
  std::optional<std::string> nearest;   // the target with the smallest final distance
};

/// Evaluates the family along `values`. Degenerate parameters are recorded
/// per point and never abort the path.
PathReport path_classify(const ParamFamily& family, const std::vector<std::vector<Param>>& values,
                         const std::vector<PathTarget>& targets, double tolerance);

}  // namespace lics
