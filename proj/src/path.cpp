#include "lics/path.hpp"

#include "lics/error.hpp"

namespace lics {

namespace {

PathPoint evaluate_point(const ParamFamily& family, const std::vector<Param>& params) {
  PathPoint pt;
  pt.params = params;
  try {
    const LieAlgebra g = family.algebra(params);
    Subspace t = evaluate_family(family, params);
    pt.k = stratum(g, t);
    pt.plucker = plucker(t);
    pt.in_V = involutive(g, t);
    if (pt.in_V) pt.kind = *pt.k == 0 ? StructureKind::Complex : StructureKind::CRFoliation;
    pt.subspace = std::move(t);
  } catch (const Error& e) {
    pt.error = e.what();
  }
  return pt;
}

std::optional<double> distance(const std::optional<PluckerVector>& a, const std::optional<PluckerVector>& b) {
  if (!a || !b || a->coordinates.size() != b->coordinates.size()) return std::nullopt;
  return fubini_study(*a, *b);
}

}  // namespace

PathReport path_classify(const ParamFamily& family, const std::vector<std::vector<Param>>& values,
                         const std::vector<PathTarget>& targets, double tolerance) {
  PathReport report;
  report.family = family.name;
  report.tolerance = tolerance;
  for (const auto& params : values) report.points.push_back(evaluate_point(family, params));

  for (std::size_t i = 1; i < report.points.size(); ++i) {
    report.step_distances.push_back(distance(report.points[i - 1].plucker, report.points[i].plucker));
  }

  for (const auto& target : targets) {
    TargetTrack track;
    track.label = target.label;
    const std::optional<PluckerVector> tp = plucker(target.point);
    for (const auto& pt : report.points) track.distances.push_back(distance(pt.plucker, tp));
    bool all_present = !track.distances.empty();
    for (const auto& d : track.distances) all_present = all_present && d.has_value();
    track.final_distance = track.distances.empty() ? std::nullopt : track.distances.back();
    if (all_present && track.distances.size() >= 2) {
      track.strictly_decreasing = true;
      for (std::size_t i = 1; i < track.distances.size(); ++i) {
        if (!(*track.distances[i] < *track.distances[i - 1])) track.strictly_decreasing = false;
      }
    }
    track.converged = track.strictly_decreasing && track.final_distance && *track.final_distance < tolerance;
    report.targets.push_back(std::move(track));
  }

  std::size_t converged = 0;
  for (const auto& t : report.targets) {
    if (t.converged) {
      ++converged;
      report.attained = t.label;
    }
  }
  if (converged != 1) report.attained.reset();

  const TargetTrack* best = nullptr;
  bool tie = false;
  for (const auto& t : report.targets) {
    if (!t.final_distance) continue;
    if (!best || *t.final_distance < *best->final_distance) {
      best = &t;
      tie = false;
    } else if (*t.final_distance == *best->final_distance) {
      tie = true;
    }
  }
  if (best && !tie) report.nearest = best->label;
  return report;
}

}  // namespace lics
