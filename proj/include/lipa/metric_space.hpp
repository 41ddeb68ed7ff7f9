#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace lipa {

enum class Openness { kOpen, kClosed };

// Role tag for a point set: source set A, compact nest level, ball query
// result, or a support set.
enum class SetRole { kA, kCompact, kBall, kSupport };

// Sorted set of point indices into a space.
struct PointSet {
  std::vector<int> indices;
  SetRole role = SetRole::kA;

  bool contains(int i) const;
  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
};

// Normalizes (sorts, dedups) and validates indices against [0, n_points).
PointSet make_point_set(std::vector<int> indices, SetRole role, int n_points);

// Minkowski metric with exponent q in [1, inf]; q = infinity means the max
// norm.
struct MinkowskiMetric {
  double q = 2.0;
};

// Explicit symmetric distance matrix, row-major n*n entries.
struct MatrixMetric {
  std::vector<double> entries;
};

using MetricSpec = std::variant<MinkowskiMetric, MatrixMetric>;

double minkowski_distance(std::span<const double> a, std::span<const double> b, double q);

// How the metric axioms were checked at construction time. Above
// kFullTriangleLimit points the triangle inequality is verified on
// kSampledTriples uniformly sampled triples with a fixed seed instead of
// all O(n^3) of them.
struct ValidationReport {
  bool exhaustive_triangle = false;
  std::uint64_t sample_seed = 0;
  std::size_t triangle_checks = 0;
};

inline constexpr int kFullTriangleLimit = 500;
inline constexpr std::size_t kSampledTriples = 1'000'000;
inline constexpr std::uint64_t kValidationSeed = 0x5b1cf00dULL;

// Finite metric measure space: n points, a metric given either by
// coordinates plus a Minkowski exponent or by an explicit matrix, and one
// strictly positive weight per point. Immutable after construction; all
// queries are pure.
class MetricMeasureSpace {
 public:
  // Coordinate-backed space. Throws NonPositiveMeasure, MetricViolation
  // (with the violating pair or triple) or DimensionMismatch.
  static MetricMeasureSpace build(const std::vector<std::vector<double>>& coords,
                                  MetricSpec metric,
                                  std::vector<double> measure);

  // Matrix-backed space without coordinates.
  static MetricMeasureSpace build_matrix(int n, std::vector<double> distances,
                                         std::vector<double> measure);

  int size() const { return n_; }
  double distance(int i, int j) const;
  double weight(int i) const { return measure_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& weights() const { return measure_; }
  double total_mass() const { return total_mass_; }

  bool has_coordinates() const { return dim_ > 0; }
  int dimension() const { return dim_; }
  std::span<const double> point(int i) const;

  const MetricSpec& metric() const { return metric_; }
  const ValidationReport& validation() const { return validation_; }

 private:
  MetricMeasureSpace() = default;
  void validate_measure() const;
  void validate_metric_axioms();

  int n_ = 0;
  int dim_ = 0;
  std::vector<double> coords_;  // flattened n_*dim_, empty for matrix spaces
  MetricSpec metric_{MinkowskiMetric{2.0}};
  std::vector<double> measure_;
  double total_mass_ = 0.0;
  ValidationReport validation_;
};

// Open or closed metric ball around a point; always contains the center.
PointSet ball(const MetricMeasureSpace& space, int center, double radius, Openness openness);

// d(x, S) = min over a in S of d(a, x). Throws EmptySet.
double distance_to_set(const MetricMeasureSpace& space, int x, const PointSet& s);

// Sum of weights over the set.
double set_measure(const MetricMeasureSpace& space, const PointSet& s);

PointSet full_set(const MetricMeasureSpace& space, SetRole role = SetRole::kA);

// delta-neighborhood adjacency: for every i, the list of (j, d(i,j)) with
// j != i and d(i,j) <= delta, sorted by j. Coordinate spaces use a grid
// bucket; matrix spaces a full scan. Candidates from the grid are always
// confirmed by an exact distance comparison.
struct NeighborLists {
  double delta = 0.0;
  std::vector<std::vector<std::pair<int, double>>> adjacency;
};

NeighborLists build_neighbor_lists(const MetricMeasureSpace& space, double delta);

}  // namespace lipa
