#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lforge/polynomial.hpp"

namespace lforge {

/// Symmetric matrix of pairings rho_i .1 rho_j = <grad rho_i, grad rho_j>.
struct BMatrix {
  std::vector<std::vector<Polynomial>> entries;
  std::size_t size() const { return entries.size(); }
};

BMatrix b_matrix(const std::vector<Polynomial>& gens);

/// Leibniz expansion; intended for the small matrices that arise here.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// Generic rank of the Jacobian [d rho_i / d x_j], computed exactly at `trials`
/// seeded random rational points.
unsigned transcendence_degree(const std::vector<Polynomial>& gens, unsigned trials, std::uint64_t seed);

/// Seeded normalized-Gaussian points on the unit sphere S^(n-1).
std::vector<std::vector<double>> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed);

/// Numerical rank of the Jacobian at `point` with singular-value cutoff
/// `relative_threshold` * (largest singular value).
unsigned jacobian_rank(const std::vector<Polynomial>& gens, std::span<const double> point,
                       double relative_threshold = 1e-8);

struct StratificationReport {
  std::uint64_t seed = 0;
  double rank_threshold = 1e-8;
  unsigned generic_rank = 0;
  std::map<unsigned, std::size_t> rank_histogram;
  std::vector<unsigned> sample_ranks;
  /// Product of the nonzero m x m minors of the B matrix, m = generic rank.
  /// Symmetric minor pairs are counted once.
  Polynomial singular_witness{1};
  std::vector<double> witness_values;
  /// The witness is below 1e-9 in absolute value at every sub-generic sample.
  bool witness_consistent = true;
};

StratificationReport stratify(const std::vector<Polynomial>& gens, std::size_t n_samples, std::uint64_t seed,
                              double rank_threshold = 1e-8);
StratificationReport stratify_points(const std::vector<Polynomial>& gens,
                                     const std::vector<std::vector<double>>& points, double rank_threshold = 1e-8);

struct SamplingOptions {
  std::size_t n_samples = 2000;  // projection attempts per base value
  std::uint64_t seed = 1;
  double tol_value = 1e-6;
  std::size_t auto_base_values = 2;  // used when no base values are given
  unsigned max_newton_iterations = 50;
  double newton_tolerance = 1e-10;
};

/// Sphere points projected onto common level sets of the generators, one
/// cluster per base value.
struct FiberSampleSet {
  std::vector<Polynomial> generators;
  SamplingOptions options;
  std::vector<std::vector<double>> base_values;
  std::vector<std::vector<double>> samples;  // unit vectors
  std::vector<std::vector<double>> values;   // generator values at each sample
  std::vector<std::vector<std::size_t>> clusters;
  std::size_t attempts = 0;

  std::size_t dimension() const { return generators.front().dimension(); }
  /// Clusters that received no sample.
  std::vector<std::size_t> empty_clusters() const;
};

/// Newton-projects seeded sphere samples onto each level set rho = base value
/// and keeps the points whose values match within tol_value. An empty
/// `base_values` picks values at random sphere points.
FiberSampleSet sample_fibers(const std::vector<Polynomial>& gens, std::vector<std::vector<double>> base_values,
                             const SamplingOptions& options);

struct EquidistanceReport {
  double mean = 0.0;
  double max_dev = 0.0;
  std::size_t points = 0;
};

/// Great-circle distance from each point of cluster `from` to the nearest point
/// of cluster `to`. Small max_dev is sampling evidence, not proof.
EquidistanceReport equidistance_report(const FiberSampleSet& fibers, std::size_t from, std::size_t to);

/// Connected components of the graph joining points of a cluster within great-circle
/// distance `eps`, one count per cluster. Evidence only.
std::vector<std::size_t> connectivity_report(const FiberSampleSet& fibers, double eps);

}  // namespace lforge
