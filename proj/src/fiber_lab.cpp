#include "lforge/fiber_lab.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"
#include "lforge/kernels.hpp"
#include "lforge/linalg.hpp"

namespace lforge {

namespace {

using Rng = std::mt19937_64;

void check_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error("fiber lab needs at least one generator");
  for (const auto& g : gens)
    if (g.dimension() != gens.front().dimension()) throw DimensionError("generators have mixed dimensions");
}

std::vector<std::vector<double>> sphere_points(Rng& rng, std::size_t n, std::size_t count) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    std::vector<double> p(n);
    double norm2 = 0.0;
    for (auto& x : p) {
      x = normal(rng);
      norm2 += x * x;
    }
    if (norm2 < 1e-24) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : p) x *= inv;
    pts.push_back(std::move(p));
  }
  return pts;
}

// Structure-of-arrays copy of a point list.
std::vector<double> to_soa(const std::vector<std::vector<double>>& pts, std::size_t n) {
  std::vector<double> soa(n * pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t i = 0; i < n; ++i) soa[i * pts.size() + p] = pts[p][i];
  return soa;
}

// Values and gradients of a generator tuple, evaluated in batches.
class JacobianEvaluator {
 public:
  explicit JacobianEvaluator(const std::vector<Polynomial>& gens) : n_(gens.front().dimension()) {
    for (const auto& g : gens) {
      values_.push_back(kernels::compile(g));
      for (std::size_t j = 0; j < n_; ++j) partials_.push_back(kernels::compile(partial(g, j)));
    }
  }

  std::size_t k() const { return values_.size(); }
  std::size_t n() const { return n_; }

  // vals[i * count + p], grads[(i * n + j) * count + p]
  void evaluate(const std::vector<double>& soa, std::size_t count, std::vector<double>& vals,
                std::vector<double>& grads) const {
    const auto& kt = kernels::active();
    vals.resize(k() * count);
    grads.resize(k() * n_ * count);
    for (std::size_t i = 0; i < k(); ++i) kt.evaluate(values_[i], soa.data(), count, vals.data() + i * count);
    for (std::size_t r = 0; r < partials_.size(); ++r)
      kt.evaluate(partials_[r], soa.data(), count, grads.data() + r * count);
  }

 private:
  std::size_t n_;
  std::vector<kernels::CompiledPolynomial> values_;
  std::vector<kernels::CompiledPolynomial> partials_;
};

unsigned numerical_rank(const Eigen::MatrixXd& j, double relative_threshold) {
  if (j.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  unsigned rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative_threshold * s(0)) ++rank;
  return rank;
}

void combinations(std::size_t k, std::size_t m, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  if (m > k) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == k - m + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial minor_product(const BMatrix& b, std::size_t m, std::size_t n) {
  Polynomial product = Polynomial::constant(n, 1);
  if (m == 0) return product;
  std::vector<std::vector<std::size_t>> subsets;
  combinations(b.size(), m, subsets);
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = r; c < subsets.size(); ++c) {
      std::vector<std::vector<Polynomial>> sub(m, std::vector<Polynomial>(m, Polynomial(n)));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub[i][j] = b.entries[subsets[r][i]][subsets[c][j]];
      Polynomial d = determinant(sub);
      if (!d.is_zero()) product = product * d;
    }
  return product;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

BMatrix b_matrix(const std::vector<Polynomial>& gens) {
  check_generators(gens);
  const std::size_t k = gens.size();
  BMatrix b;
  b.entries.assign(k, std::vector<Polynomial>(k, Polynomial(gens.front().dimension())));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      b.entries[i][j] = gradient_pairing(gens[i], gens[j]);
      b.entries[j][i] = b.entries[i][j];
    }
  return b;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  if (m.empty()) throw Error("determinant of an empty matrix");
  const std::size_t k = m.size();
  const std::size_t n = m.front().front().dimension();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(n);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(n, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

unsigned transcendence_degree(const std::vector<Polynomial>& gens, unsigned trials, std::uint64_t seed) {
  check_generators(gens);
  if (trials == 0) throw Error("transcendence_degree needs at least one trial");
  const std::size_t n = gens.front().dimension();
  std::vector<std::vector<Polynomial>> jac(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(partial(gens[i], j));

  Rng rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  unsigned best = 0;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Rational> point;
    for (std::size_t j = 0; j < n; ++j) point.push_back(make_rational(num(rng), den(rng)));
    RationalMatrix m(gens.size(), std::vector<Rational>(n));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = evaluate(jac[i][j], point);
    best = std::max(best, static_cast<unsigned>(matrix_rank(m)));
  }
  return best;
}

std::vector<std::vector<double>> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  return sphere_points(rng, n, count);
}

unsigned jacobian_rank(const std::vector<Polynomial>& gens, std::span<const double> point,
                       double relative_threshold) {
  check_generators(gens);
  const std::size_t n = gens.front().dimension();
  if (point.size() != n) throw DimensionError("jacobian_rank: point dimension mismatch");
  Eigen::MatrixXd j(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) j(i, c) = evaluate(partial(gens[i], c), point);
  return numerical_rank(j, relative_threshold);
}

StratificationReport stratify(const std::vector<Polynomial>& gens, std::size_t n_samples, std::uint64_t seed,
                              double rank_threshold) {
  check_generators(gens);
  if (n_samples == 0) throw Error("stratify needs at least one sample");
  StratificationReport report =
      stratify_points(gens, sample_sphere(gens.front().dimension(), n_samples, seed), rank_threshold);
  report.seed = seed;
  return report;
}

StratificationReport stratify_points(const std::vector<Polynomial>& gens,
                                     const std::vector<std::vector<double>>& points, double rank_threshold) {
  check_generators(gens);
  if (!(rank_threshold > 0.0)) throw Error("rank threshold must be positive");
  const std::size_t n = gens.front().dimension();
  for (const auto& p : points)
    if (p.size() != n) throw DimensionError("stratify: point dimension mismatch");

  StratificationReport report;
  report.rank_threshold = rank_threshold;
  JacobianEvaluator jac(gens);
  std::vector<double> soa = to_soa(points, n), vals, grads;
  const std::size_t count = points.size();
  jac.evaluate(soa, count, vals, grads);
  for (std::size_t p = 0; p < count; ++p) {
    Eigen::MatrixXd j(jac.k(), n);
    for (std::size_t i = 0; i < jac.k(); ++i)
      for (std::size_t c = 0; c < n; ++c) j(i, c) = grads[(i * n + c) * count + p];
    unsigned r = numerical_rank(j, report.rank_threshold);
    report.sample_ranks.push_back(r);
    ++report.rank_histogram[r];
    report.generic_rank = std::max(report.generic_rank, r);
  }

  report.singular_witness = minor_product(b_matrix(gens), report.generic_rank, n);
  std::vector<double> w(count);
  kernels::active().evaluate(kernels::compile(report.singular_witness), soa.data(), count, w.data());
  for (std::size_t p = 0; p < count; ++p) {
    report.witness_values.push_back(std::abs(w[p]));
    if (report.sample_ranks[p] < report.generic_rank && std::abs(w[p]) > 1e-9) report.witness_consistent = false;
  }
  return report;
}

std::vector<std::size_t> FiberSampleSet::empty_clusters() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < clusters.size(); ++c)
    if (clusters[c].empty()) out.push_back(c);
  return out;
}

FiberSampleSet sample_fibers(const std::vector<Polynomial>& gens, std::vector<std::vector<double>> base_values,
                             const SamplingOptions& options) {
  check_generators(gens);
  if (!(options.tol_value > 0.0)) throw Error("tol_value must be positive");
  const std::size_t n = gens.front().dimension();
  const std::size_t k = gens.size();
  const auto& kt = kernels::active();

  FiberSampleSet set;
  set.generators = gens;
  set.options = options;
  Rng rng(options.seed);

  std::vector<kernels::CompiledPolynomial> compiled;
  for (const auto& g : gens) compiled.push_back(kernels::compile(g));
  auto values_at = [&](const std::vector<double>& x) {
    std::vector<double> v(k);
    for (std::size_t i = 0; i < k; ++i) kt.evaluate(compiled[i], x.data(), 1, &v[i]);
    return v;
  };

  if (base_values.empty())
    for (const auto& p : sphere_points(rng, n, options.auto_base_values)) base_values.push_back(values_at(p));
  for (const auto& b : base_values)
    if (b.size() != k) throw DimensionError("base value has wrong length");
  set.base_values = base_values;

  JacobianEvaluator jac(gens);
  for (const auto& target : base_values) {
    std::vector<std::vector<double>> starts = sphere_points(rng, n, options.n_samples);
    const std::size_t count = starts.size();
    set.attempts += count;
    std::vector<double> soa = to_soa(starts, n), vals, grads;
    std::vector<char> active(count, 1), converged(count, 0);

    for (unsigned iter = 0; iter <= options.max_newton_iterations; ++iter) {
      jac.evaluate(soa, count, vals, grads);
      bool any = false;
      for (std::size_t p = 0; p < count; ++p) {
        if (!active[p]) continue;
        Eigen::VectorXd h(k + 1);
        Eigen::MatrixXd j(k + 1, n);
        double norm2 = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
          const double x = soa[c * count + p];
          norm2 += x * x;
          j(k, c) = 2.0 * x;
        }
        for (std::size_t i = 0; i < k; ++i) {
          h(i) = vals[i * count + p] - target[i];
          for (std::size_t c = 0; c < n; ++c) j(i, c) = grads[(i * n + c) * count + p];
        }
        h(k) = norm2 - 1.0;
        if (!h.allFinite()) {
          active[p] = 0;
          continue;
        }
        if (h.cwiseAbs().maxCoeff() < options.newton_tolerance) {
          active[p] = 0;
          converged[p] = 1;
          continue;
        }
        if (iter == options.max_newton_iterations) {
          active[p] = 0;
          continue;
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Eigen::VectorXd step = svd.solve(h);
        const double len = step.norm();
        if (!std::isfinite(len)) {
          active[p] = 0;
          continue;
        }
        if (len > 0.5) step *= 0.5 / len;
        for (std::size_t c = 0; c < n; ++c) soa[c * count + p] -= step(static_cast<Eigen::Index>(c));
        any = true;
      }
      if (!any) break;
    }

    std::vector<std::size_t> cluster;
    for (std::size_t p = 0; p < count; ++p) {
      if (!converged[p]) continue;
      std::vector<double> x(n);
      double norm2 = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        x[c] = soa[c * count + p];
        norm2 += x[c] * x[c];
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& v : x) v *= inv;
      std::vector<double> v = values_at(x);
      bool match = true;
      for (std::size_t i = 0; i < k; ++i) match = match && std::abs(v[i] - target[i]) <= options.tol_value;
      if (!match) continue;
      cluster.push_back(set.samples.size());
      set.samples.push_back(std::move(x));
      set.values.push_back(std::move(v));
    }
    set.clusters.push_back(std::move(cluster));
  }
  return set;
}

namespace {

std::vector<double> cluster_soa(const FiberSampleSet& fibers, std::size_t c) {
  std::vector<std::vector<double>> pts;
  for (auto idx : fibers.clusters.at(c)) pts.push_back(fibers.samples[idx]);
  return to_soa(pts, fibers.dimension());
}

}  // namespace

EquidistanceReport equidistance_report(const FiberSampleSet& fibers, std::size_t from, std::size_t to) {
  const auto& a = fibers.clusters.at(from);
  const auto& b = fibers.clusters.at(to);
  if (a.empty() || b.empty()) throw Error("equidistance_report needs two nonempty clusters");
  const std::size_t n = fibers.dimension();
  std::vector<double> soa = cluster_soa(fibers, to), dots(b.size());
  std::vector<double> dist;
  dist.reserve(a.size());
  for (auto idx : a) {
    kernels::active().dot_rows(soa.data(), b.size(), n, fibers.samples[idx].data(), dots.data());
    double best = *std::max_element(dots.begin(), dots.end());
    dist.push_back(std::acos(std::clamp(best, -1.0, 1.0)));
  }
  EquidistanceReport r;
  r.points = dist.size();
  r.mean = std::accumulate(dist.begin(), dist.end(), 0.0) / static_cast<double>(dist.size());
  for (double d : dist) r.max_dev = std::max(r.max_dev, std::abs(d - r.mean));
  return r;
}

std::vector<std::size_t> connectivity_report(const FiberSampleSet& fibers, double eps) {
  if (!(eps > 0.0)) throw Error("connectivity eps must be positive");
  const double cos_eps = std::cos(eps);
  const std::size_t n = fibers.dimension();
  std::vector<std::size_t> components;
  for (std::size_t c = 0; c < fibers.clusters.size(); ++c) {
    const auto& cl = fibers.clusters[c];
    const std::size_t m = cl.size();
    std::vector<double> soa = cluster_soa(fibers, c), dots(m);
    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i) {
      kernels::active().dot_rows(soa.data(), m, n, fibers.samples[cl[i]].data(), dots.data());
      for (std::size_t j = i + 1; j < m; ++j)
        if (dots[j] > cos_eps) uf.unite(i, j);
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (uf.find(i) == i) ++roots;
    components.push_back(roots);
  }
  return components;
}

}  // namespace lforge
