// lforge: command-line front end for the Laplacian-algebra toolkit.
//
// Exit codes: 0 check passed, 2 check failed, 1 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lforge/apolar.hpp"
#include "lforge/classifiers.hpp"
#include "lforge/errors.hpp"
#include "lforge/fiber_lab.hpp"
#include "lforge/invariants.hpp"
#include "lforge/io.hpp"
#include "lforge/kernels.hpp"
#include "lforge/laplacian.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lforge;

constexpr int kPass = 0;
constexpr int kInputError = 1;
constexpr int kFail = 2;

struct RunConfig {
  std::optional<std::size_t> dimension;
  std::optional<unsigned> degree_cap;
  std::uint64_t seed = 1;
  double tol_value = 1e-6;
  double eps = 0.1;
  double rank_threshold = 1e-8;
  std::string out;
  std::string builtin;
  std::string algebra_file;
  std::string group_file;
  std::vector<std::string> generators;
  std::vector<std::string> polynomials;
  std::vector<std::string> base_values;
  // Unset means the per-command default.
  std::optional<unsigned> trials;
  std::optional<std::size_t> samples;
  std::size_t max_generators = 32;
};

// Failure in user-supplied input, reported with exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string diagnose(const SyntaxError& e, const std::string& text) {
  std::ostringstream os;
  os << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^";
  return os.str();
}

Polynomial parse_arg(const std::string& text, std::size_t n) {
  try {
    return parse_polynomial(text, n);
  } catch (const SyntaxError& e) {
    throw UsageError(diagnose(e, text));
  } catch (const DimensionError& e) {
    throw UsageError(std::string(e.what()) + "\n  " + text);
  }
}

std::vector<Polynomial> parse_args(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_arg(t, n));
  return out;
}

std::size_t require_dimension(const RunConfig& cfg) {
  if (!cfg.dimension) throw UsageError("--dimension is required for polynomial arguments");
  if (*cfg.dimension == 0) throw UsageError("--dimension must be positive");
  return *cfg.dimension;
}

void check_dimension(const RunConfig& cfg, std::size_t n, const std::string& source) {
  if (cfg.dimension && *cfg.dimension != n)
    throw UsageError("--dimension " + std::to_string(*cfg.dimension) + " disagrees with " + source + " (n = " +
                     std::to_string(n) + ")");
}

json poly_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + to_string(ps[i]);
  return s;
}

struct Group {
  std::string source;
  FiniteOrthogonalGroup group;
  std::optional<GradedSubalgebra> closed_form;
};

Group resolve_group(const RunConfig& cfg) {
  if (!cfg.builtin.empty() && !cfg.group_file.empty()) throw UsageError("give either --builtin or --group, not both");
  if (!cfg.builtin.empty()) {
    Builtin b = parse_builtin(cfg.builtin);
    check_dimension(cfg, b.group.dimension(), "built-in " + cfg.builtin);
    return {"builtin:" + cfg.builtin, b.group, b.closed_form};
  }
  if (!cfg.group_file.empty()) {
    FiniteOrthogonalGroup g = load_group_file(cfg.group_file);
    check_dimension(cfg, g.dimension(), cfg.group_file);
    return {"file:" + cfg.group_file, g, std::nullopt};
  }
  throw UsageError("a group is required: --builtin NAME or --group FILE");
}

struct Algebra {
  std::string source;
  std::size_t dimension;
  std::vector<Polynomial> generators;
  std::optional<unsigned> degree_cap;
};

// Generators from --algebra, --builtin, or polynomial strings, in that order of precedence.
Algebra resolve_algebra(const RunConfig& cfg, const std::vector<std::string>& texts) {
  int sources = !cfg.algebra_file.empty() + !cfg.builtin.empty() + !texts.empty();
  if (sources == 0) throw UsageError("no generators: pass polynomials, --algebra FILE or --builtin NAME");
  if (sources > 1) throw UsageError("give generators from exactly one of: arguments, --algebra, --builtin");
  if (!cfg.algebra_file.empty()) {
    AlgebraSpec spec = load_algebra_file(cfg.algebra_file);
    check_dimension(cfg, spec.dimension, cfg.algebra_file);
    return {"file:" + cfg.algebra_file, spec.dimension, spec.generators, spec.degree_cap};
  }
  if (!cfg.builtin.empty()) {
    Group g = resolve_group(cfg);
    const std::size_t n = g.group.dimension();
    if (g.closed_form) return {g.source, n, g.closed_form->generators(), std::nullopt};
    unsigned d = cfg.degree_cap.value_or(noether_bound(g.group));
    return {g.source, n, invariant_ring(g.group, d).generators(), std::nullopt};
  }
  const std::size_t n = require_dimension(cfg);
  return {"arguments", n, parse_args(texts, n), std::nullopt};
}

class Report {
 public:
  Report(std::string command, const RunConfig& cfg) : cfg_(cfg), start_(std::chrono::steady_clock::now()) {
    doc_["tool"] = "lforge";
    doc_["version"] = LFORGE_VERSION;
    doc_["command"] = std::move(command);
    doc_["config"] = json::object();
  }

  json& config() { return doc_["config"]; }
  json& result() { return doc_["result"]; }

  int finish(int code) {
    doc_["verdict"] = code == kPass ? "pass" : "fail";
    doc_["exit_code"] = code;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    // Volatile; golden comparisons drop this key.
    doc_["timing"] = {{"elapsed_seconds", elapsed}, {"kernels", std::string(kernels::active().name)}};
    if (!cfg_.out.empty()) {
      std::ofstream f(cfg_.out);
      if (!f) throw UsageError("cannot write " + cfg_.out);
      f << doc_.dump(2) << "\n";
    }
    return code;
  }

 private:
  json doc_;
  const RunConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
};

void echo_algebra(Report& r, const Algebra& a) {
  r.config()["source"] = a.source;
  r.config()["dimension"] = a.dimension;
  r.config()["generators"] = poly_list(a.generators);
}

int cmd_check_laplacian(const RunConfig& cfg) {
  Algebra a = resolve_algebra(cfg, cfg.polynomials);
  GradedSubalgebra alg(a.dimension, a.generators);
  const unsigned need = std::max(2u, 2 * alg.max_generator_degree() - 2);
  const unsigned cap = cfg.degree_cap.value_or(a.degree_cap.value_or(need));
  Report r("check-laplacian", cfg);
  echo_algebra(r, a);
  r.config()["degree_cap"] = cap;
  LaplacianReport rep = is_laplacian(alg, cap);
  json w = json::array();
  for (const auto& x : rep.witnesses)
    w.push_back({{"reason", to_string(x.reason)}, {"source", x.source}, {"polynomial", to_string(x.polynomial)}});
  r.result() = {{"is_laplacian", rep.is_laplacian}, {"checked_pairs", rep.checked_pairs}, {"witnesses", w}};

  std::cout << "algebra <" << join(a.generators) << ">: " << (rep.is_laplacian ? "Laplacian" : "not Laplacian")
            << "\n";
  for (const auto& x : rep.witnesses)
    std::cout << "  witness " << x.source << " = " << x.polynomial << " (" << to_string(x.reason) << ")\n";
  return r.finish(rep.is_laplacian ? kPass : kFail);
}

int cmd_laplacian_closure(const RunConfig& cfg) {
  Algebra a = resolve_algebra(cfg, cfg.polynomials);
  const unsigned cap = cfg.degree_cap.value_or(8);
  Report r("laplacian-closure", cfg);
  echo_algebra(r, a);
  r.config()["degree_cap"] = cap;
  r.config()["max_generators"] = cfg.max_generators;
  try {
    ClosureResult c = laplacian_closure(a.generators, cap, cfg.max_generators);
    r.result() = {{"saturated", c.saturated}, {"rounds", c.rounds}, {"generators", poly_list(c.algebra.generators())}};
    std::cout << "closure <" << join(c.algebra.generators()) << "> after " << c.rounds << " round(s)"
              << (c.saturated ? "" : ", not saturated below the degree cap") << "\n";
    return r.finish(c.saturated ? kPass : kFail);
  } catch (const CapExceeded& e) {
    r.result() = {{"saturated", false},
                  {"cap_exceeded", e.what()},
                  {"generators", poly_list(e.partial().generators())}};
    std::cout << e.what() << "\n";
    return r.finish(kFail);
  }
}

int cmd_reynolds(const RunConfig& cfg, bool membership_only) {
  if (cfg.polynomials.size() != 1) throw UsageError("expected exactly one polynomial to project");
  Algebra a = resolve_algebra(cfg, cfg.generators);
  Polynomial f = parse_arg(cfg.polynomials.front(), a.dimension);
  GradedSubalgebra alg(a.dimension, a.generators);
  Report r(membership_only ? "contains" : "reynolds", cfg);
  echo_algebra(r, a);
  r.config()["polynomial"] = to_string(f);
  ProjectionResult p = alg.reynolds(f);
  r.result() = {{"projection", to_string(p.projection)}, {"residual", to_string(p.residual)}, {"member", p.member}};
  if (membership_only) {
    std::cout << f << (p.member ? " is" : " is not") << " in <" << join(a.generators) << ">\n";
    return r.finish(p.member ? kPass : kFail);
  }
  std::cout << "projection: " << p.projection << "\nresidual:   " << p.residual
            << "\nmember:     " << (p.member ? "yes" : "no") << "\n";
  return r.finish(kPass);
}

int cmd_invariant_ring(const RunConfig& cfg) {
  Group g = resolve_group(cfg);
  const unsigned d = cfg.degree_cap.value_or(noether_bound(g.group));
  Report r("invariant-ring", cfg);
  r.config()["source"] = g.source;
  r.config()["dimension"] = g.group.dimension();
  r.config()["group_order"] = g.group.order();
  r.config()["degree_cap"] = d;
  std::optional<GradedSubalgebra> ring;
  std::string method;
  if (g.closed_form) {
    ring = *g.closed_form;
    method = "closed_form";
  } else {
    ring = invariant_ring(g.group, d);
    method = "averaging";
  }
  json dims = json::array();
  for (auto h : ring->hilbert_dims(d)) dims.push_back(h);
  r.result() = {{"method", method}, {"generators", poly_list(ring->generators())}, {"hilbert_dims", dims}};
  std::cout << "invariants of " << g.source << " (|G| = " << g.group.order() << "): <" << join(ring->generators())
            << ">\n";
  return r.finish(kPass);
}

int cmd_verify_reynolds_average(const RunConfig& cfg) {
  Group g = resolve_group(cfg);
  const unsigned d = cfg.degree_cap.value_or(noether_bound(g.group));
  Report r("verify-reynolds-average", cfg);
  r.config()["source"] = g.source;
  r.config()["dimension"] = g.group.dimension();
  r.config()["group_order"] = g.group.order();
  r.config()["degree_cap"] = d;
  const unsigned trials = cfg.trials.value_or(50);
  r.config()["trials"] = trials;
  r.config()["seed"] = cfg.seed;
  ReynoldsAverageReport rep = verify_reynolds_equals_average(g.group, d, trials, cfg.seed);
  r.result() = {{"agree", rep.agree}, {"trials", rep.trials}};
  if (rep.counterexample) r.result()["counterexample"] = to_string(*rep.counterexample);
  std::cout << "Reynolds projection " << (rep.agree ? "equals" : "differs from") << " group averaging on "
            << rep.trials << " trial(s)\n";
  return r.finish(rep.agree ? kPass : kFail);
}

int cmd_munzner(const RunConfig& cfg) {
  if (cfg.polynomials.size() != 1) throw UsageError("expected exactly one polynomial");
  const std::size_t n = require_dimension(cfg);
  Polynomial f = parse_arg(cfg.polynomials.front(), n);
  Report r("munzner", cfg);
  r.config()["dimension"] = n;
  r.config()["polynomial"] = to_string(f);
  MunznerReport rep = munzner_check(f);
  json res = {{"degree", rep.degree},
              {"laplacian_constant", rep.laplacian_constant ? json(to_string(*rep.laplacian_constant)) : json()},
              {"norm_identity_holds", rep.norm_identity_holds},
              {"radial", rep.radial},
              {"passes", rep.passes}};
  std::optional<Polynomial> normalized;
  if (!rep.passes) normalized = munzner_normalize(f);
  res["normalized"] = normalized ? json(to_string(*normalized)) : json();
  r.result() = res;

  std::cout << f << ": " << (rep.passes ? "satisfies" : "fails") << " the Cartan-Munzner equations (degree "
            << rep.degree << ")\n";
  if (rep.laplacian_constant) std::cout << "  Laplacian constant c = " << to_string(*rep.laplacian_constant) << "\n";
  if (rep.radial) std::cout << "  radial: level sets on the sphere are trivial\n";
  if (normalized) std::cout << "  normalized candidate: " << *normalized << "\n";
  return r.finish(rep.passes ? kPass : kFail);
}

int cmd_jordan(const RunConfig& cfg) {
  if (cfg.polynomials.empty()) throw UsageError("expected at least one quadratic form");
  const std::size_t n = require_dimension(cfg);
  std::vector<Polynomial> q = parse_args(cfg.polynomials, n);
  Report r("jordan", cfg);
  r.config()["dimension"] = n;
  r.config()["quadratics"] = poly_list(q);
  JordanReport rep = jordan_closure_check(q);
  json res = {{"closed", rep.closed},
              {"r_squared_in_span", rep.r_squared_in_span},
              {"dimension_of_span", rep.dimension_of_span}};
  if (rep.failing_pair) {
    res["failing_pair"] = {rep.failing_pair->first + 1, rep.failing_pair->second + 1};
    res["escaping_product"] = to_string(*rep.escaping_product);
  }
  r.result() = res;
  std::cout << "span of " << q.size() << " quadratic(s): " << (rep.closed ? "Jordan closed" : "not Jordan closed")
            << "\n";
  if (!rep.r_squared_in_span) std::cout << "  r^2 is not in the span\n";
  if (rep.failing_pair)
    std::cout << "  q" << rep.failing_pair->first + 1 << " .1 q" << rep.failing_pair->second + 1 << " = "
              << *rep.escaping_product << " escapes\n";
  return r.finish(rep.closed ? kPass : kFail);
}

int cmd_b_matrix(const RunConfig& cfg) {
  Algebra a = resolve_algebra(cfg, cfg.polynomials);
  Report r("b-matrix", cfg);
  echo_algebra(r, a);
  BMatrix b = b_matrix(a.generators);
  Polynomial det = determinant(b.entries);
  json rows = json::array();
  for (const auto& row : b.entries) rows.push_back(poly_list(row));
  r.result() = {{"entries", rows}, {"determinant", to_string(det)}};
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      std::cout << "B[" << i + 1 << "][" << j + 1 << "] = " << b.entries[i][j] << "\n";
  std::cout << "det B = " << det << "\n";
  return r.finish(kPass);
}

int cmd_transcendence_degree(const RunConfig& cfg) {
  Algebra a = resolve_algebra(cfg, cfg.polynomials);
  Report r("transcendence-degree", cfg);
  echo_algebra(r, a);
  const unsigned trials = cfg.trials.value_or(10);
  const std::size_t samples = cfg.samples.value_or(200);
  r.config()["trials"] = trials;
  r.config()["samples"] = samples;
  r.config()["seed"] = cfg.seed;
  r.config()["rank_threshold"] = cfg.rank_threshold;
  const unsigned exact = transcendence_degree(a.generators, trials, cfg.seed);
  StratificationReport s = stratify(a.generators, samples, cfg.seed, cfg.rank_threshold);
  const bool agree = exact == s.generic_rank;
  r.result() = {{"transcendence_degree", exact}, {"float_generic_rank", s.generic_rank}, {"agree", agree}};
  std::cout << "transcendence degree " << exact << " (float generic rank " << s.generic_rank << ")\n";
  return r.finish(agree ? kPass : kFail);
}

std::vector<double> parse_base(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --base value \"" + text + "\": expected comma-separated numbers");
    }
  }
  return v;
}

int cmd_fiber_report(const RunConfig& cfg) {
  Algebra a = resolve_algebra(cfg, cfg.polynomials);
  Report r("fiber-report", cfg);
  echo_algebra(r, a);
  SamplingOptions opt;
  opt.n_samples = cfg.samples.value_or(opt.n_samples);
  opt.seed = cfg.seed;
  opt.tol_value = cfg.tol_value;
  std::vector<std::vector<double>> base;
  for (const auto& b : cfg.base_values) base.push_back(parse_base(b));
  r.config()["samples"] = opt.n_samples;
  r.config()["seed"] = cfg.seed;
  r.config()["tol_value"] = cfg.tol_value;
  r.config()["eps"] = cfg.eps;
  r.config()["rank_threshold"] = cfg.rank_threshold;
  r.config()["base_values"] = base;

  StratificationReport s = stratify(a.generators, opt.n_samples, cfg.seed, cfg.rank_threshold);
  json hist = json::object();
  for (const auto& [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
  FiberSampleSet fib = sample_fibers(a.generators, base, opt);
  std::vector<std::size_t> comps = connectivity_report(fib, cfg.eps);

  json clusters = json::array();
  for (std::size_t c = 0; c < fib.clusters.size(); ++c)
    clusters.push_back(
        {{"base_value", fib.base_values[c]}, {"points", fib.clusters[c].size()}, {"components", comps[c]}});
  json eq = json::array();
  for (std::size_t c = 0; c + 1 < fib.clusters.size(); ++c) {
    if (fib.clusters[c].empty() || fib.clusters[c + 1].empty()) continue;
    EquidistanceReport e = equidistance_report(fib, c, c + 1);
    eq.push_back({{"from", c}, {"to", c + 1}, {"mean", e.mean}, {"max_dev", e.max_dev}});
  }
  const bool ok = s.witness_consistent && fib.empty_clusters().empty();
  r.result() = {{"stratification",
                 {{"generic_rank", s.generic_rank},
                  {"rank_histogram", hist},
                  {"singular_witness", to_string(s.singular_witness)},
                  {"witness_consistent", s.witness_consistent}}},
                {"attempts", fib.attempts},
                {"clusters", clusters},
                {"equidistance", eq}};

  std::cout << "generic rank " << s.generic_rank << ", singular witness " << s.singular_witness << "\n";
  for (std::size_t c = 0; c < fib.clusters.size(); ++c) {
    std::cout << "fiber " << c << " at (";
    for (std::size_t i = 0; i < fib.base_values[c].size(); ++i) std::cout << (i ? ", " : "") << fib.base_values[c][i];
    std::cout << "): " << fib.clusters[c].size() << " points, " << comps[c] << " component(s)\n";
  }
  for (const auto& e : eq)
    std::cout << "fibers " << e["from"].get<std::size_t>() << " -> " << e["to"].get<std::size_t>() << ": mean distance "
              << e["mean"].get<double>() << ", max deviation " << e["max_dev"].get<double>() << "\n";
  return r.finish(ok ? kPass : kFail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and numerical experiments for Laplacian subalgebras of polynomial rings"};
  app.set_version_flag("--version", std::string("lforge ") + LFORGE_VERSION);
  app.require_subcommand(1);
  RunConfig cfg;

  auto dimension = [&](CLI::App* s) {
    s->add_option("-n,--dimension", cfg.dimension, "Number of variables")->envname("LFORGE_DIMENSION");
  };
  auto degree_cap = [&](CLI::App* s, const std::string& help) {
    s->add_option("-D,--degree-cap", cfg.degree_cap, help)->envname("LFORGE_DEGREE_CAP");
  };
  auto out = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "Write the JSON report to this file")->envname("LFORGE_OUT");
  };
  auto seed = [&](CLI::App* s) {
    s->add_option("--seed", cfg.seed, "Random seed")->envname("LFORGE_SEED")->capture_default_str();
  };
  auto trials = [&](CLI::App* s, const char* help) {
    s->add_option("--trials", cfg.trials, help)->envname("LFORGE_TRIALS");
  };
  auto builtin = [&](CLI::App* s) {
    s->add_option("--builtin", cfg.builtin,
                  "Built-in group: neg_id:n, signed_permutations:n, cyclic_sign:n:axis, dihedral:g")
        ->envname("LFORGE_BUILTIN");
  };
  auto algebra_inputs = [&](CLI::App* s, bool positional) {
    dimension(s);
    builtin(s);
    s->add_option("--algebra", cfg.algebra_file, "Algebra file (JSON)")
        ->envname("LFORGE_ALGEBRA")
        ->check(CLI::ExistingFile);
    if (positional)
      s->add_option("generators", cfg.polynomials, "Generators in the polynomial grammar");
    else
      s->add_option("-g,--generator", cfg.generators, "Generator in the polynomial grammar (repeatable)")
          ->allow_extra_args(false);
  };
  auto group_inputs = [&](CLI::App* s) {
    dimension(s);
    builtin(s);
    s->add_option("--group", cfg.group_file, "Group file (JSON)")->envname("LFORGE_GROUP")->check(CLI::ExistingFile);
  };

  std::function<int()> run;
  auto command = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&run, fn] { run = fn; });
    out(s);
    return s;
  };

  auto* s = command("check-laplacian", "Certify that an algebra is Laplacian",
                    [&] { return cmd_check_laplacian(cfg); });
  algebra_inputs(s, true);
  degree_cap(s, "Degree cap for the certificate (default 2 * max degree - 2)");

  s = command("laplacian-closure", "Smallest Laplacian algebra containing the generators",
              [&] { return cmd_laplacian_closure(cfg); });
  algebra_inputs(s, true);
  degree_cap(s, "Largest degree of adjoined generators (default 8)");
  s->add_option("--max-generators", cfg.max_generators, "Generator count cap")
      ->envname("LFORGE_MAX_GENERATORS")
      ->capture_default_str();

  s = command("reynolds", "Apolar projection onto an algebra", [&] { return cmd_reynolds(cfg, false); });
  algebra_inputs(s, false);
  s->add_option("polynomial", cfg.polynomials, "Polynomial to project")->required();

  s = command("contains", "Membership test (exit 0 member, 2 not)", [&] { return cmd_reynolds(cfg, true); });
  algebra_inputs(s, false);
  s->add_option("polynomial", cfg.polynomials, "Polynomial to test")->required();

  s = command("invariant-ring", "Generators of the invariant ring of a finite group",
              [&] { return cmd_invariant_ring(cfg); });
  group_inputs(s);
  degree_cap(s, "Degree bound (default |G|)");

  s = command("verify-reynolds-average", "Compare Reynolds projection with group averaging",
              [&] { return cmd_verify_reynolds_average(cfg); });
  group_inputs(s);
  degree_cap(s, "Degree bound (default |G|)");
  trials(s, "Random trials (default 50)");
  seed(s);

  s = command("munzner", "Check the Cartan-Munzner equations", [&] { return cmd_munzner(cfg); });
  dimension(s);
  s->add_option("polynomial", cfg.polynomials, "Homogeneous polynomial")->required();

  s = command("jordan", "Check Jordan closure of quadratic forms", [&] { return cmd_jordan(cfg); });
  dimension(s);
  s->add_option("quadratics", cfg.polynomials, "Quadratic forms")->required();

  s = command("b-matrix", "Gradient pairing matrix and its determinant", [&] { return cmd_b_matrix(cfg); });
  algebra_inputs(s, true);

  s = command("transcendence-degree", "Exact Jacobian rank, cross-checked in floating point",
              [&] { return cmd_transcendence_degree(cfg); });
  algebra_inputs(s, true);
  trials(s, "Random rational points (default 10)");
  seed(s);
  s->add_option("--samples", cfg.samples, "Sphere samples for the float check (default 200)")
      ->envname("LFORGE_SAMPLES");
  s->add_option("--rank-threshold", cfg.rank_threshold, "Relative singular-value cutoff")
      ->envname("LFORGE_RANK_THRESHOLD")
      ->capture_default_str();

  s = command("fiber-report", "Sample fibers on the unit sphere", [&] { return cmd_fiber_report(cfg); });
  algebra_inputs(s, true);
  seed(s);
  s->add_option("--samples", cfg.samples, "Projection attempts per fiber (default 2000)")
      ->envname("LFORGE_SAMPLES");
  s->add_option("--tol-value", cfg.tol_value, "Accepted |rho(x) - c|")
      ->envname("LFORGE_TOL_VALUE")
      ->capture_default_str();
  s->add_option("--eps", cfg.eps, "Connectivity radius (radians)")->envname("LFORGE_EPS")->capture_default_str();
  s->add_option("--rank-threshold", cfg.rank_threshold, "Relative singular-value cutoff")
      ->envname("LFORGE_RANK_THRESHOLD")
      ->capture_default_str();
  s->add_option("--base", cfg.base_values, "Fiber value as comma-separated numbers (repeatable; default: 2 random)")
      ->allow_extra_args(false)
      ->envname("LFORGE_BASE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (!(cfg.tol_value > 0.0) || !(cfg.eps > 0.0) || !(cfg.rank_threshold > 0.0)) {
    std::cerr << "lforge: tolerances must be positive\n";
    return kInputError;
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "lforge: " << e.what() << "\n";
  }
  return kInputError;
}
