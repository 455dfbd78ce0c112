#include "lforge/laplacian.hpp"

#include "lforge/apolar.hpp"

namespace lforge {

std::string to_string(WitnessReason reason) {
  switch (reason) {
    case WitnessReason::r2_missing:
      return "r2_missing";
    case WitnessReason::laplacian_escapes:
      return "laplacian_escapes";
    case WitnessReason::gradient_pairing_escapes:
      return "gradient_pairing_escapes";
  }
  return "unknown";
}

namespace {

std::string label(std::size_t i) { return "g" + std::to_string(i + 1); }

bool in_algebra(const GradedSubalgebra& a, const Polynomial& p) { return p.is_constant() || a.contains(p); }

}  // namespace

LaplacianReport is_laplacian(const GradedSubalgebra& algebra, unsigned degree_cap) {
  const auto& gens = algebra.generators();
  unsigned needed = std::max(2u, 2 * algebra.max_generator_degree() - 2);
  if (degree_cap < needed)
    throw DegreeCapError("is_laplacian needs degree cap >= " + std::to_string(needed) + ", got " +
                         std::to_string(degree_cap));

  LaplacianReport report;
  Polynomial r2 = r_squared(algebra.dimension());
  if (!algebra.contains(r2)) report.witnesses.push_back({r2, WitnessReason::r2_missing, "r^2"});

  for (std::size_t i = 0; i < gens.size(); ++i) {
    Polynomial l = laplacian(gens[i]);
    if (!in_algebra(algebra, l))
      report.witnesses.push_back({l, WitnessReason::laplacian_escapes, "laplacian(" + label(i) + ")"});
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      Polynomial p = gradient_pairing(gens[i], gens[j]);
      ++report.checked_pairs;
      if (!in_algebra(algebra, p))
        report.witnesses.push_back(
            {p, WitnessReason::gradient_pairing_escapes, label(i) + " .1 " + label(j)});
    }
  report.is_laplacian = report.witnesses.empty();
  return report;
}

ClosureResult laplacian_closure(const std::vector<Polynomial>& gens, unsigned max_degree,
                                std::size_t max_generators) {
  if (gens.empty()) throw Error("laplacian_closure: empty generating set");
  const std::size_t n = gens.front().dimension();
  std::vector<Polynomial> current = gens;
  const Polynomial r2 = r_squared(n);

  for (unsigned round = 1;; ++round) {
    GradedSubalgebra algebra(n, current);
    std::vector<Polynomial> adjoin;
    bool capped = false;
    auto consider = [&](const Polynomial& p) {
      if (in_algebra(algebra, p)) return;
      if (p.degree() > static_cast<int>(max_degree)) {
        capped = true;
        return;
      }
      adjoin.push_back(primitive_part(p));
    };

    bool add_r2 = !algebra.contains(r2);
    for (const auto& g : current) consider(laplacian(g));
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i; j < current.size(); ++j) consider(gradient_pairing(current[i], current[j]));

    if (!add_r2 && adjoin.empty()) return {std::move(algebra), !capped, round};

    std::vector<Polynomial> next;
    if (add_r2) next.push_back(r2);
    next.insert(next.end(), current.begin(), current.end());
    next.insert(next.end(), adjoin.begin(), adjoin.end());
    GradedSubalgebra grown(n, next);
    current = grown.minimal_generators(grown.max_generator_degree());
    if (current.size() > max_generators)
      throw CapExceeded("laplacian_closure: more than " + std::to_string(max_generators) + " generators after round " +
                            std::to_string(round),
                        GradedSubalgebra(n, current));
  }
}

}  // namespace lforge
