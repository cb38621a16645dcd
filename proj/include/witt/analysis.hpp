#pragma once

#include <vector>

#include "witt/linalg.hpp"
#include "witt/sl3.hpp"

namespace witt {

struct ClosureStats {
  int rounds = 0;
  bool fixed_point = false;
  std::size_t images = 0;
  std::size_t discarded = 0;  // image directions with a component outside the window
  std::size_t inserted = 0;
  Json to_json() const;
};

struct ClosureOptions {
  int max_rounds = 10000;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// The nine generators followed by E13*E32 and E23*E31.
std::vector<GeneratorWord> default_words();

/// Grows `basis` to the closure of its current span plus `seeds` under
/// `words`. For each weight space S_w and word g the step adds g(K) with
/// K = {y in S_w : g(y) lies in the window}, so every vector in the result
/// lies in the true submodule. Throws std::invalid_argument when a seed
/// leaves the window.
ClosureStats extend_closure(SubspaceBasis& basis, const Sl3Params& p, const std::vector<ModuleElement>& seeds,
                            const std::vector<GeneratorWord>& words, const ClosureOptions& opts = {});

SubspaceBasis closure(const Sl3Params& p, const std::vector<ModuleElement>& seeds,
                      const std::vector<GeneratorWord>& words, const Window& window, const ClosureOptions& opts = {},
                      ClosureStats* stats = nullptr);

/// Closure from one basis vector in three stages: anti-diagonal words, then
/// E31, then the full word set. Refused unless the generation subset of the
/// genericity conditions holds.
Report check_generation(const Sl3Params& p, const BasisKey& seed, const Window& window,
                        ExecPolicy policy = ExecPolicy::parallel);

/// Every sampled seed generates the inner window. An empty sample means all
/// inner basis vectors plus random length-2 and length-3 combinations.
Report check_irreducible_generic(const Sl3Params& p, const Window& window, std::vector<ModuleElement> sample = {},
                                 ExecPolicy policy = ExecPolicy::parallel, unsigned random_seed = 20240611);

/// Basis of {v : E31 v = E32 v = 0} in each weight space of the window.
std::vector<ModuleElement> find_singular_vectors(const Sl3Params& p, const Window& window);

/// Properness of the submodule generated by the singular vectors.
/// `skip_precondition` exists for the negative control only.
Report check_degenerate_reducibility(const Sl3Params& p, const Window& window, ExecPolicy policy = ExecPolicy::parallel,
                                     bool skip_precondition = false);

/// Derives the two coefficient ratios a_{j-1}/a_j of a minimal-length vector
/// from the action (index replaced by iota), compares them with their closed
/// forms, and factors the cross-ratio numerator in c.
Report recursion_factorization_oracle(int s);

enum class QuadraticWord { e12e21, e23e32, e13e31 };
GeneratorWord quadratic_word(QuadraticWord q);

/// Extreme-index coefficient of a quadratic operator, factored in iota, with
/// each factor matched to the genericity condition that keeps it nonzero.
Report gt_obstruction(QuadraticWord q, long index_radius = 4, int lattice_radius = 2);

/// The m^k words E_{i1 i2} E_{i2 i3} ... E_{ik i1} of c_{mk}.
std::vector<GeneratorWord> gt_casimir_words(int m, int k);

/// c_{3k} commutes with all nine generators on the inner window.
Report gt_central_check(int k, const Sl3Params& p, const Window& window, ExecPolicy policy = ExecPolicy::parallel);

/// d o d = 0, d intertwines every D(u,r) with entries in [-gen_radius, gen_radius],
/// the image of d on Omega^0 is invariant, and the reducibility witnesses of
/// Omega^0 and Omega^2 at the integral twist `integral_alpha`.
Report de_rham_checks(const std::vector<Scalar>& alpha, int lattice_radius, int margin, int gen_radius,
                      const std::vector<int>& integral_alpha, ExecPolicy policy = ExecPolicy::parallel);

}  // namespace witt
