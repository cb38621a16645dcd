#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witt/parallel.hpp"
#include "witt/tensor_field.hpp"

namespace witt {

/// Parameters of F^alpha_{2b}(V) with V the cuspidal gl_2 module.
struct Sl3Params {
  Scalar lambda;
  Scalar b;
  Scalar c;
  Scalar alpha1;
  Scalar alpha2;

  /// All five as free symbols.
  static Sl3Params symbolic();
  /// lambda=1/7, b=1/11, c=1/13, alpha=(1/17, 1/19).
  static Sl3Params desk();
  bool is_numeric() const;
  CuspidalGl2 cuspidal() const { return CuspidalGl2{lambda, b, c}; }
  TensorFieldModule tensor_field() const { return TensorFieldModule::make(cuspidal(), {alpha1, alpha2}); }
  Json to_json() const;
};

/// E_ij of gl_3, 1 <= i,j <= 3.
struct Sl3Generator {
  int i = 1;
  int j = 1;
  std::string name() const;
  bool operator==(const Sl3Generator&) const = default;
};

std::vector<Sl3Generator> all_generators();

/// Generators applied right to left: {E13, E32} acts as E13(E32 x).
using GeneratorWord = std::vector<Sl3Generator>;

/// Parses "E13*E32" (empty text is the empty word). Throws ParseError.
GeneratorWord parse_word(std::string_view text);
std::string word_name(const GeneratorWord& w);

/// Parses "v:i@r1,r2". Throws ParseError with the offending position.
BasisKey parse_basis_symbol(std::string_view text);

ModuleElement act_sl3(const Sl3Params& p, Sl3Generator g, const ModuleElement& x);
ModuleElement act_word(const Sl3Params& p, const GeneratorWord& w, const ModuleElement& x);

using Sl3Action = std::function<ModuleElement(Sl3Generator, const ModuleElement&)>;
Sl3Action default_action(const Sl3Params& p);

/// [E_ij, E_kl] x = (delta_jk E_il - delta_li E_kj) x for all 81 pairs and
/// every v_i(r) with |i| <= index_radius, |r_k| <= lattice_radius.
Report verify_sl3_brackets(const Sl3Params& p, long index_radius, int lattice_radius,
                           ExecPolicy policy = ExecPolicy::parallel, const Sl3Action& action = {});

/// act_sl3 against the Witt image of each generator and against the general
/// sl_{n+1} formula at n = 2.
Report embedding_consistency(const Sl3Params& p, long index_radius, int lattice_radius,
                             ExecPolicy policy = ExecPolicy::parallel);

/// Eigenvalues of E11, E22, E33 on v_i(r): (r1', r2', -r1'-r2').
std::array<Scalar, 3> weight_of(const Sl3Params& p, const BasisKey& k);

struct GenericityCondition {
  enum class Status { holds, fails, undecidable };
  std::string name;
  Scalar value;
  Status status = Status::undecidable;
  bool generation_subset = false;
};

std::string status_name(GenericityCondition::Status s);

/// The ten non-integrality conditions; the first eight form the subset needed
/// for single-vector generation.
struct GenericityReport {
  std::vector<GenericityCondition> conditions;

  bool all_hold() const;
  bool generation_subset_holds() const;
  /// Names of the conditions that are not known to hold (restricted to the subset if asked).
  std::vector<std::string> unmet(bool subset_only) const;
  Report to_report() const;
};

GenericityReport check_generic(const Sl3Params& p);

/// Composite-action displays and the two cancellation identities, identically
/// in the parameters, for |i| <= index_radius, |r_k| <= lattice_radius,
/// s = 1..s_max. `multiplier_offset` perturbs both cancellation multipliers
/// (0 for the real check; nonzero gives a negative control).
Report proof_identity_suite(const Sl3Params& p, long index_radius = 2, int lattice_radius = 2, int s_max = 4,
                            int multiplier_offset = 0);

}  // namespace witt
