#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <map>
#include <vector>

#include "witt/gl_module.hpp"

namespace witt {

inline constexpr int kMaxRank = 4;

/// Point of Z^n, n <= kMaxRank.
struct Lattice {
  int n = 0;
  std::array<int, kMaxRank> v{};

  Lattice() = default;
  Lattice(std::initializer_list<int> coords);
  static Lattice zero(int n);
  static Lattice unit(int n, int k);  // e_k, 1-based

  int operator[](int k) const { return v[static_cast<std::size_t>(k)]; }
  int& operator[](int k) { return v[static_cast<std::size_t>(k)]; }
  Lattice operator+(const Lattice& o) const;
  Lattice operator-(const Lattice& o) const;
  Lattice operator-() const;
  auto operator<=>(const Lattice&) const = default;
  bool operator==(const Lattice&) const = default;
};

struct BasisKey {
  long index = 0;
  Lattice r;
  auto operator<=>(const BasisKey&) const = default;
  bool operator==(const BasisKey&) const = default;
};

/// Finite formal sum of basis symbols v_index(r) with nonzero Scalar coefficients.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement basis(long index, const Lattice& r, Scalar coeff = Scalar(1));

  const std::map<BasisKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const BasisKey& k) const;
  void add(const BasisKey& k, const Scalar& coeff);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement operator*(const Scalar& s) const;
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  bool operator==(const ModuleElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<BasisKey, Scalar> terms_;
};

/// F^alpha_b(V) = V (x) Laurent polynomials in n variables.
struct TensorFieldModule {
  GlModule V;
  std::vector<Scalar> alpha;

  /// Throws std::invalid_argument when alpha's length differs from the rank of V.
  static TensorFieldModule make(GlModule V, std::vector<Scalar> alpha);
  int n() const { return static_cast<int>(alpha.size()); }
};

/// D(u, r) = t^r sum_i u_i d_i.
struct WittGenerator {
  std::vector<Scalar> u;
  Lattice r;
};

/// D(u,r) v(m) = ((u | m+alpha) v + sum_{i,j} r_i u_j E_ij v)(m+r).
ModuleElement act_witt(const TensorFieldModule& F, const WittGenerator& D, const ModuleElement& x);

/// w = (u|s) v - (v|r) u, so that [D(u,r), D(v,s)] = D(w, r+s).
WittGenerator witt_bracket(const WittGenerator& a, const WittGenerator& b);

/// Image of E_ij (1 <= i,j <= n+1) under the standard embedding sl_{n+1} -> W_n.
WittGenerator embedded_generator(int n, int i, int j);

/// The sl_{n+1} action written out directly on v(r) (no Witt generators involved).
ModuleElement act_sl_embedded(const TensorFieldModule& F, int i, int j, const ModuleElement& x);

using ElementOp = std::function<ModuleElement(const ModuleElement&)>;

/// [A,B]x = A(Bx) - B(Ax).
ModuleElement commutator(const ElementOp& a, const ElementOp& b, const ModuleElement& x);

/// Basis symbols v_i(r) with every gl-basis index (|i| <= index_radius for
/// the cuspidal module) and |r_k| <= lattice_radius.
std::vector<ModuleElement> window_basis(const TensorFieldModule& F, long index_radius, int lattice_radius);

/// [D(u,r), D(v,s)] x - D(w, r+s) x on every x.
Report witt_bracket_check(const TensorFieldModule& F, const WittGenerator& a, const WittGenerator& b,
                          const std::vector<ModuleElement>& xs);

/// Cyclic sum of nested commutators of three Witt generators on every x.
Report jacobi_check(const TensorFieldModule& F, const WittGenerator& a, const WittGenerator& b,
                    const WittGenerator& c, const std::vector<ModuleElement>& xs);

/// de Rham differential t^alpha Omega^k -> t^alpha Omega^{k+1}, with element
/// indices taken as positions in exterior_power(n, k) / (n, k+1):
///   d(e_S t^m) = sum_{j not in S} (m_j + alpha_j) e_j ^ e_S t^m.
/// Throws std::invalid_argument when k >= n.
ModuleElement de_rham_differential(int n, int k, const std::vector<Scalar>& alpha, const ModuleElement& x);

/// d(D x) - D(d x) for each generator and each x in Omega^k.
Report verify_d_intertwines(int n, int k, const std::vector<Scalar>& alpha, const std::vector<WittGenerator>& gens,
                            const std::vector<ModuleElement>& xs);

Json to_json(const Lattice& r);
Lattice lattice_from_json(const Json& j);
Json to_json(const WittGenerator& D);
Json to_json(const ModuleElement& x, const std::vector<Scalar>& alpha,
             const std::vector<std::vector<int>>* labels = nullptr);
/// Inverse of to_json; fills `alpha` when the field is present.
ModuleElement element_from_json(const Json& j, std::vector<Scalar>* alpha = nullptr,
                                const std::vector<std::vector<int>>* labels = nullptr);

/// "v:i@r1,r2" text form for n = 2 basis symbols.
std::string basis_symbol(const BasisKey& k);

}  // namespace witt
