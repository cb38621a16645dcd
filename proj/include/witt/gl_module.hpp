#pragma once

#include <map>
#include <variant>
#include <vector>

#include "witt/report.hpp"
#include "witt/scalar.hpp"

namespace witt {

/// Finite-support vector over a gl_n module basis. Zero coefficients are never stored.
class GlVector {
 public:
  GlVector() = default;
  static GlVector basis(long index, Scalar coeff = Scalar(1));

  const std::map<long, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long index) const;
  void add(long index, const Scalar& coeff);

  GlVector& operator+=(const GlVector& o);
  GlVector& operator-=(const GlVector& o);
  GlVector operator*(const Scalar& s) const;
  bool operator==(const GlVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<long, Scalar> terms_;
};

/// dim x dim matrix over Scalar, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  Scalar& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// gl_n module given by one matrix per generator E_ij (indices 1-based).
class FinDimGlModule {
 public:
  FinDimGlModule(int n, int dim, std::vector<Matrix> action);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const Matrix& matrix(int i, int j) const;
  void set_matrix(int i, int j, Matrix m);
  /// Basis labels as index subsets, present for exterior powers.
  const std::vector<std::vector<int>>& labels() const { return labels_; }
  void set_labels(std::vector<std::vector<int>> labels) { labels_ = std::move(labels); }

 private:
  int n_;
  int dim_;
  std::vector<Matrix> action_;
  std::vector<std::vector<int>> labels_;
};

/// The cuspidal gl_2 family on span{v_i : i in Z}:
///   E11 v_i = (b+i'') v_i,  E22 v_i = (b-i'') v_i,
///   E12 v_i = (c+i'') v_{i+1},  E21 v_i = (c-i'') v_{i-1},  i'' = lambda+i.
/// Indices are materialized on demand.
struct CuspidalGl2 {
  Scalar lambda;
  Scalar b;
  Scalar c;

  /// Throws std::invalid_argument when c+lambda or c-lambda is a rational integer.
  static CuspidalGl2 make(Scalar lambda, Scalar b, Scalar c);
  Scalar shifted(long i) const { return lambda + Scalar(i); }
};

using GlModule = std::variant<FinDimGlModule, CuspidalGl2>;

int rank_of(const GlModule& m);

/// E_ij v. Throws std::out_of_range for bad indices.
GlVector act_gl(const GlModule& m, int i, int j, const GlVector& v);

/// Lambda^k(C^n): basis e_S over k-subsets in lexicographic order.
FinDimGlModule exterior_power(int n, int k);

/// Bracket law [E_ij, E_kl] = delta_jk E_il - delta_li E_kj on every basis
/// vector (all of them for a matrix module, |i| <= index_radius for cuspidal).
Report verify_gl_brackets(const GlModule& m, long index_radius = 4);

/// The scalar by which sum_i E_ii acts. Throws std::domain_error when it is not scalar.
Scalar central_charge(const GlModule& m, long index_radius = 4);

Json to_json(const FinDimGlModule& m);
FinDimGlModule fin_dim_from_json(const Json& j);
Json to_json(const GlVector& v);
GlVector gl_vector_from_json(const Json& j);

}  // namespace witt
