#pragma once

#include <map>
#include <optional>
#include <vector>

#include "witt/tensor_field.hpp"

namespace witt {

using Row = std::vector<Scalar>;

/// Row space in reduced row-echelon form. Pivots are 1, every pivot column is
/// zero in the other rows, and rows are ordered by pivot column; the pivot of
/// a row is its lowest-index nonzero entry.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == width_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot columns.
  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  /// Adds v; returns the new normalized row when the rank grows.
  std::optional<Row> insert(const Row& v);

 private:
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero_row(const Row& r);

/// Rank of a list of rows.
std::size_t rank_of(const std::vector<Row>& rows, std::size_t width);

/// Basis of {x : M x = 0} for M given by rows.
std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t width);

/// i-range and (r1, r2) box; the inner window is inset by `margin` on every axis.
struct Window {
  long i_min = -4;
  long i_max = 4;
  int r1_min = -4;
  int r1_max = 4;
  int r2_min = -4;
  int r2_max = 4;
  int margin = 2;

  /// |i| <= I, |r1| <= R1, |r2| <= R2. Throws std::invalid_argument when the inner window is empty.
  static Window centered(long I, int R1, int R2, int margin);
  void validate() const;

  std::size_t width() const { return static_cast<std::size_t>(i_max - i_min + 1); }
  std::size_t column(long i) const { return static_cast<std::size_t>(i - i_min); }
  bool contains(const BasisKey& k) const;
  bool contains(const Lattice& r) const;
  bool inner_contains(const BasisKey& k) const;
  std::vector<Lattice> points() const;
  std::vector<BasisKey> keys() const;
  std::vector<BasisKey> inner_keys() const;
  Json to_json() const;
};

/// Per-weight row spaces inside a window: a candidate submodule truncated to the window.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(Window w) : window_(w) {}

  const Window& window() const { return window_; }
  const std::map<Lattice, RowSpace>& spaces() const { return spaces_; }
  std::size_t dimension() const;

  /// Element supported at one lattice point, as a row over the i-range.
  Row to_row(const ModuleElement& x, Lattice* weight = nullptr) const;
  ModuleElement from_row(const Lattice& weight, const Row& row) const;

  bool contains(const ModuleElement& x) const;
  bool contains(const BasisKey& k) const;
  /// Inserts one weight component; returns the new basis row as an element when the span grows.
  std::optional<ModuleElement> insert(const ModuleElement& x);
  /// All basis rows as elements, in lattice then pivot order.
  std::vector<ModuleElement> elements() const;

 private:
  Window window_;
  std::map<Lattice, RowSpace> spaces_;
};

/// Splits an element into its weight (lattice point) components, in lattice order.
std::vector<ModuleElement> weight_components(const ModuleElement& x);

}  // namespace witt
