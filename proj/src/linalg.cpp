#include "witt/linalg.hpp"

#include <stdexcept>

namespace witt {

bool is_zero_row(const Row& r) {
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {

std::optional<std::size_t> leading(const Row& r) {
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!r[k].is_zero()) return k;
  }
  return std::nullopt;
}

void axpy(Row& y, const Scalar& a, const Row& x) {
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] -= a * x[k];
  }
}

}  // namespace

Row RowSpace::reduce(Row v) const {
  if (v.size() != width_) throw std::invalid_argument("row has the wrong width");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar a = v[pivots_[k]];
    if (!a.is_zero()) axpy(v, a, rows_[k]);
  }
  return v;
}

bool RowSpace::contains(const Row& v) const { return is_zero_row(reduce(v)); }

std::optional<Row> RowSpace::insert(const Row& v) {
  Row r = reduce(v);
  const auto p = leading(r);
  if (!p) return std::nullopt;
  const Scalar inv = r[*p].inverse();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    const Scalar a = row[*p];
    if (!a.is_zero()) axpy(row, a, r);
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < *p) ++at;
  rows_.insert(rows_.begin() + static_cast<long>(at), r);
  pivots_.insert(pivots_.begin() + static_cast<long>(at), *p);
  return r;
}

std::size_t rank_of(const std::vector<Row>& rows, std::size_t width) {
  RowSpace s(width);
  for (const auto& r : rows) s.insert(r);
  return s.rank();
}

std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t width) {
  RowSpace s(width);
  for (const auto& r : rows) s.insert(r);
  std::vector<bool> is_pivot(width, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    Row x(width);
    x[f] = Scalar(1);
    for (std::size_t k = 0; k < s.rank(); ++k) x[s.pivots()[k]] = -s.rows()[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

Window Window::centered(long I, int R1, int R2, int margin) {
  Window w{-I, I, -R1, R1, -R2, R2, margin};
  w.validate();
  return w;
}

void Window::validate() const {
  if (margin < 0) throw std::invalid_argument("window margin must be nonnegative");
  if (i_max - i_min < 2L * margin || r1_max - r1_min < 2 * margin || r2_max - r2_min < 2 * margin) {
    throw std::invalid_argument("inner window is empty");
  }
}

bool Window::contains(const Lattice& r) const {
  return r.n == 2 && r[0] >= r1_min && r[0] <= r1_max && r[1] >= r2_min && r[1] <= r2_max;
}

bool Window::contains(const BasisKey& k) const { return k.index >= i_min && k.index <= i_max && contains(k.r); }

bool Window::inner_contains(const BasisKey& k) const {
  return k.r.n == 2 && k.index >= i_min + margin && k.index <= i_max - margin && k.r[0] >= r1_min + margin &&
         k.r[0] <= r1_max - margin && k.r[1] >= r2_min + margin && k.r[1] <= r2_max - margin;
}

std::vector<Lattice> Window::points() const {
  std::vector<Lattice> out;
  for (int a = r1_min; a <= r1_max; ++a)
    for (int b = r2_min; b <= r2_max; ++b) out.push_back(Lattice{a, b});
  return out;
}

std::vector<BasisKey> Window::keys() const {
  std::vector<BasisKey> out;
  for (const auto& r : points())
    for (long i = i_min; i <= i_max; ++i) out.push_back(BasisKey{i, r});
  return out;
}

std::vector<BasisKey> Window::inner_keys() const {
  std::vector<BasisKey> out;
  for (const auto& k : keys()) {
    if (inner_contains(k)) out.push_back(k);
  }
  return out;
}

Json Window::to_json() const {
  return {{"i", {i_min, i_max}}, {"r1", {r1_min, r1_max}}, {"r2", {r2_min, r2_max}}, {"margin", margin}};
}

std::size_t SubspaceBasis::dimension() const {
  std::size_t d = 0;
  for (const auto& [r, s] : spaces_) d += s.rank();
  return d;
}

Row SubspaceBasis::to_row(const ModuleElement& x, Lattice* weight) const {
  Row row(window_.width());
  std::optional<Lattice> at;
  for (const auto& [k, c] : x.terms()) {
    if (!window_.contains(k)) throw std::invalid_argument("element leaves the window: " + basis_symbol(k));
    if (at && !(*at == k.r)) throw std::invalid_argument("element is not homogeneous");
    at = k.r;
    row[window_.column(k.index)] = c;
  }
  if (weight && at) *weight = *at;
  return row;
}

ModuleElement SubspaceBasis::from_row(const Lattice& weight, const Row& row) const {
  ModuleElement x;
  for (std::size_t k = 0; k < row.size(); ++k) x.add(BasisKey{window_.i_min + static_cast<long>(k), weight}, row[k]);
  return x;
}

bool SubspaceBasis::contains(const ModuleElement& x) const {
  for (const auto& part : weight_components(x)) {
    Lattice w;
    const Row row = to_row(part, &w);
    auto it = spaces_.find(w);
    if (it == spaces_.end()) return false;
    if (!it->second.contains(row)) return false;
  }
  return true;
}

bool SubspaceBasis::contains(const BasisKey& k) const { return contains(ModuleElement::basis(k.index, k.r)); }

std::optional<ModuleElement> SubspaceBasis::insert(const ModuleElement& x) {
  if (x.is_zero()) return std::nullopt;
  Lattice w;
  const Row row = to_row(x, &w);
  auto it = spaces_.try_emplace(w, RowSpace(window_.width())).first;
  auto added = it->second.insert(row);
  if (!added) return std::nullopt;
  return from_row(w, *added);
}

std::vector<ModuleElement> SubspaceBasis::elements() const {
  std::vector<ModuleElement> out;
  for (const auto& [w, s] : spaces_)
    for (const auto& row : s.rows()) out.push_back(from_row(w, row));
  return out;
}

std::vector<ModuleElement> weight_components(const ModuleElement& x) {
  std::map<Lattice, ModuleElement> parts;
  for (const auto& [k, c] : x.terms()) parts[k.r].add(k, c);
  std::vector<ModuleElement> out;
  for (auto& [w, e] : parts) out.push_back(std::move(e));
  return out;
}

}  // namespace witt
