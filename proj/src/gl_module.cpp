#include "witt/gl_module.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace witt {

GlVector GlVector::basis(long index, Scalar coeff) {
  GlVector v;
  v.add(index, coeff);
  return v;
}

Scalar GlVector::coeff(long index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar() : it->second;
}

void GlVector::add(long index, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

GlVector& GlVector::operator+=(const GlVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

GlVector& GlVector::operator-=(const GlVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

GlVector GlVector::operator*(const Scalar& s) const {
  GlVector out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      const Scalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols; ++c) {
        if (!b.at(k, c).is_zero()) out.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] -= b.data[k];
  return out;
}

FinDimGlModule::FinDimGlModule(int n, int dim, std::vector<Matrix> action)
    : n_(n), dim_(dim), action_(std::move(action)) {
  if (n <= 0 || dim <= 0) throw std::invalid_argument("module rank and dimension must be positive");
  if (action_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("expected n*n generator matrices");
  }
  for (const auto& m : action_) {
    if (m.rows != dim || m.cols != dim) throw std::invalid_argument("generator matrix has wrong shape");
  }
}

const Matrix& FinDimGlModule::matrix(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("generator index out of range");
  return action_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void FinDimGlModule::set_matrix(int i, int j, Matrix m) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("generator index out of range");
  if (m.rows != dim_ || m.cols != dim_) throw std::invalid_argument("generator matrix has wrong shape");
  action_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = std::move(m);
}

CuspidalGl2 CuspidalGl2::make(Scalar lambda, Scalar b, Scalar c) {
  for (const Scalar& e : {c + lambda, c - lambda}) {
    if (is_integer(e)) throw std::invalid_argument("c+lambda and c-lambda must not be integers");
  }
  return CuspidalGl2{std::move(lambda), std::move(b), std::move(c)};
}

int rank_of(const GlModule& m) {
  if (const auto* f = std::get_if<FinDimGlModule>(&m)) return f->n();
  return 2;
}

namespace {

GlVector act_cuspidal(const CuspidalGl2& v, int i, int j, const GlVector& x) {
  GlVector out;
  for (const auto& [k, a] : x.terms()) {
    const Scalar ii = v.shifted(k);
    if (i == 1 && j == 1) {
      out.add(k, a * (v.b + ii));
    } else if (i == 2 && j == 2) {
      out.add(k, a * (v.b - ii));
    } else if (i == 1 && j == 2) {
      out.add(k + 1, a * (v.c + ii));
    } else {
      out.add(k - 1, a * (v.c - ii));
    }
  }
  return out;
}

GlVector act_matrix(const FinDimGlModule& m, int i, int j, const GlVector& x) {
  const Matrix& mat = m.matrix(i, j);
  GlVector out;
  for (const auto& [k, a] : x.terms()) {
    if (k < 0 || k >= m.dim()) throw std::out_of_range("basis index out of range");
    for (int r = 0; r < m.dim(); ++r) {
      const Scalar& e = mat.at(r, static_cast<int>(k));
      if (!e.is_zero()) out.add(r, a * e);
    }
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<long> basis_indices(const GlModule& m, long radius) {
  std::vector<long> out;
  if (const auto* f = std::get_if<FinDimGlModule>(&m)) {
    for (long k = 0; k < f->dim(); ++k) out.push_back(k);
  } else {
    for (long k = -radius; k <= radius; ++k) out.push_back(k);
  }
  return out;
}

}  // namespace

GlVector act_gl(const GlModule& m, int i, int j, const GlVector& v) {
  const int n = rank_of(m);
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("generator index out of range");
  if (const auto* f = std::get_if<FinDimGlModule>(&m)) return act_matrix(*f, i, j, v);
  return act_cuspidal(std::get<CuspidalGl2>(m), i, j, v);
}

FinDimGlModule exterior_power(int n, int k) {
  if (n <= 0) throw std::invalid_argument("exterior_power needs n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("exterior_power degree out of range");
  const auto basis = subsets(n, k);
  const int dim = static_cast<int>(basis.size());
  std::map<std::vector<int>, int> position;
  for (int p = 0; p < dim; ++p) position[basis[p]] = p;

  std::vector<Matrix> action;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Matrix m(dim, dim);
      for (int col = 0; col < dim; ++col) {
        const auto& s = basis[col];
        if (std::find(s.begin(), s.end(), j) == s.end()) continue;
        if (i == j) {
          m.at(col, col) = Scalar(1);
          continue;
        }
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        // e_i takes the slot of e_j; sorting it into place passes every
        // remaining index strictly between i and j.
        int between = 0;
        for (int x : s) {
          if (x != j && x > std::min(i, j) && x < std::max(i, j)) ++between;
        }
        std::vector<int> t;
        for (int x : s) t.push_back(x == j ? i : x);
        std::sort(t.begin(), t.end());
        m.at(position.at(t), col) = Scalar(between % 2 == 0 ? 1 : -1);
      }
      action.push_back(std::move(m));
    }
  }
  FinDimGlModule out(n, dim, std::move(action));
  out.set_labels(basis);
  return out;
}

Report verify_gl_brackets(const GlModule& m, long index_radius) {
  Report rep;
  rep.check = "gl_brackets";
  rep.anchor = "gl_n bracket law on the input module";
  const int n = rank_of(m);
  const auto indices = basis_indices(m, index_radius);
  rep.window["indices"] = indices;
  std::size_t checked = 0;
  for (long x : indices) {
    const GlVector v = GlVector::basis(x);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            GlVector lhs = act_gl(m, i, j, act_gl(m, k, l, v));
            lhs -= act_gl(m, k, l, act_gl(m, i, j, v));
            if (j == k) lhs -= act_gl(m, i, l, v);
            if (l == i) lhs += act_gl(m, k, j, v);
            ++checked;
            if (!lhs.is_zero()) {
              rep.add_residual({{"generators", {i, j, k, l}}, {"basis_index", x}, {"residual", to_json(lhs)}});
            }
          }
  }
  rep.stats["checked"] = checked;
  return rep;
}

Scalar central_charge(const GlModule& m, long index_radius) {
  const int n = rank_of(m);
  std::optional<Scalar> charge;
  for (long x : basis_indices(m, index_radius)) {
    GlVector sum;
    for (int i = 1; i <= n; ++i) sum += act_gl(m, i, i, GlVector::basis(x));
    const Scalar c = sum.coeff(x);
    GlVector rest = sum;
    rest -= GlVector::basis(x, c);
    if (!rest.is_zero() || (charge && !(*charge == c))) {
      throw std::domain_error("the identity matrix does not act as a scalar");
    }
    charge = c;
  }
  return charge.value_or(Scalar());
}

Json to_json(const FinDimGlModule& m) {
  Json j;
  j["n"] = m.n();
  j["dim"] = m.dim();
  Json mats = Json::object();
  for (int a = 1; a <= m.n(); ++a) {
    for (int b = 1; b <= m.n(); ++b) {
      Json rows = Json::array();
      const Matrix& mat = m.matrix(a, b);
      for (const auto& e : mat.data) rows.push_back(e.to_string());
      mats["E" + std::to_string(a) + std::to_string(b)] = rows;
    }
  }
  j["matrices"] = mats;
  return j;
}

FinDimGlModule fin_dim_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int dim = j.at("dim").get<int>();
  if (n <= 0 || n > 9) throw std::invalid_argument("module rank must be in 1..9");
  std::vector<Matrix> action;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      const auto key = "E" + std::to_string(a) + std::to_string(b);
      const Json& entries = j.at("matrices").at(key);
      if (entries.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument(key + " must have dim*dim entries");
      }
      Matrix m(dim, dim);
      for (std::size_t k = 0; k < entries.size(); ++k) m.data[k] = Scalar::parse(entries[k].get<std::string>());
      action.push_back(std::move(m));
    }
  }
  return FinDimGlModule(n, dim, std::move(action));
}

Json to_json(const GlVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v.terms()) out.push_back({{"index", k}, {"coeff", c.to_string()}});
  return out;
}

GlVector gl_vector_from_json(const Json& j) {
  GlVector v;
  for (const auto& t : j) v.add(t.at("index").get<long>(), Scalar::parse(t.at("coeff").get<std::string>()));
  return v;
}

}  // namespace witt
