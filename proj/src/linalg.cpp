#include "burch/linalg.hpp"

#include <random>
#include <stdexcept>

namespace burch {

QMat QMat::identity(int n, FieldSpec field) {
  QMat m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMat r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  for (auto& v : r.a_) v = field_.canon(v);
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(std::vector<mpq_class>& a, int rows, int cols,
                         const FieldSpec& F) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
    mpq_class inv = F.inv(a[r * cols + c]);
    for (int j = c; j < cols; ++j)
      a[r * cols + j] = F.canon(a[r * cols + j] * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      mpq_class f = a[i * cols + c];
      for (int j = c; j < cols; ++j)
        a[i * cols + j] = F.canon(a[i * cols + j] - f * a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int QMat::rank() const {
  std::vector<mpq_class> a = a_;
  return static_cast<int>(echelon(a, rows_, cols_, field_).size());
}

std::vector<std::vector<mpq_class>> QMat::nullspace() const {
  std::vector<mpq_class> a = a_;
  std::vector<int> pivots = echelon(a, rows_, cols_, field_);
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(cols_, mpq_class(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field_.canon(-a[r * cols_ + c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat QMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  int n = rows_;
  std::vector<mpq_class> a(n * 2 * n, mpq_class(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * 2 * n + j] = at(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  std::vector<int> pivots = echelon(a, n, 2 * n, field_);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw std::domain_error("matrix is singular");
  QMat r(n, n, field_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a[i * 2 * n + n + j];
  return r;
}

mpq_class QMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  std::vector<mpq_class> a = a_;
  int n = rows_;
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (a[i * n + c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return 0;
    if (pr != c) {
      for (int j = 0; j < n; ++j) std::swap(a[pr * n + j], a[c * n + j]);
      d = -d;
    }
    d = field_.canon(d * a[c * n + c]);
    mpq_class inv = field_.inv(a[c * n + c]);
    for (int i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      mpq_class f = field_.canon(a[i * n + c] * inv);
      for (int j = c; j < n; ++j)
        a[i * n + j] = field_.canon(a[i * n + j] - f * a[c * n + j]);
    }
  }
  return d;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMat linear_coeff_matrix(const std::vector<Poly>& forms) {
  if (forms.empty()) throw std::invalid_argument("empty form list");
  const RingPtr& ring = forms.front().ring();
  for (const auto& f : forms) {
    require_same_ring(forms.front(), f);
    if (!f.is_linear_form())
      throw std::invalid_argument("non-linear input to linear_coeff_matrix");
  }
  QMat m(static_cast<int>(forms.size()), ring->nvars(), ring->field());
  for (size_t i = 0; i < forms.size(); ++i)
    for (int v = 0; v < ring->nvars(); ++v)
      m.at(static_cast<int>(i), v) = forms[i].linear_coeff(v);
  return m;
}

std::vector<Poly> random_linear_forms(const RingPtr& ring, int count,
                                      unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  const FieldSpec& F = ring->field();
  for (int i = 0; i < count; ++i) {
    Poly f = Poly::zero(ring);
    bool nonzero = false;
    while (!nonzero) {
      f = Poly::zero(ring);
      for (int v = 0; v < ring->nvars(); ++v) {
        long c;
        if (F.is_rational()) {
          c = static_cast<long>(rng() % 2001) - 1000;
        } else {
          c = static_cast<long>(rng() % F.characteristic);
        }
        if (c != 0) {
          f = f + Poly::variable(ring, v) * mpq_class(c);
          nonzero = true;
        }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace burch
