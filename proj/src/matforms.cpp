#include "burch/linear_matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "burch/binary.hpp"

namespace burch {

LinearMatrix::LinearMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("empty matrix");
  e_.assign(static_cast<size_t>(rows_) * cols_, Poly::zero(ring_));
}

LinearMatrix LinearMatrix::from_entries(RingPtr ring,
                                        std::vector<std::vector<Poly>> entries) {
  if (entries.empty() || entries.front().empty())
    throw std::invalid_argument("empty matrix");
  LinearMatrix m(ring, static_cast<int>(entries.size()),
                 static_cast<int>(entries.front().size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(entries[i].size()) != m.cols_)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols_; ++j) m.set(i, j, std::move(entries[i][j]));
  }
  return m;
}

void LinearMatrix::set(int r, int c, Poly p) {
  if (!p.is_zero()) {
    require_same_ring(Poly::zero(ring_), p);
    if (!p.is_linear_form())
      throw std::invalid_argument("matrix entry is not a linear form");
  }
  e_[r * cols_ + c] = std::move(p);
}

LinearMatrix LinearMatrix::transpose() const {
  LinearMatrix m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

LinearMatrix LinearMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  LinearMatrix m(ring_, static_cast<int>(rows.size()),
                 static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
  return m;
}

LinearMatrix LinearMatrix::lift_to(const RingPtr& target) const {
  LinearMatrix m(target, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j).lift_to(target));
  return m;
}

namespace {

// Laplace expansion with memoization on (row set, column set) bit masks.
class MinorCache {
 public:
  explicit MinorCache(const LinearMatrix& m) : m_(m) {}

  Poly det(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size())
      throw std::invalid_argument("non-square minor");
    uint64_t rm = 0, cm = 0;
    for (int r : rows) rm |= uint64_t{1} << r;
    for (int c : cols) cm |= uint64_t{1} << c;
    if (rows.size() != static_cast<size_t>(__builtin_popcountll(rm)) ||
        cols.size() != static_cast<size_t>(__builtin_popcountll(cm)))
      throw std::invalid_argument("repeated minor index");
    return det_masked(rm, cm);
  }

 private:
  Poly det_masked(uint64_t rm, uint64_t cm) {
    if (rm == 0) return Poly::constant(m_.ring(), 1);
    auto it = memo_.find({rm, cm});
    if (it != memo_.end()) return it->second;
    int r0 = __builtin_ctzll(rm);
    uint64_t rrest = rm & (rm - 1);
    Poly acc = Poly::zero(m_.ring());
    int sign = 1;
    for (uint64_t cs = cm; cs; cs &= cs - 1) {
      int c = __builtin_ctzll(cs);
      const Poly& e = m_.at(r0, c);
      if (!e.is_zero()) {
        Poly sub = det_masked(rrest, cm & ~(uint64_t{1} << c));
        acc = sign > 0 ? acc + e * sub : acc - e * sub;
      }
      sign = -sign;
    }
    memo_.emplace(std::make_pair(rm, cm), acc);
    return acc;
  }

  const LinearMatrix& m_;
  std::map<std::pair<uint64_t, uint64_t>, Poly> memo_;
};

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == k) {
      f(s);
      return;
    }
    for (int i = lo; i <= n - (k - pos); ++i) {
      s[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Poly LinearMatrix::minor(const std::vector<int>& rows,
                         const std::vector<int>& cols) const {
  MinorCache cache(*this);
  return cache.det(rows, cols);
}

std::vector<std::string> LinearMatrix::entry_strings() const {
  std::vector<std::string> out;
  for (const auto& p : e_) out.push_back(p.str());
  return out;
}

ConjugationAction ConjugationAction::identity(const RingPtr& ring, int rows,
                                              int cols) {
  return {QMat::identity(ring->nvars(), ring->field()),
          QMat::identity(rows, ring->field()),
          QMat::identity(cols, ring->field())};
}

ConjugationAction ConjugationAction::random(const RingPtr& ring, int rows,
                                            int cols, unsigned long seed) {
  std::mt19937_64 rng(seed);
  const FieldSpec& F = ring->field();
  auto draw = [&](int n) {
    while (true) {
      QMat m(n, n, F);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(i, j) = F.canon(mpq_class(static_cast<long>(rng() % 11) - 5));
      if (m.det() != 0) return m;
    }
  };
  return {draw(ring->nvars()), draw(rows), draw(cols)};
}

ConjugationAction ConjugationAction::inverse() const {
  return {coord_change.inverse(), row_op.inverse(), col_op.inverse()};
}

IdealHandle minors_ideal(const LinearMatrix& M, int t) {
  if (t < 1) throw std::invalid_argument("minor size out of range");
  if (t > std::min(M.rows(), M.cols())) return IdealHandle::zero(M.ring());
  MinorCache cache(M);
  std::vector<Poly> gens;
  subsets(M.rows(), t, [&](const std::vector<int>& rows) {
    subsets(M.cols(), t, [&](const std::vector<int>& cols) {
      Poly d = cache.det(rows, cols);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return IdealHandle(M.ring(), std::move(gens));
}

std::vector<Poly> hilbert_burch_generators(const LinearMatrix& M) {
  if (M.rows() != M.cols() + 1)
    throw std::invalid_argument("expected an n x (n-1) matrix");
  MinorCache cache(M);
  std::vector<int> cols(M.cols());
  for (int j = 0; j < M.cols(); ++j) cols[j] = j;
  std::vector<Poly> f;
  for (int i = 0; i < M.rows(); ++i) {
    std::vector<int> rows;
    for (int r = 0; r < M.rows(); ++r)
      if (r != i) rows.push_back(r);
    Poly d = cache.det(rows, cols);
    f.push_back(i % 2 == 0 ? d : -d);
  }
  // column annihilation identity
  for (int j = 0; j < M.cols(); ++j) {
    Poly s = Poly::zero(M.ring());
    for (int i = 0; i < M.rows(); ++i) s = s + f[i] * M.at(i, j);
    if (!s.is_zero())
      throw std::logic_error("signed minors fail the syzygy identity");
  }
  return f;
}

LinearMatrix conjugate(const LinearMatrix& M, const ConjugationAction& g) {
  const RingPtr& R = M.ring();
  const int n = R->nvars();
  if (g.coord_change.rows() != n || g.row_op.rows() != M.rows() ||
      g.col_op.rows() != M.cols())
    throw std::invalid_argument("action shape mismatch");
  if (g.coord_change.det() == 0 || g.row_op.det() == 0 || g.col_op.det() == 0)
    throw std::invalid_argument("non-invertible action component");

  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly im = Poly::zero(R);
    for (int j = 0; j < n; ++j)
      if (g.coord_change.at(i, j) != 0)
        im = im + Poly::variable(R, j) * g.coord_change.at(i, j);
    images.push_back(std::move(im));
  }

  LinearMatrix out(R, M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      Poly acc = Poly::zero(R);
      for (int k = 0; k < M.rows(); ++k) {
        if (g.row_op.at(i, k) == 0) continue;
        for (int l = 0; l < M.cols(); ++l) {
          if (g.col_op.at(l, j) == 0 || M.at(k, l).is_zero()) continue;
          acc = acc + M.at(k, l).map(R, images) *
                          (g.row_op.at(i, k) * g.col_op.at(l, j));
        }
      }
      out.set(i, j, std::move(acc));
    }
  return out;
}

int rank_at_point(const LinearMatrix& M, const std::vector<mpq_class>& point) {
  bool nonzero = false;
  for (const auto& c : point)
    if (c != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("zero point");
  QMat S(M.rows(), M.cols(), M.ring()->field());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero())
        S.at(i, j) = M.ring()->field().canon(M.at(i, j).eval(point));
  return S.rank();
}

OneGenericResult one_generic_test(const LinearMatrix& M) {
  if (M.rows() != 2) throw std::invalid_argument("expected a 2-row matrix");
  const RingPtr& R = M.ring();
  const int n = R->nvars();
  const int r = M.cols();
  RingPtr A = PolyRing::make({"a1", "a2"}, MonomialOrder::degrevlex(),
                             R->field());
  OneGenericResult res;
  if (n < r) {
    res.one_generic = false;
    res.minor_gcd = Poly::zero(A);
    res.witness = std::make_pair(mpq_class(1), mpq_class(0));
    return res;
  }
  Poly a1 = Poly::variable(A, 0), a2 = Poly::variable(A, 1);
  LinearMatrix C(A, n, r);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < r; ++j)
      C.set(v, j, a1 * M.at(0, j).linear_coeff(v) +
                      a2 * M.at(1, j).linear_coeff(v));

  MinorCache cache(C);
  std::vector<int> allcols(r);
  for (int j = 0; j < r; ++j) allcols[j] = j;
  std::vector<Poly> minors;
  subsets(n, r, [&](const std::vector<int>& rows) {
    Poly d = cache.det(rows, allcols);
    if (!d.is_zero()) minors.push_back(std::move(d));
  });
  if (minors.empty()) {
    res.one_generic = false;
    res.minor_gcd = Poly::zero(A);
    res.witness = std::make_pair(mpq_class(1), mpq_class(0));
    return res;
  }
  res.minor_gcd = binary_form_gcd(minors);
  res.one_generic = res.minor_gcd.is_constant();
  if (!res.one_generic) res.witness = binary_form_rational_root(res.minor_gcd);
  return res;
}

LinearMatrix catalecticant_2step(const RingPtr& ring,
                                 const std::vector<int>& tvars) {
  int k = static_cast<int>(tvars.size());
  if (k < 3) throw std::invalid_argument("need at least three variables");
  LinearMatrix m(ring, 2, k - 2);
  for (int j = 0; j < k - 2; ++j) {
    m.set(0, j, Poly::variable(ring, tvars[j]));
    m.set(1, j, Poly::variable(ring, tvars[j + 2]));
  }
  return m;
}

LinearMatrix hankel_matrix(const RingPtr& ring, const std::vector<int>& tvars) {
  int k = static_cast<int>(tvars.size());
  if (k < 2) throw std::invalid_argument("need at least two variables");
  LinearMatrix m(ring, 2, k - 1);
  for (int j = 0; j < k - 1; ++j) {
    m.set(0, j, Poly::variable(ring, tvars[j]));
    m.set(1, j, Poly::variable(ring, tvars[j + 1]));
  }
  return m;
}

LinearMatrix scroll_matrix(const Poly& top, const Poly& bottom,
                           const std::vector<int>& tvars) {
  const RingPtr& R = top.ring();
  int k = static_cast<int>(tvars.size());
  if (k < 2) throw std::invalid_argument("need at least two variables");
  LinearMatrix m(R, 2, k);
  m.set(0, 0, top);
  m.set(1, 0, bottom);
  for (int j = 0; j + 1 < k; ++j) {
    m.set(0, j + 1, Poly::variable(R, tvars[j]));
    m.set(1, j + 1, Poly::variable(R, tvars[j + 1]));
  }
  return m;
}

CanonicalForm canonicalize_chaos_form(const LinearMatrix& phi,
                                      const std::vector<Poly>& prime_forms,
                                      int u) {
  const RingPtr& R = phi.ring();
  if (R->nvars() != 3)
    throw std::invalid_argument("canonicalization needs a three-variable ring");
  if (prime_forms.size() != 2)
    throw std::invalid_argument("prime must be given by two linear forms");
  QMat L = linear_coeff_matrix(prime_forms);
  if (L.rank() != 2)
    throw std::invalid_argument("prime forms are not independent");
  auto ns = L.nullspace();
  std::vector<mpq_class> point = ns.front();
  if (rank_at_point(phi, point) != u)
    throw std::invalid_argument("rank at the point does not match u");

  const FieldSpec& F = R->field();
  // complete (l1, l2) to a basis: new coordinates (v.x, l1, l2) -> (x, y, z)
  QMat A(3, 3, F);
  for (int j = 0; j < 3; ++j) {
    A.at(1, j) = L.at(0, j);
    A.at(2, j) = L.at(1, j);
  }
  for (int e = 0; e < 3; ++e) {
    for (int j = 0; j < 3; ++j) A.at(0, j) = (j == e) ? 1 : 0;
    if (A.det() != 0) break;
  }
  ConjugationAction coord{A.inverse(), QMat::identity(phi.rows(), F),
                          QMat::identity(phi.cols(), F)};
  LinearMatrix phi1 = conjugate(phi, coord);

  // scalar part at (1:0:0), the image of V(p)
  QMat S(phi.rows(), phi.cols(), F);
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j)
      if (!phi1.at(i, j).is_zero()) S.at(i, j) = phi1.at(i, j).linear_coeff(0);

  QMat P = QMat::identity(phi.rows(), F);
  QMat Q = QMat::identity(phi.cols(), F);
  QMat W = S;
  for (int k = 0; k < u; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < W.rows() && pi < 0; ++i)
      for (int j = k; j < W.cols(); ++j)
        if (W.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) throw std::logic_error("scalar rank dropped unexpectedly");
    for (int j = 0; j < W.cols(); ++j) std::swap(W.at(pi, j), W.at(k, j));
    for (int j = 0; j < P.cols(); ++j) std::swap(P.at(pi, j), P.at(k, j));
    for (int i = 0; i < W.rows(); ++i) std::swap(W.at(i, pj), W.at(i, k));
    for (int i = 0; i < Q.rows(); ++i) std::swap(Q.at(i, pj), Q.at(i, k));
    mpq_class inv = F.inv(W.at(k, k));
    for (int j = 0; j < W.cols(); ++j) W.at(k, j) = F.canon(W.at(k, j) * inv);
    for (int j = 0; j < P.cols(); ++j) P.at(k, j) = F.canon(P.at(k, j) * inv);
    for (int i = 0; i < W.rows(); ++i) {
      if (i == k || W.at(i, k) == 0) continue;
      mpq_class f = W.at(i, k);
      for (int j = 0; j < W.cols(); ++j)
        W.at(i, j) = F.canon(W.at(i, j) - f * W.at(k, j));
      for (int j = 0; j < P.cols(); ++j)
        P.at(i, j) = F.canon(P.at(i, j) - f * P.at(k, j));
    }
    for (int j = 0; j < W.cols(); ++j) {
      if (j == k || W.at(k, j) == 0) continue;
      mpq_class f = W.at(k, j);
      for (int i = 0; i < W.rows(); ++i)
        W.at(i, j) = F.canon(W.at(i, j) - f * W.at(i, k));
      for (int i = 0; i < Q.rows(); ++i)
        Q.at(i, j) = F.canon(Q.at(i, j) - f * Q.at(i, k));
    }
  }
  for (int i = u; i < W.rows(); ++i)
    for (int j = u; j < W.cols(); ++j)
      if (W.at(i, j) != 0)
        throw std::logic_error("scalar rank exceeds u after pivoting");

  ConjugationAction ops{QMat::identity(3, F), P, Q};
  LinearMatrix phi_c = conjugate(phi1, ops);
  for (int i = 0; i < phi_c.rows(); ++i)
    for (int j = 0; j < phi_c.cols(); ++j) {
      mpq_class xc =
          phi_c.at(i, j).is_zero() ? mpq_class(0) : phi_c.at(i, j).linear_coeff(0);
      mpq_class want = (i == j && i < u) ? 1 : 0;
      if (xc != want)
        throw std::logic_error("canonical block shape verification failed");
    }

  CanonicalForm out;
  out.phi_c = phi_c;
  out.action = {coord.coord_change, P, Q};
  out.u = u;
  return out;
}

}  // namespace burch
