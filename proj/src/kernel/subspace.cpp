#include "exactalg/subspace.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace exactalg {

Subspace Subspace::zero(Field f, std::size_t n) { return Subspace(Matrix(f, 0, n), {}); }

Subspace Subspace::full(Field f, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, n), std::move(piv));
}

Subspace Subspace::span(Field f, std::size_t n, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(f, n);
  return row_space(Matrix::from_rows(f, n, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto red = rref(m);
  const std::size_t r = red.pivots.size();
  Matrix basis(m.field(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = red.matrix(i, c);
  return Subspace(std::move(basis), std::move(red.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("reduce: ambient dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar x = r[pivots_[i]];
    if (x.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient(); ++c)
      if (!basis_(i, c).is_zero()) r[c] -= x * basis_(i, c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return exactalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw std::invalid_argument("contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector outside the subspace");
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Matrix Subspace::quotient_projection() const {
  auto comp = complement_coordinates();
  Matrix q(field(), comp.size(), ambient());
  // Column j of the projection is reduce(e_j) restricted to the complement.
  for (std::size_t j = 0; j < ambient(); ++j) {
    Vector r = reduce(unit_vector(field(), ambient(), j));
    for (std::size_t k = 0; k < comp.size(); ++k) q(k, j) = r[comp[k]];
  }
  return q;
}

Matrix Subspace::inclusion() const { return basis_.transpose(); }

SpanBuilder::SpanBuilder(Field f, std::size_t n) : field_(f), n_(n) {}

SpanBuilder::SpanBuilder(const Subspace& start) : field_(start.field()), n_(start.ambient()) {
  rows_ = start.basis_vectors();
  pivots_ = start.pivots();
}

Vector SpanBuilder::reduce(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("SpanBuilder: length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar x = r[pivots_[i]];
    if (!x.is_zero()) axpy(r, -x, rows_[i]);
  }
  return r;
}

bool SpanBuilder::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar s = r[p].inverse();
  for (auto& x : r) x *= s;
  for (auto& row : rows_) {
    Scalar x = row[p];
    if (!x.is_zero()) axpy(row, -x, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Subspace SpanBuilder::build() const {
  // Rows are fully reduced; sorting by pivot gives the echelon form.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix basis(field_, rows_.size(), n_);
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < order.size(); ++i) {
    basis.set_row(i, rows_[order[i]]);
    piv.push_back(pivots_[order[i]]);
  }
  return Subspace(std::move(basis), std::move(piv));
}

Subspace null_space(const Matrix& m) {
  auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(m.field(), n);
    x[f] = m.field().one();
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = -red.matrix(i, f);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(m.field(), n, vecs);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace image_of(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw std::invalid_argument("image_of: dimension mismatch");
  if (u.is_zero()) return Subspace::zero(m.field(), m.rows());
  return image(m * u.inclusion());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("sum: ambient dimension mismatch");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  return Subspace::row_space(vstack({u.basis(), v.basis()}));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (u.is_zero() || v.is_full()) return u;
  if (v.is_zero() || u.is_full()) return v;
  Subspace coeffs = null_space(v.quotient_projection() * u.inclusion());
  return image_of(u.inclusion(), coeffs);
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  if (m.rows() != v.ambient()) throw std::invalid_argument("preimage: dimension mismatch");
  if (v.is_full()) return Subspace::full(m.field(), m.cols());
  return null_space(v.quotient_projection() * m);
}

bool is_invariant(const Subspace& u, const std::vector<Matrix>& maps) {
  for (const auto& f : maps)
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (!u.contains(f.apply(u.basis_vector(i)))) return false;
  return true;
}

Subspace largest_invariant_subspace(const std::vector<Matrix>& maps, const Subspace& w) {
  Subspace u = w;
  while (true) {
    Subspace next = u;
    for (const auto& f : maps) {
      if (next.is_zero()) break;
      next = intersect(next, preimage(f, u));
    }
    if (next.dim() == u.dim()) return u;
    u = std::move(next);
  }
}

Subspace invariant_closure(const std::vector<Matrix>& maps, const Subspace& u) {
  SpanBuilder b(u.field(), u.ambient());
  std::deque<Vector> work;
  for (auto& v : u.basis_vectors())
    if (b.add(v)) work.push_back(v);
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (const auto& f : maps) {
      Vector w = f.apply(v);
      if (b.add(w)) work.push_back(std::move(w));
    }
  }
  return b.build();
}

std::vector<Matrix> intertwiners(Field f, std::size_t src_dim, std::size_t tgt_dim,
                                 const std::vector<Matrix>& src, const std::vector<Matrix>& tgt) {
  if (src.size() != tgt.size()) throw std::invalid_argument("intertwiners: family size mismatch");
  const std::size_t unknowns = src_dim * tgt_dim;
  Matrix eq(f, src.size() * unknowns, unknowns);
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Matrix& x = src[j];
    const Matrix& y = tgt[j];
    if (x.rows() != src_dim || x.cols() != src_dim || y.rows() != tgt_dim || y.cols() != tgt_dim)
      throw std::invalid_argument("intertwiners: map shape mismatch");
    // Row (r, c) of block j encodes (F x - y F)[r][c].
    for (std::size_t r = 0; r < tgt_dim; ++r)
      for (std::size_t c = 0; c < src_dim; ++c) {
        std::size_t row = j * unknowns + r * src_dim + c;
        for (std::size_t t = 0; t < src_dim; ++t)
          if (!x(t, c).is_zero()) eq(row, r * src_dim + t) += x(t, c);
        for (std::size_t t = 0; t < tgt_dim; ++t)
          if (!y(r, t).is_zero()) eq(row, t * src_dim + c) -= y(r, t);
      }
  }
  return as_matrices(null_space(eq), tgt_dim, src_dim);
}

std::vector<Matrix> as_matrices(const Subspace& s, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(Matrix::from_flat(s.field(), rows, cols, s.basis_vector(i)));
  return out;
}

bool enumeration_feasible(Field f, std::size_t n, std::uint64_t bound) {
  if (f.is_rational()) return false;
  std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > bound / p) return false;
    total *= p;
  }
  return total <= bound;
}

void for_each_subspace(Field f, std::size_t n, std::uint64_t bound,
                       const std::function<bool(const Subspace&)>& visit) {
  if (f.is_rational()) throw std::invalid_argument("subspace enumeration needs a finite field");
  if (!enumeration_feasible(f, n, bound))
    throw std::invalid_argument("subspace enumeration bound exceeded: " + f.name() + "^" + std::to_string(n));
  const std::uint64_t p = f.characteristic();
  for (std::size_t r = 0; r <= n; ++r) {
    // Pivot sets as increasing r-tuples.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(i, c);
      std::vector<std::uint64_t> digits(free_slots.size(), 0);
      while (true) {
        Matrix basis(f, r, n);
        for (std::size_t i = 0; i < r; ++i) basis(i, piv[i]) = f.one();
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          basis(free_slots[s].first, free_slots[s].second) = f.element(digits[s]);
        if (!visit(Subspace(std::move(basis), piv))) return;
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      // Next pivot combination.
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, std::uint64_t bound) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, bound, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace exactalg
