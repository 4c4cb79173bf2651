#include "exactalg/hopf.hpp"

#include <stdexcept>
#include <string>

namespace exactalg {

namespace {

Matrix column(const Vector& v) { return Matrix::from_columns(v.front().field(), v.size(), {v}); }

// Product in the k-fold tensor power of h, factorwise.
Vector tensor_power_multiply(const Algebra& h, std::size_t k, const Vector& x, const Vector& y) {
  const std::size_t n = h.dim();
  std::size_t total = 1;
  for (std::size_t t = 0; t < k; ++t) total *= n;
  Vector out = zero_vector(h.field(), total);
  for (std::size_t a = 0; a < total; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < total; ++b) {
      if (y[b].is_zero()) continue;
      // Digits of a and b, most significant first.
      Matrix acc = Matrix::from_columns(h.field(), 1, {Vector{x[a] * y[b]}});
      std::size_t da = total, ia = a, ib = b;
      for (std::size_t t = 0; t < k; ++t) {
        da /= n;
        std::size_t i = ia / da, j = ib / da;
        ia %= da;
        ib %= da;
        acc = tensor(acc, column(h.basis_product(i, j)));
      }
      for (std::size_t c = 0; c < total; ++c)
        if (!acc(c, 0).is_zero()) out[c] += acc(c, 0);
    }
  }
  return out;
}

// R placed in legs (p, q) of H^(x)3 with the unit in the remaining leg.
Vector embed_r(const HopfAlgebra& h, const Vector& r, std::size_t p, std::size_t q) {
  const std::size_t n = h.dim();
  const Vector& one = h.algebra()->unit();
  Vector out = zero_vector(h.field(), n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& coeff = r[a * n + b];
      if (coeff.is_zero()) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (one[u].is_zero()) continue;
        std::size_t idx[3];
        idx[p] = a;
        idx[q] = b;
        idx[3 - p - q] = u;
        out[(idx[0] * n + idx[1]) * n + idx[2]] += coeff * one[u];
      }
    }
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(AlgebraPtr algebra, Matrix comult, Matrix counit, Matrix antipode,
                         std::optional<Vector> rmatrix)
    : algebra_(std::move(algebra)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      rmatrix_(std::move(rmatrix)) {
  if (!algebra_) throw std::invalid_argument("Hopf algebra over a null algebra");
  const std::size_t n = algebra_->dim();
  if (comult_.rows() != n * n || comult_.cols() != n) throw std::invalid_argument("comultiplication must be n^2 x n");
  if (counit_.rows() != 1 || counit_.cols() != n) throw std::invalid_argument("counit must be 1 x n");
  if (antipode_.rows() != n || antipode_.cols() != n) throw std::invalid_argument("antipode must be n x n");
  if (rmatrix_ && rmatrix_->size() != n * n) throw std::invalid_argument("R-matrix must have n^2 entries");
  antipode_inverse_ = inverse(antipode_);
}

const Matrix& HopfAlgebra::antipode_inverse() const {
  if (!antipode_inverse_) throw std::invalid_argument("antipode is not invertible");
  return *antipode_inverse_;
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return *a.algebra_ == *b.algebra_ && a.comult_ == b.comult_ && a.counit_ == b.counit_ &&
         a.antipode_ == b.antipode_ && a.rmatrix_ == b.rmatrix_;
}

bool same_hopf(const HopfPtr& a, const HopfPtr& b) { return a == b || (a && b && *a == *b); }

Matrix swap_map(Field f, std::size_t m, std::size_t n) {
  Matrix s(f, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = f.one();
  return s;
}

Report check_hopf(const HopfAlgebra& h) {
  Report r;
  const Algebra& a = *h.algebra();
  const Field f = h.field();
  const std::size_t n = h.dim();
  r.merge(check_algebra(a), "algebra: ");
  const Matrix id = Matrix::identity(f, n);
  const Matrix& d = h.comult();
  if (!(tensor(d, id) * d == tensor(id, d) * d)) r.fail("coassociativity fails");
  if (!(tensor(h.counit(), id) * d == id)) r.fail("left counit law fails");
  if (!(tensor(id, h.counit()) * d == id)) r.fail("right counit law fails");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = a.basis_product(i, j);
      Vector lhs = d.apply(prod);
      Vector rhs = tensor_power_multiply(a, 2, d.column(i), d.column(j));
      if (lhs != rhs) r.fail("comultiplication not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      Scalar e = h.counit().apply(prod)[0];
      if (!(e == h.counit_of(i) * h.counit_of(j)))
        r.fail("counit not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  Vector unit_unit = tensor(column(a.unit()), column(a.unit())).column(0);
  if (d.apply(a.unit()) != unit_unit) r.fail("comultiplication does not preserve the unit");
  if (!h.counit().apply(a.unit())[0].is_one()) r.fail("counit does not preserve the unit");
  const Matrix mu = a.multiplication_map();
  const Matrix eta_eps = column(a.unit()) * h.counit();
  if (!(mu * tensor(h.antipode(), id) * d == eta_eps)) r.fail("left antipode law fails");
  if (!(mu * tensor(id, h.antipode()) * d == eta_eps)) r.fail("right antipode law fails");
  if (h.rmatrix()) {
    const Vector& rm = *h.rmatrix();
    const Matrix tau = swap_map(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector lhs = tensor_power_multiply(a, 2, rm, d.column(i));
      Vector rhs = tensor_power_multiply(a, 2, tau.apply(d.column(i)), rm);
      if (lhs != rhs) r.fail("R does not intertwine Delta with the opposite coproduct on b_" + std::to_string(i));
    }
    Vector r12 = embed_r(h, rm, 0, 1), r13 = embed_r(h, rm, 0, 2), r23 = embed_r(h, rm, 1, 2);
    if (tensor(d, id).apply(rm) != tensor_power_multiply(a, 3, r13, r23)) r.fail("(Delta x id) R differs from R13 R23");
    if (tensor(id, d).apply(rm) != tensor_power_multiply(a, 3, r13, r12)) r.fail("(id x Delta) R differs from R13 R12");
  }
  return r;
}

bool is_cocommutative(const HopfAlgebra& h) {
  return swap_map(h.field(), h.dim(), h.dim()) * h.comult() == h.comult();
}

std::size_t GroupTable::validate() const {
  const std::size_t n = mul.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  std::size_t e = n;
  for (std::size_t g = 0; g < n && e == n; ++g) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = mul[g][h] == h && mul[h][g] == h;
    if (ok) e = g;
  }
  if (e == n) throw std::invalid_argument("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw std::invalid_argument("group table is not associative");
  for (std::size_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < n; ++b) has = has || (mul[a][b] == e && mul[b][a] == e);
    if (!has) throw std::invalid_argument("group table element without inverse");
  }
  return e;
}

std::size_t GroupTable::inverse(std::size_t g) const {
  std::size_t e = validate();
  for (std::size_t b = 0; b < order(); ++b)
    if (mul[g][b] == e) return b;
  throw std::invalid_argument("no inverse");
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable t;
  t.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  return t;
}

HopfAlgebra group_algebra(const GroupTable& g, Field f) {
  const std::size_t e = g.validate();
  const std::size_t n = g.order();
  auto alg = std::make_shared<const Algebra>(Algebra::from_products(
      f, n, [&](std::size_t a, std::size_t b) { return unit_vector(f, n, g.mul[a][b]); }, unit_vector(f, n, e)));
  Matrix d(f, n * n, n), eps(f, 1, n), s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    d(a * n + a, a) = f.one();
    eps(0, a) = f.one();
    s(g.inverse(a), a) = f.one();
  }
  return HopfAlgebra(std::move(alg), std::move(d), std::move(eps), std::move(s));
}

HopfAlgebra dual_group_algebra(const GroupTable& g, Field f) {
  const std::size_t e = g.validate();
  const std::size_t n = g.order();
  Vector unit(n, f.one());
  auto alg = std::make_shared<const Algebra>(Algebra::from_products(f, n, [&](std::size_t a, std::size_t b) {
    return a == b ? unit_vector(f, n, a) : zero_vector(f, n);
  }, unit));
  Matrix d(f, n * n, n), eps(f, 1, n), s(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d(a * n + b, g.mul[a][b]) = f.one();
  eps(0, e) = f.one();
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = f.one();
  return HopfAlgebra(std::move(alg), std::move(d), std::move(eps), std::move(s));
}

HopfAlgebra sweedler4(Field f) {
  if (f.characteristic() == 2) throw std::invalid_argument("Sweedler's algebra needs characteristic other than 2");
  // Basis index = a + 2b for g^a x^b.
  auto alg = std::make_shared<const Algebra>(Algebra::from_products(f, 4, [&](std::size_t i, std::size_t j) {
    std::size_t a = i % 2, b = i / 2, c = j % 2, dd = j / 2;
    Vector v = zero_vector(f, 4);
    if (b + dd >= 2) return v;
    Scalar sign = (b * c) % 2 ? -f.one() : f.one();
    v[(a + c) % 2 + 2 * (b + dd)] = sign;
    return v;
  }, unit_vector(f, 4, 0)));
  Matrix d(f, 16, 4);
  auto put = [&](std::size_t col, std::size_t x, std::size_t y, long long c) { d(x * 4 + y, col) += f.from_int(c); };
  put(0, 0, 0, 1);  // 1 -> 1 (x) 1
  put(1, 1, 1, 1);  // g -> g (x) g
  put(2, 2, 0, 1);  // x -> x (x) 1 + g (x) x
  put(2, 1, 2, 1);
  put(3, 3, 1, 1);  // gx -> gx (x) g + 1 (x) gx
  put(3, 0, 3, 1);
  Matrix eps = Matrix::from_ints(f, {{1, 1, 0, 0}});
  // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x.
  Matrix s = Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  return HopfAlgebra(std::move(alg), std::move(d), std::move(eps), std::move(s));
}

Vector sweedler_rmatrix(Field f, const Scalar& alpha) {
  Vector r = zero_vector(f, 16);
  Scalar half = f.from_int(2).inverse();
  auto at = [&](std::size_t x, std::size_t y) -> Scalar& { return r[x * 4 + y]; };
  at(0, 0) += half;
  at(0, 1) += half;
  at(1, 0) += half;
  at(1, 1) -= half;
  Scalar ah = alpha * half;
  at(2, 2) -= ah;
  at(2, 3) += ah;
  at(3, 2) -= ah;
  at(3, 3) -= ah;
  return r;
}

HopfAlgebra with_rmatrix(const HopfAlgebra& h, Vector r) {
  return HopfAlgebra(h.algebra(), h.comult(), h.counit(), h.antipode(), std::move(r));
}

HModule::HModule(HopfPtr hopf, std::size_t dim, std::vector<Matrix> action)
    : hopf_(std::move(hopf)), dim_(dim), action_(std::move(action)) {
  if (!hopf_) throw std::invalid_argument("module over a null Hopf algebra");
  if (action_.size() != hopf_->dim()) throw std::invalid_argument("H-module needs one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == hopf_->field()))
      throw std::invalid_argument("H-module action matrix has the wrong shape");
}

Matrix HModule::act(const Vector& h) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) m += h[i] * action_[i];
  return m;
}

Report check_hmodule(const HModule& m) {
  Report r;
  const Algebra& a = *m.hopf()->algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(m.action(i) * m.action(j) == m.act(a.basis_product(i, j))))
        r.fail("H-action not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!(m.act(a.unit()) == Matrix::identity(m.field(), m.dim()))) r.fail("unit of H does not act as the identity");
  return r;
}

HModule regular_module(const HopfPtr& h) { return HModule(h, h->dim(), h->algebra()->left_basis_maps()); }

HModule trivial_module(const HopfPtr& h) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < h->dim(); ++i) {
    Matrix m(h->field(), 1, 1);
    m(0, 0) = h->counit_of(i);
    act.push_back(std::move(m));
  }
  return HModule(h, 1, std::move(act));
}

HModule tensor_module(const HModule& m, const HModule& n) {
  if (!same_hopf(m.hopf(), n.hopf())) throw std::invalid_argument("tensor_module: different Hopf algebras");
  const HopfAlgebra& h = *m.hopf();
  const std::size_t d = h.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix x(h.field(), m.dim() * n.dim(), m.dim() * n.dim());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = h.comult_coeff(i, j, k);
        if (!c.is_zero()) x += c * tensor(m.action(j), n.action(k));
      }
    act.push_back(std::move(x));
  }
  return HModule(m.hopf(), m.dim() * n.dim(), std::move(act));
}

HModule tensor_power(const HModule& m, std::size_t k) {
  if (k == 0) return trivial_module(m.hopf());
  HModule out = m;
  for (std::size_t i = 1; i < k; ++i) out = tensor_module(m, out);
  return out;
}

HModule direct_sum(const HModule& m, const HModule& n) {
  if (!same_hopf(m.hopf(), n.hopf())) throw std::invalid_argument("direct_sum: different Hopf algebras");
  const std::size_t d = m.dim() + n.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m.hopf()->dim(); ++i) {
    Matrix x(m.field(), d, d);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) x(r, c) = m.action(i)(r, c);
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c) x(m.dim() + r, m.dim() + c) = n.action(i)(r, c);
    act.push_back(std::move(x));
  }
  return HModule(m.hopf(), d, std::move(act));
}

HModule restrict_module(const HModule& m, const Subspace& s) {
  if (!is_invariant(s, m.actions())) throw std::invalid_argument("restrict_module: subspace is not H-stable");
  Matrix inc = s.inclusion();
  std::vector<Matrix> act;
  for (const auto& x : m.actions()) {
    Matrix img = x * inc;
    Matrix r(m.field(), s.dim(), s.dim());
    for (std::size_t c = 0; c < s.dim(); ++c) r.set_column(c, s.coordinates(img.column(c)));
    act.push_back(std::move(r));
  }
  return HModule(m.hopf(), s.dim(), std::move(act));
}

std::vector<Matrix> hom_module_space(const HModule& m, const HModule& n) {
  if (!same_hopf(m.hopf(), n.hopf())) throw std::invalid_argument("hom_module_space: different Hopf algebras");
  return intertwiners(m.field(), m.dim(), n.dim(), m.actions(), n.actions());
}

bool is_module_map(const HModule& m, const HModule& n, const Matrix& f) {
  for (std::size_t i = 0; i < m.hopf()->dim(); ++i)
    if (!(f * m.action(i) == n.action(i) * f)) return false;
  return true;
}

namespace {

Duality make_dual(const HModule& m, const Matrix& twist) {
  const HopfAlgebra& h = *m.hopf();
  const Field f = m.field();
  const std::size_t d = m.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < h.dim(); ++i) act.push_back(m.act(twist.column(i)).transpose());
  Matrix ev(f, 1, d * d), coev(f, d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    ev(0, i * d + i) = f.one();
    coev(i * d + i, 0) = f.one();
  }
  return {HModule(m.hopf(), d, std::move(act)), std::move(ev), std::move(coev)};
}

Report check_duality(const HModule& m, const Duality& du, bool left) {
  Report r;
  const Field f = m.field();
  const Matrix iv = Matrix::identity(f, m.dim());
  const Matrix id = Matrix::identity(f, du.dual.dim());
  HModule unit = trivial_module(m.hopf());
  if (left) {
    if (!(tensor(iv, du.ev) * tensor(du.coev, iv) == iv)) r.fail("zig-zag identity fails on V");
    if (!(tensor(du.ev, id) * tensor(id, du.coev) == id)) r.fail("zig-zag identity fails on the dual");
    if (!is_module_map(tensor_module(du.dual, m), unit, du.ev)) r.fail("evaluation is not H-linear");
    if (!is_module_map(unit, tensor_module(m, du.dual), du.coev)) r.fail("coevaluation is not H-linear");
  } else {
    if (!(tensor(du.ev, iv) * tensor(iv, du.coev) == iv)) r.fail("zig-zag identity fails on V");
    if (!(tensor(id, du.ev) * tensor(du.coev, id) == id)) r.fail("zig-zag identity fails on the dual");
    if (!is_module_map(tensor_module(m, du.dual), unit, du.ev)) r.fail("evaluation is not H-linear");
    if (!is_module_map(unit, tensor_module(du.dual, m), du.coev)) r.fail("coevaluation is not H-linear");
  }
  return r;
}

}  // namespace

Duality left_dual(const HModule& m) { return make_dual(m, m.hopf()->antipode()); }
Duality right_dual(const HModule& m) { return make_dual(m, m.hopf()->antipode_inverse()); }
Report check_left_duality(const HModule& m, const Duality& d) { return check_duality(m, d, true); }
Report check_right_duality(const HModule& m, const Duality& d) { return check_duality(m, d, false); }

}  // namespace exactalg
