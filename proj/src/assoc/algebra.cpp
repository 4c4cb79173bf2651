#include "exactalg/algebra.hpp"

#include <stdexcept>
#include <string>

namespace exactalg {

Algebra::Algebra(Field f, std::size_t dim, std::vector<Scalar> constants, Vector unit)
    : field_(f), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
  if (constants_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constants must have dim^3 entries");
  if (unit_.size() != dim_) throw std::invalid_argument("unit vector length must equal dim");
  for (const auto& s : constants_)
    if (!(s.field() == f)) throw std::invalid_argument("structure constant over the wrong field");
  for (const auto& s : unit_)
    if (!(s.field() == f)) throw std::invalid_argument("unit entry over the wrong field");
  left_.assign(dim_, Matrix(f, dim_, dim_));
  right_.assign(dim_, Matrix(f, dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (c.is_zero()) continue;
        left_[i](k, j) = c;
        right_[j](k, i) = c;
      }
}

Algebra Algebra::from_products(Field f, std::size_t dim,
                               const std::function<Vector(std::size_t, std::size_t)>& products,
                               Vector unit) {
  std::vector<Scalar> c(dim * dim * dim, f.zero());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vector v = products(i, j);
      if (v.size() != dim) throw std::invalid_argument("product vector has the wrong length");
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = v[k];
    }
  return Algebra(f, dim, std::move(c), std::move(unit));
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("multiply: length mismatch");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const { return left_.at(i).column(j); }

Matrix Algebra::left_mult(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x.at(i).is_zero()) m += x[i] * left_[i];
  return m;
}

Matrix Algebra::right_mult(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x.at(i).is_zero()) m += x[i] * right_[i];
  return m;
}

Matrix Algebra::multiplication_map() const {
  Matrix m(field_, dim_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, i * dim_ + j) = constant(i, j, k);
  return m;
}

Report check_algebra(const Algebra& a) {
  Report r;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.right_basis(k).apply(ij);
        Vector rhs = a.left_basis(i).apply(a.basis_product(j, k));
        if (lhs != rhs)
          r.fail("associativity fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")");
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(a.field(), n, i);
    if (a.multiply(a.unit(), e) != e) r.fail("left unit law fails on b_" + std::to_string(i));
    if (a.multiply(e, a.unit()) != e) r.fail("right unit law fails on b_" + std::to_string(i));
  }
  return r;
}

bool is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.left_basis(i) == a.right_basis(i))) return false;
  return true;
}

Algebra opposite(const Algebra& a) {
  return Algebra::from_products(a.field(), a.dim(), [&](std::size_t i, std::size_t j) { return a.basis_product(j, i); },
                                a.unit());
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_product: field mismatch");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra::from_products(a.field(), n, [&](std::size_t i, std::size_t j) {
    Vector v = zero_vector(a.field(), n);
    if (i < na && j < na) {
      Vector p = a.basis_product(i, j);
      for (std::size_t k = 0; k < na; ++k) v[k] = p[k];
    } else if (i >= na && j >= na) {
      Vector p = b.basis_product(i - na, j - na);
      for (std::size_t k = 0; k < nb; ++k) v[na + k] = p[k];
    }
    return v;
  }, unit);
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tensor_product: field mismatch");
  const std::size_t na = a.dim(), nb = b.dim();
  Vector unit = tensor(Matrix::from_columns(a.field(), na, {a.unit()}), Matrix::from_columns(a.field(), nb, {b.unit()})).column(0);
  return Algebra::from_products(a.field(), na * nb, [&](std::size_t x, std::size_t y) {
    Vector pa = a.basis_product(x / nb, y / nb);
    Vector pb = b.basis_product(x % nb, y % nb);
    Vector v = zero_vector(a.field(), na * nb);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t k = 0; k < nb; ++k)
        if (!pa[i].is_zero() && !pb[k].is_zero()) v[i * nb + k] = pa[i] * pb[k];
    return v;
  }, unit);
}

Algebra truncated_polynomial(Field f, std::size_t m) {
  if (m == 0) throw std::invalid_argument("truncated_polynomial needs m >= 1");
  return Algebra::from_products(f, m, [&](std::size_t i, std::size_t j) {
    Vector v = zero_vector(f, m);
    if (i + j < m) v[i + j] = f.one();
    return v;
  }, unit_vector(f, m, 0));
}

Algebra matrix_algebra(Field f, std::size_t n) {
  Vector unit = zero_vector(f, n * n);
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = f.one();
  return Algebra::from_products(f, n * n, [&](std::size_t x, std::size_t y) {
    Vector v = zero_vector(f, n * n);
    if (x % n == y / n) v[(x / n) * n + (y % n)] = f.one();
    return v;
  }, unit);
}

namespace {

std::vector<Matrix> two_sided_maps(const Algebra& a) {
  std::vector<Matrix> maps = a.left_basis_maps();
  maps.insert(maps.end(), a.right_basis_maps().begin(), a.right_basis_maps().end());
  return maps;
}

}  // namespace

Subspace ideal_closure(const Algebra& a, const Subspace& s) { return invariant_closure(two_sided_maps(a), s); }

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw std::invalid_argument("ideal test: ambient dimension mismatch");
  return is_invariant(s, two_sided_maps(a));
}

Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j) {
  SpanBuilder b(a.field(), a.dim());
  for (auto& x : i.basis_vectors())
    for (auto& y : j.basis_vectors()) b.add(a.multiply(x, y));
  return b.build();
}

Subspace ideal_power(const Algebra& a, const Subspace& i, std::size_t k) {
  if (k == 0) return Subspace::full(a.field(), a.dim());
  Subspace p = i;
  for (std::size_t e = 1; e < k; ++e) p = ideal_product(a, p, i);
  return p;
}

std::pair<bool, std::size_t> is_nilpotent_ideal(const Algebra& a, const Subspace& i) {
  Subspace p = i;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (p.is_zero()) return {true, k};
    Subspace next = ideal_product(a, p, i);
    if (next.dim() == p.dim()) return {false, 0};
    p = std::move(next);
  }
  return {p.is_zero(), p.is_zero() ? a.dim() + 1 : 0};
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw std::invalid_argument("quotient_algebra: not a two-sided ideal");
  Matrix proj = ideal.quotient_projection();
  auto comp = ideal.complement_coordinates();
  const std::size_t m = comp.size();
  Matrix section(a.field(), a.dim(), m);
  for (std::size_t k = 0; k < m; ++k) section(comp[k], k) = a.field().one();
  Algebra q = Algebra::from_products(a.field(), m, [&](std::size_t i, std::size_t j) {
    return proj.apply(a.basis_product(comp[i], comp[j]));
  }, proj.apply(a.unit()));
  return {std::move(q), std::move(proj), std::move(section)};
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  // Column i of the system is vec(L_i - R_i).
  Matrix sys(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix d = a.left_basis(i) - a.right_basis(i);
    for (std::size_t e = 0; e < n * n; ++e) sys(e, i) = d.data()[e];
  }
  return null_space(sys);
}

Subspace lift_ideal(const Matrix& projection, const Subspace& j) { return preimage(projection, j); }

Subspace brute_force_max_nilpotent_ideal(const Algebra& a, std::uint64_t bound) {
  std::vector<Subspace> nilpotent;
  for_each_subspace(a.field(), a.dim(), bound, [&](const Subspace& s) {
    if (is_two_sided_ideal(a, s) && is_nilpotent_ideal(a, s).first) nilpotent.push_back(s);
    return true;
  });
  const Subspace* best = &nilpotent.front();
  for (const auto& s : nilpotent)
    if (s.dim() > best->dim()) best = &s;
  for (const auto& s : nilpotent)
    if (!best->contains(s)) throw VerificationError("nilpotent ideals have no maximum");
  return *best;
}

RightModule::RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (!algebra_) throw std::invalid_argument("module over a null algebra");
  if (action_.size() != algebra_->dim()) throw std::invalid_argument("module needs one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_ || !(m.field() == algebra_->field()))
      throw std::invalid_argument("module action matrix has the wrong shape");
}

RightModule RightModule::regular(AlgebraPtr algebra) {
  auto maps = algebra->right_basis_maps();
  const std::size_t n = algebra->dim();
  return RightModule(std::move(algebra), n, std::move(maps));
}

RightModule RightModule::free(AlgebraPtr algebra, std::size_t rank) {
  RightModule reg = regular(algebra);
  if (rank == 0) {
    std::vector<Matrix> zero(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return RightModule(algebra, 0, std::move(zero));
  }
  RightModule out = reg;
  for (std::size_t i = 1; i < rank; ++i) out = direct_sum(out, reg);
  return out;
}

Matrix RightModule::act(const Vector& x) const {
  Matrix m(algebra_->field(), dim_, dim_);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) m += x[j] * action_[j];
  return m;
}

Report check_module(const RightModule& m) {
  Report r;
  const Algebra& a = *m.algebra();
  // (v b_i) b_j = v (b_i b_j)
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(m.action(j) * m.action(i) == m.act(a.basis_product(i, j))))
        r.fail("module associativity fails on (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!(m.act(a.unit()) == Matrix::identity(a.field(), m.dim()))) r.fail("unit does not act as the identity");
  return r;
}

RightModule direct_sum(const RightModule& m, const RightModule& n) {
  if (m.algebra() != n.algebra() && !(*m.algebra() == *n.algebra()))
    throw std::invalid_argument("direct_sum: modules over different algebras");
  const Field f = m.algebra()->field();
  const std::size_t d = m.dim() + n.dim();
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < m.algebra()->dim(); ++j) {
    Matrix x(f, d, d);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) x(r, c) = m.action(j)(r, c);
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c) x(m.dim() + r, m.dim() + c) = n.action(j)(r, c);
    act.push_back(std::move(x));
  }
  return RightModule(m.algebra(), d, std::move(act));
}

bool is_submodule(const RightModule& m, const Subspace& s) { return is_invariant(s, m.actions()); }

RightModule submodule(const RightModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw std::invalid_argument("submodule: subspace is not stable");
  Matrix inc = s.inclusion();
  std::vector<Matrix> act;
  for (const auto& x : m.actions()) {
    Matrix img = x * inc;
    Matrix r(m.algebra()->field(), s.dim(), s.dim());
    for (std::size_t c = 0; c < s.dim(); ++c) r.set_column(c, s.coordinates(img.column(c)));
    act.push_back(std::move(r));
  }
  return RightModule(m.algebra(), s.dim(), std::move(act));
}

RightModule quotient_module(const RightModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw std::invalid_argument("quotient_module: subspace is not stable");
  Matrix proj = s.quotient_projection();
  auto comp = s.complement_coordinates();
  Matrix sec(m.algebra()->field(), m.dim(), comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) sec(comp[k], k) = m.algebra()->field().one();
  std::vector<Matrix> act;
  for (const auto& x : m.actions()) act.push_back(proj * x * sec);
  return RightModule(m.algebra(), comp.size(), std::move(act));
}

Subspace module_times_ideal(const RightModule& m, const Subspace& ideal) {
  SpanBuilder b(m.algebra()->field(), m.dim());
  for (auto& x : ideal.basis_vectors()) {
    Matrix ax = m.act(x);
    for (std::size_t c = 0; c < m.dim(); ++c) b.add(ax.column(c));
  }
  return b.build();
}

std::vector<Matrix> module_hom_space(const RightModule& m, const RightModule& n) {
  if (!(m.algebra()->field() == n.algebra()->field()) || m.algebra()->dim() != n.algebra()->dim())
    throw std::invalid_argument("module_hom_space: modules over different algebras");
  return intertwiners(m.algebra()->field(), m.dim(), n.dim(), m.actions(), n.actions());
}

bool is_projective(const RightModule& m) {
  if (m.dim() == 0) return true;
  const AlgebraPtr& a = m.algebra();
  const Field f = a->field();
  const std::size_t n = a->dim();
  Subspace mr = module_times_ideal(m, radical(*a));
  // Lift the top: unit vectors on the complement coordinates of m . rad.
  auto top = mr.complement_coordinates();
  const std::size_t g = top.size();
  std::vector<Vector> gens;
  for (auto c : top) gens.push_back(unit_vector(f, m.dim(), c));
  // Surjection A^g -> m, (x_k) -> sum_k gens_k . x_k; column (k, j) is gens_k . b_j.
  Matrix pi(f, m.dim(), g * n);
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t j = 0; j < n; ++j) pi.set_column(k * n + j, m.action(j).apply(gens[k]));
  if (rank(pi) != m.dim()) throw VerificationError("lifted top does not generate the module");
  // A section is a tuple (s_k) of maps m -> A_A with sum_k gens_k . s_k(v) = v.
  RightModule reg = RightModule::regular(a);
  std::vector<Matrix> homs = module_hom_space(m, reg);
  const std::size_t h = homs.size();
  if (h == 0) return false;
  Matrix sys(f, m.dim() * m.dim(), g * h);
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t l = 0; l < h; ++l) {
      // v -> gens_k . phi_l(v): column c is sum_j phi_l(e_c)_j gens_k . b_j.
      Matrix psi(f, m.dim(), m.dim());
      for (std::size_t c = 0; c < m.dim(); ++c) {
        Vector img = zero_vector(f, m.dim());
        for (std::size_t j = 0; j < n; ++j)
          if (!homs[l](j, c).is_zero()) axpy(img, homs[l](j, c), pi.column(k * n + j));
        psi.set_column(c, img);
      }
      for (std::size_t e = 0; e < m.dim() * m.dim(); ++e) sys(e, k * h + l) = psi.data()[e];
    }
  Vector rhs = Matrix::identity(f, m.dim()).data();
  return solve(sys, rhs).has_value();
}

}  // namespace exactalg
