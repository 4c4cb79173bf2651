#include "exactalg/smash.hpp"

#include <stdexcept>

namespace exactalg {

namespace {

Vector basis_vec(Field f, std::size_t n, std::size_t i) { return unit_vector(f, n, i); }

Matrix sum_of(Field f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& basis, const Vector& x) {
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * basis[i];
  return out;
}

Matrix complement_section(const Subspace& s) {
  const auto comp = s.complement_coordinates();
  Matrix sec(s.field(), s.ambient(), comp.size());
  for (std::size_t c = 0; c < comp.size(); ++c) sec(comp[c], c) = s.field().one();
  return sec;
}

}  // namespace

Vector SmashProduct::a_part(const Vector& a) const {
  const HopfAlgebra& h = *ma->hopf();
  const Vector& u = h.algebra()->unit();
  Vector out = zero_vector(ma->field(), algebra->dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!a[i].is_zero() && !u[j].is_zero()) out[index(i, j)] = a[i] * u[j];
  return out;
}

Vector SmashProduct::h_part(const Vector& hv) const {
  const Vector& u = ma->algebra()->unit();
  Vector out = zero_vector(ma->field(), algebra->dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < hv.size(); ++j)
      if (!u[i].is_zero() && !hv[j].is_zero()) out[index(i, j)] = u[i] * hv[j];
  return out;
}

SmashProduct smash(const ModuleAlgebraPtr& ma) {
  const Algebra& a = *ma->algebra();
  const HopfAlgebra& h = *ma->hopf();
  const Algebra& ha = *h.algebra();
  const Field f = ma->field();
  const std::size_t da = a.dim(), n = h.dim();
  auto prod = [&](std::size_t x, std::size_t y) {
    const std::size_t i = x / n, j = x % n, k = y / n, l = y % n;
    Vector out = zero_vector(f, da * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = h.comult_coeff(j, p, q);
        if (c.is_zero()) continue;
        Vector left = a.left_basis(i).apply(ma->rho(p).column(k));
        Vector right = ha.basis_product(q, l);
        for (std::size_t r = 0; r < da; ++r) {
          if (left[r].is_zero()) continue;
          for (std::size_t t = 0; t < n; ++t)
            if (!right[t].is_zero()) out[r * n + t] += c * left[r] * right[t];
        }
      }
    return out;
  };
  SmashProduct s{ma, nullptr};
  Vector unit = zero_vector(f, da * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) unit[i * n + j] = a.unit()[i] * ha.unit()[j];
  s.algebra = std::make_shared<const Algebra>(Algebra::from_products(f, da * n, prod, unit));
  return s;
}

Report check_smash(const SmashProduct& s) {
  Report r = check_algebra(*s.algebra);
  const Algebra& a = *s.ma->algebra();
  const HopfAlgebra& h = *s.ma->hopf();
  const Field f = s.ma->field();
  const std::size_t da = a.dim(), n = h.dim();
  const Algebra& sa = *s.algebra;
  // A (x) 1 and 1 (x) H are subalgebras, a h = a (x) h, h a = sum (h1 . a) (x) h2.
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k)
      if (sa.multiply(s.a_part(basis_vec(f, da, i)), s.a_part(basis_vec(f, da, k))) != s.a_part(a.basis_product(i, k)))
        r.fail("A (x) 1 is not multiplicative at (" + std::to_string(i) + ", " + std::to_string(k) + ")");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      if (sa.multiply(s.h_part(basis_vec(f, n, j)), s.h_part(basis_vec(f, n, l))) != s.h_part(h.algebra()->basis_product(j, l)))
        r.fail("1 (x) H is not multiplicative at (" + std::to_string(j) + ", " + std::to_string(l) + ")");
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sa.multiply(s.a_part(basis_vec(f, da, i)), s.h_part(basis_vec(f, n, j))) != basis_vec(f, da * n, s.index(i, j)))
        r.fail("(a (x) 1)(1 (x) h) != a (x) h at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      Vector expect = zero_vector(f, da * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = h.comult_coeff(j, p, q);
          if (c.is_zero()) continue;
          Vector ha = s.ma->rho(p).column(i);
          for (std::size_t t = 0; t < da; ++t)
            if (!ha[t].is_zero()) expect[s.index(t, q)] += c * ha[t];
        }
      if (sa.multiply(s.h_part(basis_vec(f, n, j)), s.a_part(basis_vec(f, da, i))) != expect)
        r.fail("(1 (x) h)(a (x) 1) != sum (h1 . a) (x) h2 at (" + std::to_string(j) + ", " + std::to_string(i) + ")");
    }
  return r;
}

TranslatedModule translate(const SmashProduct& s, const ModuleObject& m) {
  if (m.module_algebra() != s.ma && !(*m.module_algebra()->algebra() == *s.ma->algebra()))
    throw std::invalid_argument("translate: module over a different module algebra");
  const HopfAlgebra& h = *s.ma->hopf();
  const std::size_t da = s.ma->dim(), n = h.dim();
  const Matrix& sinv = h.antipode_inverse();
  std::vector<Matrix> sh;
  for (std::size_t j = 0; j < n; ++j) sh.push_back(m.hmodule().act(sinv.column(j)));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) act.push_back(sh[j] * m.nabla(i));
  RightModule t(s.algebra, m.dim(), std::move(act));
  Report r = check_module(t);
  if (!r.ok()) throw std::invalid_argument("translate: not a module over the smash product: " + r.violations.front());
  return {m, std::move(t)};
}

ModuleObject untranslate(const SmashProduct& s, const RightModule& t) {
  if (t.algebra() != s.algebra && !(*t.algebra() == *s.algebra))
    throw std::invalid_argument("untranslate: module over a different algebra");
  const HopfAlgebra& h = *s.ma->hopf();
  const Field f = s.ma->field();
  const std::size_t da = s.ma->dim(), n = h.dim();
  std::vector<Matrix> nabla, hact;
  for (std::size_t i = 0; i < da; ++i) nabla.push_back(t.act(s.a_part(basis_vec(f, da, i))));
  for (std::size_t j = 0; j < n; ++j) hact.push_back(t.act(s.h_part(h.antipode().column(j))));
  ModuleObject m(s.ma, HModule(s.ma->hopf(), t.dim(), std::move(hact)), std::move(nabla));
  Report r = check_module_object(m);
  if (!r.ok()) throw std::invalid_argument("untranslate: not a module object: " + r.violations.front());
  return m;
}

LeftModuleObject::LeftModuleObject(ModuleAlgebraPtr ma, HModule hmodule, std::vector<Matrix> lambda)
    : ma_(std::move(ma)), hmodule_(std::move(hmodule)), lambda_(std::move(lambda)) {
  if (lambda_.size() != ma_->dim()) throw std::invalid_argument("LeftModuleObject: one action matrix per basis element");
  for (const auto& l : lambda_)
    if (l.rows() != hmodule_.dim() || l.cols() != hmodule_.dim())
      throw std::invalid_argument("LeftModuleObject: action matrix has the wrong shape");
}

Report check_left_module_object(const LeftModuleObject& m) {
  Report r = check_hmodule(m.hmodule());
  const Algebra& a = *m.module_algebra()->algebra();
  const HopfAlgebra& h = *m.module_algebra()->hopf();
  const Field f = m.field();
  const std::size_t d = m.dim(), da = a.dim(), n = h.dim();
  auto lam = [&](const Vector& x) { return sum_of(f, d, d, m.lambdas(), x); };
  if (!(lam(a.unit()) == Matrix::identity(f, d))) r.fail("unit does not act as the identity");
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      if (!(m.lambda(i) * m.lambda(j) == lam(a.basis_product(i, j))))
        r.fail("left action not associative at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < da; ++i) {
      Matrix rhs(f, d, d);
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t t = 0; t < n; ++t) {
          const Scalar& c = h.comult_coeff(p, q, t);
          if (!c.is_zero()) rhs += c * (lam(m.module_algebra()->rho(q).column(i)) * m.hmodule().action(t));
        }
      if (!(m.hmodule().action(p) * m.lambda(i) == rhs))
        r.fail("h (a v) != sum (h1 a)(h2 v) at (" + std::to_string(p) + ", " + std::to_string(i) + ")");
    }
  return r;
}

LeftModuleObject left_regular_module_object(const ModuleAlgebraPtr& ma) {
  return LeftModuleObject(ma, ma->hmodule(), ma->algebra()->left_basis_maps());
}

LeftModuleObject left_tensor_module_object(const LeftModuleObject& m, const HModule& q) {
  std::vector<Matrix> lambda;
  for (const auto& l : m.lambdas()) lambda.push_back(tensor(l, Matrix::identity(m.field(), q.dim())));
  return LeftModuleObject(m.module_algebra(), tensor_module(m.hmodule(), q), std::move(lambda));
}

LeftModuleObject left_free_module_object(const ModuleAlgebraPtr& ma, const HModule& q) {
  return left_tensor_module_object(left_regular_module_object(ma), q);
}

LeftModuleObject left_quotient_module_object(const LeftModuleObject& m, const Subspace& s) {
  if (!is_invariant(s, m.lambdas()) || !is_invariant(s, m.hmodule().actions()))
    throw std::invalid_argument("left_quotient_module_object: subspace is not a subobject");
  Matrix proj = s.quotient_projection();
  Matrix sec = complement_section(s);
  std::vector<Matrix> hact, lambda;
  for (const auto& x : m.hmodule().actions()) hact.push_back(proj * x * sec);
  for (const auto& x : m.lambdas()) lambda.push_back(proj * x * sec);
  return LeftModuleObject(m.module_algebra(), HModule(m.hmodule().hopf(), proj.rows(), std::move(hact)), std::move(lambda));
}

std::vector<LeftModuleObject> left_corpus_modules(const ModuleAlgebraPtr& ma, std::uint64_t bound) {
  std::vector<LeftModuleObject> out;
  LeftModuleObject reg = left_regular_module_object(ma);
  out.push_back(reg);
  HModule hreg = regular_module(ma->hopf());
  out.push_back(left_tensor_module_object(reg, hreg));
  std::vector<Subspace> ideals;
  Subspace rad = c_module_radical(*ma);
  if (enumeration_feasible(ma->field(), ma->dim(), bound))
    ideals = enumerate_ideal_objects(*ma, bound);
  else
    ideals.push_back(rad);
  for (const auto& i : ideals)
    if (!i.is_zero() && !i.is_full()) out.push_back(left_quotient_module_object(reg, i));
  if (!rad.is_zero()) out.push_back(left_tensor_module_object(left_quotient_module_object(reg, rad), hreg));
  return out;
}

std::vector<Matrix> left_smash_action(const SmashProduct& s, const LeftModuleObject& m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.ma->dim(); ++i)
    for (std::size_t j = 0; j < s.ma->hopf()->dim(); ++j) out.push_back(m.lambda(i) * m.hmodule().action(j));
  return out;
}

}  // namespace exactalg
