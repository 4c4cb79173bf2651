#include <stdexcept>
#include <string>

#include "exactalg/module_algebra.hpp"

namespace exactalg {

namespace {

Matrix nabla_of(const ModuleObject& m, const Vector& x) {
  Matrix out(m.field(), m.dim(), m.dim());
  for (std::size_t t = 0; t < x.size(); ++t)
    if (!x[t].is_zero()) out += x[t] * m.nabla(t);
  return out;
}

std::vector<Matrix> all_actions(const ModuleObject& m) {
  std::vector<Matrix> maps = m.hmodule().actions();
  maps.insert(maps.end(), m.nablas().begin(), m.nablas().end());
  return maps;
}

Matrix complement_section(const Subspace& s) {
  auto comp = s.complement_coordinates();
  Matrix sec(s.field(), s.ambient(), comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) sec(comp[k], k) = s.field().one();
  return sec;
}

}  // namespace

ModuleObject::ModuleObject(ModuleAlgebraPtr ma, HModule hmodule, std::vector<Matrix> nabla)
    : ma_(std::move(ma)), hmodule_(std::move(hmodule)), nabla_(std::move(nabla)) {
  if (!ma_) throw std::invalid_argument("module object over a null module algebra");
  if (!same_hopf(ma_->hopf(), hmodule_.hopf())) throw std::invalid_argument("module object: Hopf algebra mismatch");
  if (nabla_.size() != ma_->dim()) throw std::invalid_argument("module object needs one action matrix per basis element of A");
  for (const auto& m : nabla_)
    if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("module object action has the wrong shape");
}

RightModule ModuleObject::underlying() const { return RightModule(ma_->algebra(), dim(), nabla_); }

Report check_module_object(const ModuleObject& m) {
  Report r;
  r.merge(check_module(m.underlying()), "right module: ");
  r.merge(check_hmodule(m.hmodule()), "H-module: ");
  const ModuleAlgebra& ma = *m.module_algebra();
  const HopfAlgebra& h = *ma.hopf();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < ma.dim(); ++j) {
      Matrix lhs = m.hmodule().action(i) * m.nabla(j);
      Matrix rhs(m.field(), m.dim(), m.dim());
      for (std::size_t k = 0; k < h.dim(); ++k)
        for (std::size_t l = 0; l < h.dim(); ++l) {
          const Scalar& c = h.comult_coeff(i, k, l);
          if (!c.is_zero()) rhs += c * (nabla_of(m, ma.rho(l).column(j)) * m.hmodule().action(k));
        }
      if (!(lhs == rhs))
        r.fail("action is not H-equivariant on (b_" + std::to_string(i) + ", a_" + std::to_string(j) + ")");
    }
  return r;
}

ModuleObject regular_module_object(const ModuleAlgebraPtr& ma) {
  return ModuleObject(ma, ma->hmodule(), ma->algebra()->right_basis_maps());
}

ModuleObject act_projective(const HModule& q, const ModuleObject& m) {
  HModule hm = tensor_module(q, m.hmodule());
  const Matrix id = Matrix::identity(q.field(), q.dim());
  std::vector<Matrix> nabla;
  for (const auto& x : m.nablas()) nabla.push_back(tensor(id, x));
  return ModuleObject(m.module_algebra(), std::move(hm), std::move(nabla));
}

ModuleObject free_module_object(const ModuleAlgebraPtr& ma, const HModule& q) {
  return act_projective(q, regular_module_object(ma));
}

Subspace module_times_ideal_object(const ModuleObject& m, const Subspace& ideal) {
  return module_times_ideal(m.underlying(), ideal);
}

bool is_module_subobject(const ModuleObject& m, const Subspace& s) { return is_invariant(s, all_actions(m)); }

ModuleObject submodule_object(const ModuleObject& m, const Subspace& s) {
  if (!is_module_subobject(m, s)) throw std::invalid_argument("submodule_object: subspace is not a subobject");
  RightModule sub = submodule(m.underlying(), s);
  return ModuleObject(m.module_algebra(), restrict_module(m.hmodule(), s), sub.actions());
}

ModuleObject quotient_module_object(const ModuleObject& m, const Subspace& s) {
  if (!is_module_subobject(m, s)) throw std::invalid_argument("quotient_module_object: subspace is not a subobject");
  Matrix proj = s.quotient_projection();
  Matrix sec = complement_section(s);
  std::vector<Matrix> hact, nabla;
  for (const auto& x : m.hmodule().actions()) hact.push_back(proj * x * sec);
  for (const auto& x : m.nablas()) nabla.push_back(proj * x * sec);
  return ModuleObject(m.module_algebra(), HModule(m.hmodule().hopf(), proj.rows(), std::move(hact)), std::move(nabla));
}

ModuleObject restrict_along(const ModuleAlgebraPtr& ma, const Matrix& projection, const ModuleObject& m) {
  if (projection.cols() != ma->dim() || projection.rows() != m.module_algebra()->dim())
    throw std::invalid_argument("restrict_along: projection has the wrong shape");
  std::vector<Matrix> nabla;
  for (std::size_t j = 0; j < ma->dim(); ++j) nabla.push_back(nabla_of(m, projection.column(j)));
  return ModuleObject(ma, m.hmodule(), std::move(nabla));
}

std::vector<Matrix> module_object_hom_space(const ModuleObject& m, const ModuleObject& n) {
  if (m.module_algebra() != n.module_algebra() && !(*m.module_algebra()->algebra() == *n.module_algebra()->algebra()))
    throw std::invalid_argument("module_object_hom_space: different module algebras");
  return intertwiners(m.field(), m.dim(), n.dim(), all_actions(m), all_actions(n));
}

}  // namespace exactalg
