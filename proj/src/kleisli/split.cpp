#include <stdexcept>

#include "exactalg/kleisli.hpp"

namespace exactalg {

namespace {

// (H (x) M) |> A -> M, h (x) v (x) a -> eps(h) v.a.
Matrix cover_map(const ModuleObject& m) {
  const HopfAlgebra& h = *m.module_algebra()->hopf();
  const std::size_t n = h.dim(), d = m.dim(), da = m.module_algebra()->dim();
  Matrix out(m.field(), d, n * d * da);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& e = h.counit_of(i);
    if (e.is_zero()) continue;
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t a = 0; a < da; ++a) out.set_column((i * d + v) * da + a, scale(e, m.nabla(a).column(v)));
  }
  return out;
}

ModuleObject cover_object(const ModuleObject& m) {
  return free_module_object(m.module_algebra(), tensor_module(regular_module(m.module_algebra()->hopf()), m.hmodule()));
}

Vector vec(const Matrix& m) { return m.data(); }

}  // namespace

bool is_module_object_map(const ModuleObject& m, const ModuleObject& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  if (!is_module_map(m.hmodule(), n.hmodule(), f)) return false;
  for (std::size_t j = 0; j < m.nablas().size(); ++j)
    if (!(f * m.nabla(j) == n.nabla(j) * f)) return false;
  return true;
}

Presentation free_presentation(const ModuleObject& n) {
  ModuleObject p0 = cover_object(n);
  Matrix p0_map = cover_map(n);
  Subspace ker = null_space(p0_map);
  ModuleObject k = submodule_object(p0, ker);
  ModuleObject p1 = cover_object(k);
  Matrix p1_map = ker.inclusion() * cover_map(k);
  return {std::move(p0), std::move(p0_map), std::move(p1), std::move(p1_map)};
}

bool split_epi_check(const ModuleObject& m, const ModuleObject& n, const Matrix& g, const Presentation& pres) {
  if (!is_module_object_map(m, n, g)) throw std::invalid_argument("split_epi_check: g is not a module-object map");
  if (rank(g) != n.dim()) throw std::invalid_argument("split_epi_check: g is not an epimorphism");
  if (!is_module_object_map(pres.p0, n, pres.p0_map) || !is_module_object_map(pres.p1, pres.p0, pres.p1_map))
    throw std::invalid_argument("split_epi_check: presentation maps are not module-object maps");
  if (!(pres.p0_map * pres.p1_map).is_zero() || rank(pres.p0_map) != n.dim())
    throw std::invalid_argument("split_epi_check: presentation is not exact");
  // Lifts l : P0 -> M with g l = p0 and l p1 = 0, solved over a basis of Hom(P0, M).
  auto basis = module_object_hom_space(pres.p0, m);
  Vector rhs = vec(pres.p0_map);
  const std::size_t kill = m.dim() * pres.p1.dim();
  rhs.resize(rhs.size() + kill, m.field().zero());
  Matrix sys(m.field(), rhs.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vector col = vec(g * basis[i]);
    Vector tail = vec(basis[i] * pres.p1_map);
    col.insert(col.end(), tail.begin(), tail.end());
    sys.set_column(i, col);
  }
  if (basis.empty()) return is_zero(rhs);
  return solve(sys, rhs).has_value();
}

}  // namespace exactalg
