#include <stdexcept>

#include "exactalg/smash.hpp"

namespace exactalg {

namespace {

// Fills in the common verdict from the map on the unbalanced tensor product,
// the relators spanning the kernel of the quotient, and the module actions.
IsomorphismCheck finish(const Matrix& phi, const SpanBuilder& relators, const std::vector<Vector>& relator_list,
                        const std::vector<Matrix>& src_act, const std::vector<Matrix>& tgt_act) {
  IsomorphismCheck out;
  out.source_dim = phi.cols() - relators.dim();
  out.target_dim = phi.rows();
  out.relators_killed = true;
  for (const auto& r : relator_list)
    if (!is_zero(phi.apply(r))) {
      out.relators_killed = false;
      break;
    }
  out.linear = true;
  for (std::size_t x = 0; x < src_act.size(); ++x)
    if (!(phi * src_act[x] == tgt_act[x] * phi)) {
      out.linear = false;
      break;
    }
  out.bijective = out.source_dim == out.target_dim && rank(phi) == out.target_dim;
  return out;
}

}  // namespace

IsomorphismCheck smash_tensor_isomorphism_check(const LeftModuleObject& m) {
  const Report r = check_left_module_object(m);
  if (!r.ok()) throw std::invalid_argument("smash_tensor_isomorphism_check: " + r.violations.front());
  const SmashProduct s = smash(m.module_algebra());
  const Algebra& sa = *s.algebra;
  const HopfAlgebra& h = *s.ma->hopf();
  const Field f = m.field();
  const std::size_t d = m.dim(), da = s.ma->dim(), n = h.dim(), big = sa.dim();

  // a (x) h (x) v -> a (h1 v) (x) h2 on the basis of (A#H) (x) M.
  Matrix phi(f, d * n, big * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = h.comult_coeff(j, p, q);
          if (c.is_zero()) continue;
          Matrix lp = m.lambda(i) * m.hmodule().action(p);
          for (std::size_t v = 0; v < d; ++v)
            for (std::size_t w = 0; w < d; ++w)
              if (!lp(w, v).is_zero()) phi(w * n + q, s.index(i, j) * d + v) += c * lp(w, v);
        }

  // x a (x) v - x (x) a v.
  SpanBuilder span(f, big * d);
  std::vector<Vector> rel;
  for (std::size_t k = 0; k < da; ++k) {
    const Matrix right = sa.right_mult(s.a_part(unit_vector(f, da, k)));
    for (std::size_t x = 0; x < big; ++x)
      for (std::size_t l = 0; l < d; ++l) {
        Vector v = zero_vector(f, big * d);
        for (std::size_t y = 0; y < big; ++y)
          if (!right(y, x).is_zero()) v[y * d + l] += right(y, x);
        for (std::size_t w = 0; w < d; ++w)
          if (!m.lambda(k)(w, l).is_zero()) v[x * d + w] -= m.lambda(k)(w, l);
        if (span.add(v)) rel.push_back(std::move(v));
      }
  }

  const Matrix id = Matrix::identity(f, d);
  std::vector<Matrix> src, tgt;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      src.push_back(tensor(sa.left_basis(s.index(i, j)), id));
      Matrix t(f, d * n, d * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = h.comult_coeff(j, p, q);
          if (!c.is_zero()) t += c * tensor(m.lambda(i) * m.hmodule().action(p), h.algebra()->left_basis(q));
        }
      tgt.push_back(std::move(t));
    }
  return finish(phi, span, rel, src, tgt);
}

IsomorphismCheck smash_tensor_isomorphism_check(const ModuleObject& m) {
  const Report r = check_module_object(m);
  if (!r.ok()) throw std::invalid_argument("smash_tensor_isomorphism_check: " + r.violations.front());
  const SmashProduct s = smash(m.module_algebra());
  const Algebra& sa = *s.algebra;
  const HopfAlgebra& h = *s.ma->hopf();
  const Field f = m.field();
  const std::size_t d = m.dim(), da = s.ma->dim(), n = h.dim(), big = sa.dim();
  const TranslatedModule t = translate(s, act_projective(regular_module(s.ma->hopf()), m));
  const Vector& uh = h.algebra()->unit();

  // v (x) x -> (1 (x) v) <| x.
  Matrix phi(f, n * d, d * big);
  for (std::size_t v = 0; v < d; ++v) {
    Vector u = zero_vector(f, n * d);
    for (std::size_t i = 0; i < n; ++i) u[i * d + v] = uh[i];
    for (std::size_t x = 0; x < big; ++x) phi.set_column(v * big + x, t.module.action(x).apply(u));
  }

  // v a (x) x - v (x) a x.
  SpanBuilder span(f, d * big);
  std::vector<Vector> rel;
  for (std::size_t k = 0; k < da; ++k) {
    const Matrix left = sa.left_mult(s.a_part(unit_vector(f, da, k)));
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t x = 0; x < big; ++x) {
        Vector w = zero_vector(f, d * big);
        for (std::size_t u = 0; u < d; ++u)
          if (!m.nabla(k)(u, v).is_zero()) w[u * big + x] += m.nabla(k)(u, v);
        for (std::size_t y = 0; y < big; ++y)
          if (!left(y, x).is_zero()) w[v * big + y] -= left(y, x);
        if (span.add(w)) rel.push_back(std::move(w));
      }
  }

  const Matrix id = Matrix::identity(f, d);
  std::vector<Matrix> src, tgt;
  for (std::size_t y = 0; y < big; ++y) {
    src.push_back(tensor(id, sa.right_basis(y)));
    tgt.push_back(t.module.action(y));
  }
  return finish(phi, span, rel, src, tgt);
}

bool is_c_projective(const ModuleObject& m) { return is_projective(m.underlying()); }

bool is_c_projective_via_smash(const SmashProduct& s, const ModuleObject& m) {
  return is_projective(translate(s, act_projective(regular_module(s.ma->hopf()), m)).module);
}

SkryabinReport skryabin_check(const ModuleAlgebraPtr& ma, const std::vector<ModuleObject>& modules, std::uint64_t bound) {
  SkryabinReport out;
  bool simple = false;
  if (enumeration_feasible(ma->field(), ma->dim(), bound)) {
    simple = enumerate_ideal_objects(*ma, bound).size() == 2;
    out.gate = simple ? "no proper ideal object (exhaustive)" : "has a proper nonzero ideal object (exhaustive)";
  } else if (!is_exact(*ma)) {
    out.gate = "not exact";
  } else {
    Decomposition dec = decompose_simple_factors(*ma, bound);
    simple = dec.factors.size() == 1 && dec.factors.front().certified;
    if (simple)
      out.gate = "exact with one certified factor: " + dec.factors.front().certificate;
    else
      out.gate = dec.factors.size() > 1 ? "exact with several factors" : "simplicity undecided";
  }
  if (!simple) {
    out.status = "skipped";
    return out;
  }
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const bool p = is_c_projective(modules[i]);
    out.projective.push_back(p);
    if (!p) out.counterexamples.push_back(i);
  }
  out.status = out.counterexamples.empty() ? "pass" : "fail";
  return out;
}

}  // namespace exactalg
