#include "exactalg/module_algebra.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace exactalg {

namespace {

std::string pair_label(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<std::uint64_t> key_of(const Subspace& s) {
  std::vector<std::uint64_t> k{s.dim()};
  for (const auto& x : s.basis().data()) k.push_back(x.residue());
  return k;
}

}  // namespace

ModuleAlgebra::ModuleAlgebra(HopfPtr hopf, AlgebraPtr algebra, std::vector<Matrix> rho)
    : hopf_(std::move(hopf)),
      algebra_(std::move(algebra)),
      rho_(std::move(rho)),
      hmodule_(hopf_, algebra_ ? algebra_->dim() : 0, rho_) {
  if (!algebra_) throw std::invalid_argument("module algebra over a null algebra");
  if (!(hopf_->field() == algebra_->field())) throw std::invalid_argument("module algebra: field mismatch");
}

Report check_module_algebra(const ModuleAlgebra& ma) {
  Report r;
  const Algebra& a = *ma.algebra();
  const HopfAlgebra& h = *ma.hopf();
  r.merge(check_algebra(a), "algebra: ");
  r.merge(check_hmodule(ma.hmodule()), "action: ");
  const std::size_t n = a.dim(), d = h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (ma.rho(i).apply(a.unit()) != scale(h.counit_of(i), a.unit()))
      r.fail("b_" + std::to_string(i) + " does not act on the unit through the counit");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vector lhs = ma.rho(i).apply(a.basis_product(x, y));
        Vector rhs = zero_vector(a.field(), n);
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            const Scalar& c = h.comult_coeff(i, j, k);
            if (c.is_zero()) continue;
            axpy(rhs, c, a.multiply(ma.rho(j).column(x), ma.rho(k).column(y)));
          }
        if (lhs != rhs)
          r.fail("action of b_" + std::to_string(i) + " is not multiplicative on " + pair_label(x, y));
      }
  }
  return r;
}

ModuleAlgebra trivial_action(const HopfPtr& h, AlgebraPtr a) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < h->dim(); ++i) rho.push_back(h->counit_of(i) * Matrix::identity(a->field(), a->dim()));
  return ModuleAlgebra(h, std::move(a), std::move(rho));
}

ModuleAlgebra unit_module_algebra(const HopfPtr& h) {
  Field f = h->field();
  auto k = std::make_shared<const Algebra>(f, 1, std::vector<Scalar>{f.one()}, Vector{f.one()});
  return trivial_action(h, k);
}

ModuleAlgebra tensor_module_algebras(const ModuleAlgebra& a, const ModuleAlgebra& b) {
  if (!same_hopf(a.hopf(), b.hopf())) throw std::invalid_argument("tensor_module_algebras: different Hopf algebras");
  const HopfAlgebra& h = *a.hopf();
  const Algebra& x = *a.algebra();
  const Algebra& y = *b.algebra();
  const Field f = a.field();
  AlgebraPtr product;
  if (h.rmatrix()) {
    // (a (x) b)(a' (x) b') = sum a (R2 . a') (x) (R1 . b) b'.
    const Vector& r = *h.rmatrix();
    const std::size_t d = h.dim(), m = x.dim(), n = y.dim();
    std::vector<std::pair<Matrix, Matrix>> legs;
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v)
        if (!r[u * d + v].is_zero()) legs.emplace_back(r[u * d + v] * b.rho(u), a.rho(v));
    Vector unit = tensor(Matrix::from_columns(f, m, {x.unit()}), Matrix::from_columns(f, n, {y.unit()})).column(0);
    product = std::make_shared<const Algebra>(Algebra::from_products(
        f, m * n,
        [&](std::size_t p, std::size_t q) {
          const std::size_t i = p / n, j = p % n, k = q / n, l = q % n;
          Vector out = zero_vector(f, m * n);
          for (const auto& [r1, r2] : legs) {
            Vector left = x.multiply(unit_vector(f, m, i), r2.column(k));
            Vector right = y.multiply(r1.column(j), unit_vector(f, n, l));
            axpy(out, f.one(), tensor(Matrix::from_columns(f, m, {left}), Matrix::from_columns(f, n, {right})).column(0));
          }
          return out;
        },
        unit));
  } else {
    if (!is_cocommutative(h))
      throw std::invalid_argument("tensor_module_algebras: H is neither cocommutative nor quasitriangular");
    product = std::make_shared<const Algebra>(tensor_product(x, y));
  }
  HModule act = tensor_module(a.hmodule(), b.hmodule());
  ModuleAlgebra out(a.hopf(), product, act.actions());
  Report rep = check_module_algebra(out);
  if (!rep.ok()) throw VerificationError("tensor product is not a module algebra: " + rep.violations.front());
  return out;
}

std::vector<Matrix> ideal_object_maps(const ModuleAlgebra& ma) {
  std::vector<Matrix> maps = ma.algebra()->left_basis_maps();
  const auto& right = ma.algebra()->right_basis_maps();
  maps.insert(maps.end(), right.begin(), right.end());
  maps.insert(maps.end(), ma.rhos().begin(), ma.rhos().end());
  return maps;
}

bool is_ideal_object(const ModuleAlgebra& ma, const Subspace& v) {
  if (v.ambient() != ma.dim()) throw std::invalid_argument("is_ideal_object: ambient mismatch");
  return is_invariant(v, ideal_object_maps(ma));
}

std::vector<Matrix> double_stability_maps(const ModuleAlgebra& ma) {
  std::vector<Matrix> maps;
  const Algebra& a = *ma.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& rho : ma.rhos()) {
      maps.push_back(a.left_basis(i) * rho);
      maps.push_back(a.right_basis(i) * rho);
    }
  return maps;
}

bool double_stability(const ModuleAlgebra& ma, const Subspace& v) {
  if (v.ambient() != ma.dim()) throw std::invalid_argument("double_stability: ambient mismatch");
  return is_invariant(v, double_stability_maps(ma));
}

Subspace largest_stable_subideal(const ModuleAlgebra& ma, const Subspace& w) {
  return largest_invariant_subspace(ideal_object_maps(ma), w);
}

Subspace ideal_object_closure(const ModuleAlgebra& ma, const Subspace& s) {
  return invariant_closure(ideal_object_maps(ma), s);
}

Subspace c_module_radical(const ModuleAlgebra& ma) {
  Subspace rad = largest_stable_subideal(ma, radical(*ma.algebra()));
  if (!is_nilpotent_ideal(*ma.algebra(), rad).first) throw VerificationError("C-module radical is not nilpotent");
  return rad;
}

bool is_exact(const ModuleAlgebra& ma) { return c_module_radical(ma).is_zero(); }

Subspace ideal_object_product(const ModuleAlgebra& ma, const Subspace& i, const Subspace& j) {
  Subspace p = ideal_product(*ma.algebra(), i, j);
  if (!is_invariant(p, ma.rhos())) throw VerificationError("product of ideal objects is not H-stable");
  return p;
}

ModuleAlgebraQuotient quotient_module_algebra(const ModuleAlgebra& ma, const Subspace& ideal) {
  if (!is_ideal_object(ma, ideal)) throw std::invalid_argument("quotient_module_algebra: not an ideal object");
  QuotientAlgebra q = quotient_algebra(*ma.algebra(), ideal);
  std::vector<Matrix> rho;
  for (const auto& m : ma.rhos()) rho.push_back(q.projection * m * q.section);
  auto alg = std::make_shared<const Algebra>(std::move(q.algebra));
  return {ModuleAlgebra(ma.hopf(), alg, std::move(rho)), std::move(q.projection), std::move(q.section)};
}

ModuleAlgebraQuotient semisimple_quotient(const ModuleAlgebra& ma) {
  ModuleAlgebraQuotient q = quotient_module_algebra(ma, c_module_radical(ma));
  if (!c_module_radical(q.algebra).is_zero()) throw VerificationError("semisimple quotient has a nonzero C-module radical");
  return q;
}

std::vector<Subspace> enumerate_ideal_objects(const ModuleAlgebra& ma, std::uint64_t bound) {
  const Field f = ma.field();
  const std::size_t n = ma.dim();
  if (!enumeration_feasible(f, n, bound))
    throw std::invalid_argument("ideal object enumeration bound exceeded: " + f.name() + "^" + std::to_string(n));
  const auto maps = ideal_object_maps(ma);
  const std::uint64_t p = f.characteristic();
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subspace> found;
  auto add = [&](const Subspace& s) {
    if (seen.insert(key_of(s)).second) found.push_back(s);
  };
  add(Subspace::zero(f, n));
  // Principal ideal objects; vectors whose first nonzero entry is 1 suffice.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v = zero_vector(f, n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = f.element(c % p);
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    if (!v[lead].is_one()) continue;
    add(invariant_closure(maps, Subspace::span(f, n, {v})));
  }
  // Every ideal object is the join of the principal ones it contains.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(sum(found[i], found[j]));
  return found;
}

Subspace brute_force_c_radical(const ModuleAlgebra& ma, std::uint64_t bound) {
  std::vector<Subspace> nilpotent;
  const auto maps = ideal_object_maps(ma);
  for_each_subspace(ma.field(), ma.dim(), bound, [&](const Subspace& s) {
    if (is_invariant(s, maps) && is_nilpotent_ideal(*ma.algebra(), s).first) nilpotent.push_back(s);
    return true;
  });
  const Subspace* best = &nilpotent.front();
  for (const auto& s : nilpotent)
    if (s.dim() > best->dim()) best = &s;
  for (const auto& s : nilpotent)
    if (!best->contains(s)) throw VerificationError("nilpotent ideal objects have no maximum");
  return *best;
}

Subspace invariant_center(const ModuleAlgebra& ma) {
  Subspace z = center(*ma.algebra());
  const HopfAlgebra& h = *ma.hopf();
  const Matrix id = Matrix::identity(ma.field(), ma.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) z = intersect(z, null_space(ma.rho(i) - h.counit_of(i) * id));
  return z;
}

bool is_ideal_object_simple_exhaustive(const ModuleAlgebra& ma, std::uint64_t bound) {
  if (ma.dim() == 0) return false;
  return enumerate_ideal_objects(ma, bound).size() == 2;
}

}  // namespace exactalg
