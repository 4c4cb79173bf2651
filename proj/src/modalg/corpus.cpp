#include "exactalg/corpus.hpp"

#include <map>
#include <stdexcept>

namespace exactalg {

namespace {

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }
ModuleAlgebraPtr share(ModuleAlgebra m) { return std::make_shared<const ModuleAlgebra>(std::move(m)); }

Matrix diag2(Field f, int a, int b) { return Matrix::from_ints(f, {{a, 0}, {0, b}}); }

}  // namespace

ModuleAlgebraPtr mu2_algebra(Field f) {
  auto h = share(dual_group_algebra(cyclic_group(2), f));
  // 1 . 1 = 1, x . x = 1.
  auto a = std::make_shared<const Algebra>(Algebra::from_products(
      f, 2, [&](std::size_t i, std::size_t j) { return unit_vector(f, 2, (i + j) % 2); }, unit_vector(f, 2, 0)));
  return share(ModuleAlgebra(h, a, {diag2(f, 1, 0), diag2(f, 0, 1)}));
}

ModuleAlgebraPtr mu2_tensor(Field f) {
  auto a = mu2_algebra(f);
  return share(tensor_module_algebras(*a, *a));
}

ModuleAlgebraPtr function_algebra(const GroupTable& g, Field f) {
  auto h = share(group_algebra(g, f));
  const std::size_t n = g.order();
  Vector unit(n, f.one());
  auto a = std::make_shared<const Algebra>(Algebra::from_products(
      f, n, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector(f, n, i) : zero_vector(f, n); }, unit));
  std::vector<Matrix> rho;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix m(f, n, n);
    for (std::size_t y = 0; y < n; ++y) m(g.mul[x][y], y) = f.one();
    rho.push_back(std::move(m));
  }
  return share(ModuleAlgebra(h, a, std::move(rho)));
}

ModuleAlgebraPtr adjoint_algebra(const HopfPtr& h) {
  const Algebra& a = *h->algebra();
  const std::size_t n = h->dim();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(h->field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = h->comult_coeff(i, j, k);
        if (!c.is_zero()) m += c * (a.left_basis(j) * a.right_mult(h->antipode().column(k)));
      }
    rho.push_back(std::move(m));
  }
  return share(ModuleAlgebra(h, h->algebra(), std::move(rho)));
}

ModuleAlgebraPtr truncated_trivial(Field f, std::size_t m) {
  auto h = share(group_algebra(cyclic_group(1), f));
  return share(trivial_action(h, std::make_shared<const Algebra>(truncated_polynomial(f, m))));
}

ModuleAlgebraPtr sweedler_line(Field f) {
  auto h = share(sweedler4(f));
  auto a = std::make_shared<const Algebra>(truncated_polynomial(f, 2));
  Matrix lower = Matrix::from_ints(f, {{0, 1}, {0, 0}});
  return share(ModuleAlgebra(h, a, {Matrix::identity(f, 2), diag2(f, 1, -1), lower, lower}));
}

const std::vector<Example>& example_registry() {
  static const std::vector<Example> reg = {
      {"mu2_char2", "k[x]/(x^2-1), x odd, over k^{Z/2}, k = F_2"},
      {"mu2_char3", "k[x]/(x^2-1), x odd, over k^{Z/2}, k = F_3"},
      {"mu2_tensor_char2", "tensor square of mu2 over F_2 (not exact)"},
      {"mu2_tensor_char3", "tensor square of mu2 over F_3 (two simple factors)"},
      {"fun_Z2", "k^{Z/2} with translation action of k[Z/2], k = F_2"},
      {"group_Z2_modp", "F_2[Z/2] with the adjoint action of F_2[Z/2]"},
      {"sweedler4_Q", "Sweedler's 4-dimensional Hopf algebra over Q"},
      {"trivialH_localF2", "F_2[t]/t^2 with the trivial Hopf algebra"},
      {"sweedler_line_Q", "Q[y]/y^2 over Sweedler's algebra (exact, not semisimple)"},
      {"sweedler_line_F3", "F_3[y]/y^2 over Sweedler's algebra"},
      {"fun_S3_Q", "Q^{S_3} with translation action of Q[S_3]"},
  };
  return reg;
}

bool is_hopf_example(const std::string& name) { return name == "sweedler4_Q"; }

GroupTable symmetric_group_s3() {
  const std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  GroupTable t;
  t.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> c(3);
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t.mul[a][b] = k;
    }
  return t;
}

ModuleAlgebraPtr example_module_algebra(const std::string& name) {
  const Field f2 = Field::prime(2), f3 = Field::prime(3), q = Field::rationals();
  if (name == "mu2_char2") return mu2_algebra(f2);
  if (name == "mu2_char3") return mu2_algebra(f3);
  if (name == "mu2_tensor_char2") return mu2_tensor(f2);
  if (name == "mu2_tensor_char3") return mu2_tensor(f3);
  if (name == "fun_Z2") return function_algebra(cyclic_group(2), f2);
  if (name == "group_Z2_modp") return adjoint_algebra(share(group_algebra(cyclic_group(2), f2)));
  if (name == "trivialH_localF2") return truncated_trivial(f2, 2);
  if (name == "sweedler_line_Q") return sweedler_line(q);
  if (name == "sweedler_line_F3") return sweedler_line(f3);
  if (name == "fun_S3_Q") return function_algebra(symmetric_group_s3(), q);
  if (is_hopf_example(name)) throw std::invalid_argument("example " + name + " is a Hopf algebra, not a module algebra");
  throw std::out_of_range("unknown example: " + name);
}

ModuleAlgebraPtr example_module_algebra_over(const std::string& name, Field f) {
  if (name == "mu2_char2" || name == "mu2_char3") return mu2_algebra(f);
  if (name == "mu2_tensor_char2" || name == "mu2_tensor_char3") return mu2_tensor(f);
  if (name == "fun_Z2") return function_algebra(cyclic_group(2), f);
  if (name == "group_Z2_modp") return adjoint_algebra(share(group_algebra(cyclic_group(2), f)));
  if (name == "trivialH_localF2") return truncated_trivial(f, 2);
  if (name == "sweedler_line_Q" || name == "sweedler_line_F3") return sweedler_line(f);
  if (name == "fun_S3_Q") return function_algebra(symmetric_group_s3(), f);
  return example_module_algebra(name);
}

HopfPtr example_hopf_over(const std::string& name, Field f) {
  if (name == "sweedler4_Q") return share(sweedler4(f));
  return example_module_algebra_over(name, f)->hopf();
}

HopfPtr example_hopf(const std::string& name) {
  if (name == "sweedler4_Q") return share(sweedler4(Field::rationals()));
  return example_module_algebra(name)->hopf();
}

std::vector<ModuleObject> corpus_modules(const ModuleAlgebraPtr& ma, std::uint64_t bound) {
  std::vector<ModuleObject> out;
  ModuleObject reg = regular_module_object(ma);
  out.push_back(reg);
  HModule hreg = regular_module(ma->hopf());
  out.push_back(act_projective(hreg, reg));
  std::vector<Subspace> ideals;
  Subspace rad = c_module_radical(*ma);
  if (enumeration_feasible(ma->field(), ma->dim(), bound))
    ideals = enumerate_ideal_objects(*ma, bound);
  else
    ideals.push_back(rad);
  for (const auto& i : ideals)
    if (!i.is_zero() && !i.is_full()) out.push_back(quotient_module_object(reg, i));
  if (!rad.is_zero()) out.push_back(act_projective(hreg, quotient_module_object(reg, rad)));
  return out;
}

}  // namespace exactalg
