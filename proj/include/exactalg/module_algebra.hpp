#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exactalg/hopf.hpp"

namespace exactalg {

// Algebra A with a left H-action rho(i): a -> b_i . a making it an algebra
// in H-mod.
class ModuleAlgebra {
 public:
  ModuleAlgebra(HopfPtr hopf, AlgebraPtr algebra, std::vector<Matrix> rho);

  const HopfPtr& hopf() const noexcept { return hopf_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  Field field() const noexcept { return algebra_->field(); }
  std::size_t dim() const noexcept { return algebra_->dim(); }
  const Matrix& rho(std::size_t i) const { return rho_.at(i); }
  const std::vector<Matrix>& rhos() const noexcept { return rho_; }
  const HModule& hmodule() const noexcept { return hmodule_; }

 private:
  HopfPtr hopf_;
  AlgebraPtr algebra_;
  std::vector<Matrix> rho_;
  HModule hmodule_;
};

using ModuleAlgebraPtr = std::shared_ptr<const ModuleAlgebra>;

// H-module axioms, h.(ab) = sum (h1.a)(h2.b) on basis pairs, h.1 = eps(h) 1.
Report check_module_algebra(const ModuleAlgebra& ma);
// H acting through the counit.
ModuleAlgebra trivial_action(const HopfPtr& h, AlgebraPtr a);
// The unit algebra k.
ModuleAlgebra unit_module_algebra(const HopfPtr& h);
// Braided product through the R-matrix when present, plain product otherwise
// (then H must be cocommutative). Post-checked.
ModuleAlgebra tensor_module_algebras(const ModuleAlgebra& a, const ModuleAlgebra& b);

bool is_ideal_object(const ModuleAlgebra& ma, const Subspace& v);
// The maps v -> a (h . v) and v -> (h . v) a over basis a, h.
std::vector<Matrix> double_stability_maps(const ModuleAlgebra& ma);
bool double_stability(const ModuleAlgebra& ma, const Subspace& v);
// Every L_a, R_a and rho_h.
std::vector<Matrix> ideal_object_maps(const ModuleAlgebra& ma);
// Greatest ideal object inside w.
Subspace largest_stable_subideal(const ModuleAlgebra& ma, const Subspace& w);
// Smallest ideal object containing s.
Subspace ideal_object_closure(const ModuleAlgebra& ma, const Subspace& s);
// Greatest nilpotent ideal object; nilpotency is post-verified.
Subspace c_module_radical(const ModuleAlgebra& ma);
bool is_exact(const ModuleAlgebra& ma);
// Product of ideal objects; throws VerificationError if the result is not H-stable.
Subspace ideal_object_product(const ModuleAlgebra& ma, const Subspace& i, const Subspace& j);

struct ModuleAlgebraQuotient {
  ModuleAlgebra algebra;
  Matrix projection;
  Matrix section;
};

// Quotient by an ideal object with the induced action.
ModuleAlgebraQuotient quotient_module_algebra(const ModuleAlgebra& ma, const Subspace& ideal);
// Quotient by the C-module radical; the result is rechecked to have zero radical.
ModuleAlgebraQuotient semisimple_quotient(const ModuleAlgebra& ma);

// Oracles over finite fields.
// Every ideal object: joins of the ideal objects generated by single vectors.
std::vector<Subspace> enumerate_ideal_objects(const ModuleAlgebra& ma, std::uint64_t bound = kDefaultEnumerationBound);
// Scans every subspace of A.
Subspace brute_force_c_radical(const ModuleAlgebra& ma, std::uint64_t bound = kDefaultEnumerationBound);

// H-invariant part of the center.
Subspace invariant_center(const ModuleAlgebra& ma);

struct SimpleFactor {
  // Central H-invariant idempotent e with factor A e.
  Vector idempotent;
  // A (1 - e), the ideal object with quotient A e.
  Subspace kernel;
  // A e as a subspace of A.
  Subspace support;
  ModuleAlgebra factor;
  // a -> a e in coordinates of the support.
  Matrix projection;
  // Whether the factor was shown to have no proper nonzero ideal object.
  bool certified = false;
  // How: "exhaustive" or "invariant center is a field".
  std::string certificate;
};

struct Decomposition {
  std::vector<SimpleFactor> factors;
  // False when some piece of the invariant center could not be split over
  // the base field; the affected factors carry certified = false.
  bool complete = true;
  std::vector<std::string> notes;
};

// Splits an exact module algebra along the primitive idempotents of its
// invariant center. Throws std::invalid_argument if ma is not exact.
Decomposition decompose_simple_factors(const ModuleAlgebra& ma, std::uint64_t bound = kDefaultEnumerationBound);
// No ideal objects besides 0 and A, decided by enumeration.
bool is_ideal_object_simple_exhaustive(const ModuleAlgebra& ma, std::uint64_t bound = kDefaultEnumerationBound);

// Right A-module in H-mod: hmodule gives h . m, nabla(j) is m -> m . a_j.
class ModuleObject {
 public:
  ModuleObject(ModuleAlgebraPtr ma, HModule hmodule, std::vector<Matrix> nabla);

  const ModuleAlgebraPtr& module_algebra() const noexcept { return ma_; }
  Field field() const noexcept { return ma_->field(); }
  std::size_t dim() const noexcept { return hmodule_.dim(); }
  const HModule& hmodule() const noexcept { return hmodule_; }
  const Matrix& nabla(std::size_t j) const { return nabla_.at(j); }
  const std::vector<Matrix>& nablas() const noexcept { return nabla_; }
  // Underlying right module over the algebra of A.
  RightModule underlying() const;

 private:
  ModuleAlgebraPtr ma_;
  HModule hmodule_;
  std::vector<Matrix> nabla_;
};

// Right module axioms plus h.(m a) = sum (h1.m)(h2.a).
Report check_module_object(const ModuleObject& m);
// A over itself.
ModuleObject regular_module_object(const ModuleAlgebraPtr& ma);
// Q |> M on Q (x) M: diagonal H-action, A acting on the right factor.
ModuleObject act_projective(const HModule& q, const ModuleObject& m);
// Q |> A.
ModuleObject free_module_object(const ModuleAlgebraPtr& ma, const HModule& q);
// Span of m . x for m in M and x in the ideal object.
Subspace module_times_ideal_object(const ModuleObject& m, const Subspace& ideal);
bool is_module_subobject(const ModuleObject& m, const Subspace& s);
ModuleObject submodule_object(const ModuleObject& m, const Subspace& s);
ModuleObject quotient_module_object(const ModuleObject& m, const Subspace& s);
// Pulls a module over the quotient back along the projection.
ModuleObject restrict_along(const ModuleAlgebraPtr& ma, const Matrix& projection, const ModuleObject& m);
// Maps commuting with both the H-action and the A-action.
std::vector<Matrix> module_object_hom_space(const ModuleObject& m, const ModuleObject& n);

}  // namespace exactalg
