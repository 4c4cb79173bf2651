#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "exactalg/report.hpp"
#include "exactalg/subspace.hpp"

namespace exactalg {

// Finite-dimensional unital associative algebra given by structure constants:
// b_i b_j = sum_k c(i, j, k) b_k.
class Algebra {
 public:
  // constants[(i * dim + j) * dim + k] = c(i, j, k).
  Algebra(Field f, std::size_t dim, std::vector<Scalar> constants, Vector unit);
  // products(i, j) returns the coordinate vector of b_i b_j.
  static Algebra from_products(Field f, std::size_t dim,
                               const std::function<Vector(std::size_t, std::size_t)>& products,
                               Vector unit);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const noexcept { return constants_; }

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_product(std::size_t i, std::size_t j) const;
  // y -> b_i y and y -> y b_i.
  const Matrix& left_basis(std::size_t i) const { return left_.at(i); }
  const Matrix& right_basis(std::size_t i) const { return right_.at(i); }
  const std::vector<Matrix>& left_basis_maps() const noexcept { return left_; }
  const std::vector<Matrix>& right_basis_maps() const noexcept { return right_; }
  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;
  // dim x dim^2 matrix of the product on A (x) A.
  Matrix multiplication_map() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.unit_ == b.unit_ && a.constants_ == b.constants_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> constants_;
  Vector unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Associativity on every basis triple and the two unit laws.
Report check_algebra(const Algebra& a);
bool is_commutative(const Algebra& a);

Algebra opposite(const Algebra& a);
Algebra direct_product(const Algebra& a, const Algebra& b);
// Plain tensor product on the Kronecker basis.
Algebra tensor_product(const Algebra& a, const Algebra& b);
// k[t] / t^m on the basis 1, t, ..., t^{m-1}.
Algebra truncated_polynomial(Field f, std::size_t m);
// M_n(k) on matrix units E_{rc}, index r * n + c.
Algebra matrix_algebra(Field f, std::size_t n);

// Two-sided ideal generated by s.
Subspace ideal_closure(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
// Span of all products x y, x in i, y in j.
Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j);
Subspace ideal_power(const Algebra& a, const Subspace& i, std::size_t k);
// (nilpotent, least k with i^k = 0); the zero ideal gives (true, 1).
std::pair<bool, std::size_t> is_nilpotent_ideal(const Algebra& a, const Subspace& i);

// Jacobson radical, post-verified (ideal, nilpotent, quotient has zero radical).
Subspace radical(const Algebra& a);
// Radical of the span of the given linearly independent matrices, which must
// be closed under multiplication. Returned in coefficient coordinates.
Subspace matrix_algebra_radical(Field f, const std::vector<Matrix>& basis);

struct QuotientAlgebra {
  Algebra algebra;
  // A -> A / I in complement coordinates.
  Matrix projection;
  // A / I -> A picking the complement basis vectors.
  Matrix section;
};

// Quotient by a two-sided ideal; the complement basis is the set of
// non-pivot coordinates of the ideal's echelon basis.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);
Subspace center(const Algebra& a);
// Preimage of an ideal of the quotient.
Subspace lift_ideal(const Matrix& projection, const Subspace& j);

// Oracle: the largest nilpotent two-sided ideal found by enumerating every
// subspace of a finite-field algebra.
Subspace brute_force_max_nilpotent_ideal(const Algebra& a, std::uint64_t bound = kDefaultEnumerationBound);

// Right module over an algebra: action(j) is v -> v . b_j.
class RightModule {
 public:
  RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);
  static RightModule regular(AlgebraPtr algebra);
  static RightModule free(AlgebraPtr algebra, std::size_t rank);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t j) const { return action_.at(j); }
  const std::vector<Matrix>& actions() const noexcept { return action_; }
  // v -> v . x
  Matrix act(const Vector& x) const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

Report check_module(const RightModule& m);
RightModule direct_sum(const RightModule& m, const RightModule& n);
// Submodule and quotient module on echelon / complement coordinates.
RightModule submodule(const RightModule& m, const Subspace& s);
RightModule quotient_module(const RightModule& m, const Subspace& s);
bool is_submodule(const RightModule& m, const Subspace& s);
// Span of v . x for v in m and x in the ideal.
Subspace module_times_ideal(const RightModule& m, const Subspace& ideal);
// Basis of the right-module maps m -> n.
std::vector<Matrix> module_hom_space(const RightModule& m, const RightModule& n);
// Lifts a basis of m / m.rad to a surjection from a free module and searches
// for a module section of it.
bool is_projective(const RightModule& m);

}  // namespace exactalg
