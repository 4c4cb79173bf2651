#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "exactalg/algebra.hpp"

namespace exactalg {

// Hopf algebra on top of an Algebra. Linear structure maps are matrices:
// comult is n^2 x n (column i is Delta(b_i) on the Kronecker basis), counit
// is 1 x n, antipode is n x n. An optional R-matrix lives in H (x) H.
class HopfAlgebra {
 public:
  HopfAlgebra(AlgebraPtr algebra, Matrix comult, Matrix counit, Matrix antipode,
              std::optional<Vector> rmatrix = std::nullopt);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  Field field() const noexcept { return algebra_->field(); }
  std::size_t dim() const noexcept { return algebra_->dim(); }
  const Matrix& comult() const noexcept { return comult_; }
  const Matrix& counit() const noexcept { return counit_; }
  const Matrix& antipode() const noexcept { return antipode_; }
  // Throws when the antipode is singular.
  const Matrix& antipode_inverse() const;
  const std::optional<Vector>& rmatrix() const noexcept { return rmatrix_; }
  // Coefficient of b_j (x) b_k in Delta(b_i).
  const Scalar& comult_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return comult_(j * dim() + k, i);
  }
  const Scalar& counit_of(std::size_t i) const { return counit_(0, i); }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  AlgebraPtr algebra_;
  Matrix comult_;
  Matrix counit_;
  Matrix antipode_;
  std::optional<Matrix> antipode_inverse_;
  std::optional<Vector> rmatrix_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

bool same_hopf(const HopfPtr& a, const HopfPtr& b);

// Algebra axioms, coassociativity, counit laws, Delta and epsilon being
// algebra maps, both antipode laws, and the quasitriangular axioms when an
// R-matrix is present.
Report check_hopf(const HopfAlgebra& h);
bool is_cocommutative(const HopfAlgebra& h);
// Swap tau on V (x) W as a (mn x mn) permutation matrix.
Matrix swap_map(Field f, std::size_t m, std::size_t n);

// Multiplication table of a finite group on labels 0..n-1.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;

  std::size_t order() const noexcept { return mul.size(); }
  // Throws unless the table is a group; returns the identity label.
  std::size_t validate() const;
  std::size_t identity() const { return validate(); }
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);

// k[G]: Delta g = g (x) g, epsilon = 1, S g = g^-1.
HopfAlgebra group_algebra(const GroupTable& g, Field f);
// k^G on idempotents e_g: Delta e_g = sum_{ab=g} e_a (x) e_b, S e_g = e_{g^-1}.
HopfAlgebra dual_group_algebra(const GroupTable& g, Field f);
// Sweedler's algebra on 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
// Delta x = x (x) 1 + g (x) x. Needs characteristic other than 2.
HopfAlgebra sweedler4(Field f);
// One of Sweedler's R-matrices, parametrised by alpha.
Vector sweedler_rmatrix(Field f, const Scalar& alpha);
HopfAlgebra with_rmatrix(const HopfAlgebra& h, Vector r);

// Left H-module: action(i) is v -> b_i . v.
class HModule {
 public:
  HModule(HopfPtr hopf, std::size_t dim, std::vector<Matrix> action);

  const HopfPtr& hopf() const noexcept { return hopf_; }
  Field field() const noexcept { return hopf_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<Matrix>& actions() const noexcept { return action_; }
  // v -> h . v
  Matrix act(const Vector& h) const;

 private:
  HopfPtr hopf_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

Report check_hmodule(const HModule& m);
HModule regular_module(const HopfPtr& h);
// The unit object: k with h acting by epsilon(h).
HModule trivial_module(const HopfPtr& h);
// Diagonal action through Delta on the Kronecker basis.
HModule tensor_module(const HModule& m, const HModule& n);
HModule tensor_power(const HModule& m, std::size_t k);
HModule direct_sum(const HModule& m, const HModule& n);
// Restriction to a stable subspace, on echelon coordinates.
HModule restrict_module(const HModule& m, const Subspace& s);

// Basis of H-linear maps m -> n.
std::vector<Matrix> hom_module_space(const HModule& m, const HModule& n);
bool is_module_map(const HModule& m, const HModule& n, const Matrix& f);

struct Duality {
  HModule dual;
  // Left dual: ev on dual (x) V and coev into V (x) dual.
  // Right dual: ev on V (x) dual and coev into dual (x) V.
  Matrix ev;
  Matrix coev;
};

// (h f)(v) = f(S(h) v).
Duality left_dual(const HModule& m);
// (h f)(v) = f(S^-1(h) v).
Duality right_dual(const HModule& m);
// Both zig-zag identities plus H-linearity of ev and coev.
Report check_left_duality(const HModule& m, const Duality& d);
Report check_right_duality(const HModule& m, const Duality& d);

}  // namespace exactalg
