#include <array>

#include "doctest.h"
#include "exactalg/hopf.hpp"

using namespace exactalg;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F3 = Field::prime(3);

GroupTable s3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  GroupTable t;
  t.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t.mul[a][b] = k;
    }
  return t;
}

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

std::vector<HopfPtr> builders() {
  return {share(group_algebra(cyclic_group(1), F2)), share(group_algebra(cyclic_group(2), F2)),
          share(group_algebra(cyclic_group(3), F3)), share(group_algebra(s3(), Q)),
          share(group_algebra(s3(), F2)),           share(dual_group_algebra(cyclic_group(2), F2)),
          share(dual_group_algebra(cyclic_group(3), Q)), share(dual_group_algebra(s3(), F3)),
          share(sweedler4(Q)),                       share(sweedler4(F3))};
}

// Parity module over k^{Z/2}: e_g acts as 1 exactly on degree g.
HModule parity(const HopfPtr& h, std::size_t degree) {
  std::vector<Matrix> act;
  for (std::size_t g = 0; g < 2; ++g) {
    Matrix m(h->field(), 1, 1);
    m(0, 0) = g == degree ? h->field().one() : h->field().zero();
    act.push_back(m);
  }
  return HModule(h, 1, act);
}

// Brute force: count H-linear maps among all matrices over F_2.
std::size_t count_module_maps(const HModule& m, const HModule& n) {
  const std::size_t entries = m.dim() * n.dim();
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << entries); ++code) {
    Matrix f(F2, n.dim(), m.dim());
    for (std::size_t e = 0; e < entries; ++e) f(e / m.dim(), e % m.dim()) = F2.element(code >> e & 1);
    count += is_module_map(m, n, f);
  }
  return count;
}

}  // namespace

TEST_CASE("builders pass every Hopf axiom") {
  for (const auto& h : builders()) CHECK(check_hopf(*h).ok());
}

TEST_CASE("Sweedler's algebra") {
  HopfAlgebra h = sweedler4(Q);
  Matrix s2 = h.antipode() * h.antipode();
  CHECK(!(s2 == Matrix::identity(Q, 4)));
  Vector x = unit_vector(Q, 4, 2);
  CHECK(s2.apply(x) == scale(-Q.one(), x));
  CHECK(!is_cocommutative(h));
  CHECK(h.antipode_inverse() * h.antipode() == Matrix::identity(Q, 4));
  CHECK_THROWS_AS(sweedler4(F2), std::invalid_argument);
  for (long long alpha : {0, 1, -3}) CHECK(check_hopf(with_rmatrix(h, sweedler_rmatrix(Q, Q.from_int(alpha)))).ok());
  CHECK(check_hopf(with_rmatrix(sweedler4(F3), sweedler_rmatrix(F3, F3.one()))).ok());
  // 1 (x) 1 is not an R-matrix for a non-cocommutative algebra.
  Vector trivial = zero_vector(Q, 16);
  trivial[0] = Q.one();
  CHECK(!check_hopf(with_rmatrix(h, trivial)).ok());
}

TEST_CASE("cocommutativity") {
  CHECK(is_cocommutative(group_algebra(s3(), Q)));
  CHECK(is_cocommutative(dual_group_algebra(cyclic_group(3), Q)));
  CHECK(!is_cocommutative(dual_group_algebra(s3(), Q)));
  // Abelian group algebras are triangular with R = 1 (x) 1.
  HopfAlgebra g = group_algebra(cyclic_group(3), F3);
  Vector r = zero_vector(F3, 9);
  r[0] = F3.one();
  CHECK(check_hopf(with_rmatrix(g, r)).ok());
}

TEST_CASE("broken structure maps are reported") {
  HopfAlgebra g = group_algebra(cyclic_group(3), Q);
  HopfAlgebra bad_s(g.algebra(), g.comult(), g.counit(), Matrix::identity(Q, 3));
  auto r = check_hopf(bad_s);
  CHECK(r.violations.size() == 2);
  Matrix eps = g.counit();
  eps(0, 1) = Q.zero();
  CHECK(!check_hopf(HopfAlgebra(g.algebra(), g.comult(), eps, g.antipode())).ok());
}

TEST_CASE("group tables are validated") {
  GroupTable bad;
  bad.mul = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  GroupTable nonassoc;
  nonassoc.mul = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
  CHECK_THROWS_AS(group_algebra(nonassoc, Q), std::invalid_argument);
  GroupTable shifted;
  shifted.mul = {{1, 0}, {0, 1}};
  CHECK(shifted.validate() == 1);
  CHECK(check_hopf(group_algebra(shifted, F2)).ok());
}

TEST_CASE("module constructions") {
  for (const auto& h : builders()) {
    HModule reg = regular_module(h), triv = trivial_module(h);
    CHECK(check_hmodule(reg).ok());
    CHECK(check_hmodule(triv).ok());
    HModule t = tensor_module(reg, triv);
    CHECK(check_hmodule(t).ok());
    HModule rr = tensor_module(reg, reg);
    CHECK(check_hmodule(rr).ok());
    // Strict associativity of the Kronecker convention.
    if (h->dim() <= 4) {
      HModule a = tensor_module(tensor_module(reg, triv), reg), b = tensor_module(reg, tensor_module(triv, reg));
      CHECK(a.actions() == b.actions());
    }
    // Unit object is strict.
    CHECK(tensor_module(triv, reg).actions() == reg.actions());
    CHECK(hom_module_space(reg, rr).size() == rr.dim());
    CHECK(hom_module_space(reg, triv).size() == 1);
  }
}

TEST_CASE("duals satisfy the zig-zag identities") {
  for (const auto& h : builders()) {
    HModule reg = regular_module(h);
    std::vector<HModule> ms = {reg, trivial_module(h), tensor_module(reg, trivial_module(h))};
    if (h->dim() <= 3) ms.push_back(tensor_module(reg, reg));
    for (const auto& m : ms) {
      Duality l = left_dual(m);
      CHECK(check_hmodule(l.dual).ok());
      CHECK(check_left_duality(m, l).ok());
      Duality r = right_dual(m);
      CHECK(check_hmodule(r.dual).ok());
      CHECK(check_right_duality(m, r).ok());
    }
  }
  // For Sweedler's algebra the left dual action is not the right dual action.
  auto sw = share(sweedler4(Q));
  HModule reg = regular_module(sw);
  CHECK(!(left_dual(reg).dual.actions() == right_dual(reg).dual.actions()));
  // The left-dual data fails as a right duality.
  CHECK(!check_right_duality(reg, left_dual(reg)).ok());
}

TEST_CASE("graded vector spaces") {
  auto h = share(dual_group_algebra(cyclic_group(2), F2));
  HModule even = parity(h, 0), odd = parity(h, 1);
  CHECK(tensor_module(odd, odd).actions() == even.actions());
  CHECK(tensor_module(odd, even).actions() == odd.actions());
  CHECK(hom_module_space(odd, even).empty());
}

TEST_CASE("hom spaces against brute force over F_2") {
  std::vector<HopfPtr> hs = {share(group_algebra(cyclic_group(2), F2)), share(dual_group_algebra(cyclic_group(2), F2)),
                             share(group_algebra(cyclic_group(1), F2))};
  for (const auto& h : hs) {
    HModule reg = regular_module(h), triv = trivial_module(h);
    std::vector<HModule> ms = {reg, triv, tensor_module(reg, reg), direct_sum(triv, triv)};
    for (const auto& m : ms)
      for (const auto& n : ms) {
        if (m.dim() * n.dim() > 16) continue;
        CHECK((std::size_t{1} << hom_module_space(m, n).size()) == count_module_maps(m, n));
      }
    for (const auto& n : ms) CHECK(hom_module_space(reg, n).size() == n.dim());
  }
}
