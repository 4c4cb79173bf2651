#include <algorithm>
#include <array>

#include "doctest.h"
#include "exactalg/algebra.hpp"

using namespace exactalg;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F3 = Field::prime(3);

using Table = std::vector<std::vector<std::size_t>>;

Table cyclic(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

Table klein() {
  Table t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

// S3 as permutations of {0,1,2}, identity first.
Table s3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t[a][b] = k;
    }
  return t;
}

Algebra group_ring(const Table& t, Field f) {
  const std::size_t n = t.size();
  return Algebra::from_products(f, n, [&](std::size_t a, std::size_t b) { return unit_vector(f, n, t[a][b]); },
                                unit_vector(f, n, 0));
}

Algebra upper_triangular(Field f) {
  // Basis E11, E12, E22.
  const std::size_t idx[2][2] = {{0, 1}, {9, 2}};
  return Algebra::from_products(f, 3, [&](std::size_t x, std::size_t y) {
    const std::size_t rc[3][2] = {{0, 0}, {0, 1}, {1, 1}};
    Vector v = zero_vector(f, 3);
    if (rc[x][1] == rc[y][0]) v[idx[rc[x][0]][rc[y][1]]] = f.one();
    return v;
  }, Vector{f.one(), f.zero(), f.one()});
}

Vector vec(Field f, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

std::vector<Algebra> small_f2_algebras() {
  return {group_ring(cyclic(1), F2),
          group_ring(cyclic(2), F2),
          group_ring(cyclic(3), F2),
          group_ring(cyclic(4), F2),
          group_ring(klein(), F2),
          truncated_polynomial(F2, 2),
          truncated_polynomial(F2, 3),
          truncated_polynomial(F2, 4),
          direct_product(truncated_polynomial(F2, 2), group_ring(cyclic(1), F2)),
          direct_product(group_ring(cyclic(1), F2), group_ring(cyclic(1), F2)),
          upper_triangular(F2),
          matrix_algebra(F2, 2),
          tensor_product(truncated_polynomial(F2, 2), truncated_polynomial(F2, 2)),
          opposite(upper_triangular(F2))};
}

std::vector<Subspace> all_ideals(const Algebra& a) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(a.field(), a.dim()))
    if (is_two_sided_ideal(a, s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("builders satisfy the algebra axioms") {
  for (const auto& a : small_f2_algebras()) CHECK(check_algebra(a).ok());
  CHECK(check_algebra(group_ring(s3(), Q)).ok());
  CHECK(check_algebra(matrix_algebra(Q, 3)).ok());
  CHECK(check_algebra(upper_triangular(F3)).ok());
}

TEST_CASE("check_algebra reports violations") {
  // b1 b1 = b2 and b2 b1 = b1 give (b1 b1) b1 = b1 but b1 (b1 b1) = 0.
  Algebra bad = Algebra::from_products(Q, 3, [&](std::size_t i, std::size_t j) {
    if (i == 0) return unit_vector(Q, 3, j);
    if (j == 0) return unit_vector(Q, 3, i);
    if (i == 1 && j == 1) return unit_vector(Q, 3, 2);
    if (i == 2 && j == 1) return unit_vector(Q, 3, 1);
    return zero_vector(Q, 3);
  }, vec(Q, {1, 0, 0}));
  auto r = check_algebra(bad);
  CHECK(!r.ok());
  CHECK(std::find(r.violations.begin(), r.violations.end(), "associativity fails on (1,1,1)") != r.violations.end());
  Algebra wrong_unit = Algebra::from_products(Q, 1, [&](std::size_t, std::size_t) { return vec(Q, {1}); }, vec(Q, {2}));
  CHECK(check_algebra(wrong_unit).violations.size() == 2);
}

TEST_CASE("radical examples") {
  Algebra kz2 = group_ring(cyclic(2), F2);
  CHECK(radical(kz2) == Subspace::span(F2, 2, {vec(F2, {1, 1})}));
  for (std::uint64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    Algebra a = group_ring(cyclic(p), f);
    Subspace rad = radical(a);
    CHECK(rad.dim() == p - 1);
    // Augmentation ideal: coefficient sum zero.
    Matrix aug(f, 1, p);
    for (std::size_t i = 0; i < p; ++i) aug(0, i) = f.one();
    CHECK(rad == null_space(aug));
  }
  CHECK(radical(truncated_polynomial(Q, 2)) == Subspace::span(Q, 2, {vec(Q, {0, 1})}));
  CHECK(radical(direct_product(group_ring(cyclic(1), F2), group_ring(cyclic(1), F2))).is_zero());
  CHECK(radical(group_ring(cyclic(2), Q)).is_zero());
  CHECK(radical(matrix_algebra(Q, 2)).is_zero());
  CHECK(radical(group_ring(s3(), Q)).is_zero());
  CHECK(radical(group_ring(s3(), F3)).dim() == 4);
  CHECK(radical(group_ring(s3(), F2)).dim() == 1);
  Algebra local = direct_product(truncated_polynomial(F2, 2), group_ring(cyclic(1), F2));
  CHECK(radical(local) == Subspace::span(F2, 3, {vec(F2, {0, 1, 0})}));
  CHECK(radical(upper_triangular(Q)) == Subspace::span(Q, 3, {vec(Q, {0, 1, 0})}));
}

TEST_CASE("radical matches the brute-force maximal nilpotent ideal over F_2") {
  for (const auto& a : small_f2_algebras()) CHECK(radical(a) == brute_force_max_nilpotent_ideal(a));
}

TEST_CASE("radical is idempotent on the radical-free quotient") {
  std::vector<Algebra> as = {group_ring(s3(), F3), group_ring(cyclic(3), F3), upper_triangular(Q),
                             tensor_product(truncated_polynomial(Q, 2), group_ring(cyclic(2), Q)),
                             tensor_product(truncated_polynomial(F3, 3), upper_triangular(F3))};
  for (const auto& a : as) {
    auto q = quotient_algebra(a, radical(a));
    CHECK(check_algebra(q.algebra).ok());
    CHECK(radical(q.algebra).is_zero());
  }
}

TEST_CASE("nilpotency index conventions") {
  Algebra kz2 = group_ring(cyclic(2), F2);
  CHECK(is_nilpotent_ideal(kz2, Subspace::zero(F2, 2)) == std::pair<bool, std::size_t>{true, 1});
  CHECK(is_nilpotent_ideal(kz2, Subspace::span(F2, 2, {vec(F2, {1, 1})})) == std::pair<bool, std::size_t>{true, 2});
  CHECK(!is_nilpotent_ideal(kz2, Subspace::full(F2, 2)).first);
  Algebra t4 = truncated_polynomial(Q, 4);
  CHECK(is_nilpotent_ideal(t4, radical(t4)).second == 4);
}

TEST_CASE("ideal products: containment, associativity, monotonicity") {
  for (const auto& a : small_f2_algebras()) {
    auto ideals = all_ideals(a);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        Subspace ij = ideal_product(a, i, j);
        CHECK(is_two_sided_ideal(a, ij));
        CHECK(intersect(i, j).contains(ij));
        for (const auto& k : ideals) {
          if (a.dim() <= 3) CHECK(ideal_product(a, ij, k) == ideal_product(a, i, ideal_product(a, j, k)));
          if (k.contains(i)) CHECK(ideal_product(a, k, j).contains(ij));
        }
      }
  }
}

TEST_CASE("center") {
  CHECK(center(matrix_algebra(Q, 2)).dim() == 1);
  CHECK(center(group_ring(s3(), Q)).dim() == 3);
  CHECK(center(group_ring(klein(), F2)).dim() == 4);
  CHECK(center(upper_triangular(Q)).dim() == 1);
}

TEST_CASE("quotient and lifted ideals") {
  for (const auto& a : small_f2_algebras()) {
    Subspace rad = radical(a);
    auto q = quotient_algebra(a, rad);
    CHECK(q.projection * q.section == Matrix::identity(F2, q.algebra.dim()));
    // The projection is multiplicative.
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        CHECK(q.projection.apply(a.basis_product(i, j)) ==
              q.algebra.multiply(q.projection.column(i), q.projection.column(j)));
  }
  // lift(J) lift(J') inside lift(J J'), and nilpotent J over a nilpotent kernel lifts to a nilpotent ideal.
  std::vector<Algebra> as = {tensor_product(truncated_polynomial(F2, 2), truncated_polynomial(F2, 2)),
                             group_ring(klein(), F2), truncated_polynomial(F2, 4)};
  for (const auto& a : as) {
    for (const auto& i : all_ideals(a)) {
      if (!is_nilpotent_ideal(a, i).first) continue;
      auto q = quotient_algebra(a, i);
      for (const auto& j : all_ideals(q.algebra))
        for (const auto& j2 : all_ideals(q.algebra)) {
          Subspace lhs = ideal_product(a, lift_ideal(q.projection, j), lift_ideal(q.projection, j2));
          CHECK(lift_ideal(q.projection, ideal_product(q.algebra, j, j2)).contains(lhs));
        }
      for (const auto& j : all_ideals(q.algebra))
        if (is_nilpotent_ideal(q.algebra, j).first) CHECK(is_nilpotent_ideal(a, lift_ideal(q.projection, j)).first);
    }
  }
}

TEST_CASE("modules: axioms and products with ideals") {
  for (const auto& a0 : small_f2_algebras()) {
    auto a = std::make_shared<const Algebra>(a0);
    RightModule m = direct_sum(RightModule::regular(a), quotient_module(RightModule::regular(a), radical(*a)));
    CHECK(check_module(m).ok());
    auto ideals = all_ideals(*a);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        Subspace mi = module_times_ideal(m, i);
        RightModule sub = submodule(m, mi);
        Subspace lhs = image_of(mi.inclusion(), module_times_ideal(sub, j));
        CHECK(lhs == module_times_ideal(m, ideal_product(*a, i, j)));
      }
    // Nakayama: m . rad is proper for nonzero m.
    CHECK(module_times_ideal(m, radical(*a)).dim() < m.dim());
  }
}

TEST_CASE("projectivity") {
  for (const auto& a0 : small_f2_algebras()) {
    auto a = std::make_shared<const Algebra>(a0);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(is_projective(RightModule::free(a, n)));
    Subspace rad = radical(*a);
    RightModule top = quotient_module(RightModule::regular(a), rad);
    // The top is projective exactly when the algebra is semisimple.
    CHECK(is_projective(top) == rad.is_zero());
    CHECK(is_projective(direct_sum(top, RightModule::regular(a))) == rad.is_zero());
  }
  // Local algebras: projective iff free, i.e. dim M = dim A * dim top.
  auto loc = std::make_shared<const Algebra>(truncated_polynomial(F3, 3));
  RightModule reg = RightModule::regular(loc);
  for (std::size_t k = 0; k <= 3; ++k) {
    Subspace s = ideal_power(*loc, radical(*loc), k);
    RightModule m = quotient_module(reg, s);
    std::size_t top = m.dim() - module_times_ideal(m, radical(*loc)).dim();
    CHECK(is_projective(m) == (m.dim() == loc->dim() * top));
  }
  // Right ideals of M_2(Q) are projective.
  auto mat = std::make_shared<const Algebra>(matrix_algebra(Q, 2));
  Subspace row = Subspace::span(Q, 4, {vec(Q, {1, 0, 0, 0}), vec(Q, {0, 1, 0, 0})});
  CHECK(is_projective(submodule(RightModule::regular(mat), row)));
  auto dual = std::make_shared<const Algebra>(truncated_polynomial(Q, 2));
  CHECK(!is_projective(quotient_module(RightModule::regular(dual), radical(*dual))));
}

TEST_CASE("matrix algebra radical on an explicit representation") {
  // Upper triangular 3x3 matrices over F_2 in their defining representation.
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) {
      Matrix e(F2, 3, 3);
      e(r, c) = F2.one();
      basis.push_back(e);
    }
  Subspace rad = matrix_algebra_radical(F2, basis);
  CHECK(rad.dim() == 3);
  for (auto& v : rad.basis_vectors()) {
    Matrix x(F2, 3, 3);
    for (std::size_t k = 0; k < basis.size(); ++k) x += v[k] * basis[k];
    for (std::size_t i = 0; i < 3; ++i) CHECK(x(i, i).is_zero());
  }
}
