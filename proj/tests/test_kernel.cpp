#include <random>
#include <set>

#include "doctest.h"
#include "exactalg/subspace.hpp"

using namespace exactalg;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F3 = Field::prime(3);

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

Subspace random_subspace(Field f, std::size_t n, std::size_t gens, std::mt19937_64& rng) {
  return Subspace::row_space(random_matrix(f, gens, n, rng));
}

// All vectors of F_p^n as integer tuples.
std::vector<Vector> all_vectors(Field f, std::size_t n) {
  std::vector<Vector> out;
  std::uint64_t p = f.characteristic(), total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector v = zero_vector(f, n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = f.element(c % p);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
  CHECK(Q.parse_scalar("-14/4").to_string() == "-7/2");
  CHECK(Q.parse_scalar("6/3").to_string() == "2");
  CHECK(F3.parse_scalar("-1").to_string() == "2");
  CHECK(F3.parse_scalar("1/2").to_string() == "2");
  CHECK((F2.one() + F2.one()).is_zero());
  CHECK((Q.from_int(3) / Q.from_int(6)).to_string() == "1/2");
  CHECK_THROWS_AS(F3.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(F2.one() + F3.one(), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Q.parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(F3.parse_scalar("1/3"), std::invalid_argument);
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("7").characteristic() == 7);
  for (std::uint64_t a = 1; a < 7; ++a) {
    Field F7 = Field::prime(7);
    CHECK((F7.element(a) * F7.element(a).inverse()).is_one());
  }
}

TEST_CASE("rref examples") {
  auto r = rref(Matrix::from_ints(Q, {{2, 4}, {1, 2}}));
  CHECK(r.matrix == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  Subspace k = null_space(Matrix::from_ints(F2, {{1, 1}}));
  CHECK(k == Subspace::span(F2, 2, {Matrix::from_ints(F2, {{1, 1}}).row(0)}));

  Subspace u = Subspace::span(Q, 3, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 1)});
  Subspace v = Subspace::span(Q, 3, {unit_vector(Q, 3, 1), unit_vector(Q, 3, 2)});
  CHECK(intersect(u, v) == Subspace::span(Q, 3, {unit_vector(Q, 3, 1)}));
  CHECK(sum(u, v).is_full());
}

TEST_CASE("tensor index convention") {
  Matrix n = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
  Matrix t = tensor(n, Matrix::identity(Q, 2));
  for (std::size_t j = 0; j < 2; ++j) CHECK(t.apply(unit_vector(Q, 4, 2 + j)) == unit_vector(Q, 4, j));
  CHECK(t.apply(unit_vector(Q, 4, 0)) == zero_vector(Q, 4));
  // (a (x) b)(c (x) d) = ac (x) bd
  std::mt19937_64 rng(1);
  Matrix a = random_matrix(F3, 2, 3, rng), b = random_matrix(F3, 3, 2, rng);
  Matrix c = random_matrix(F3, 3, 2, rng), d = random_matrix(F3, 2, 2, rng);
  CHECK(tensor(a, b) * tensor(c, d) == tensor(a * c, b * d));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  std::mt19937_64 rng(7);
  for (Field f : {Q, F2, F3}) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m = random_matrix(f, 1 + trial % 5, 1 + (trial * 3) % 6, rng);
      auto r = rref(m);
      CHECK(rref(r.matrix).matrix == r.matrix);
      Subspace k = null_space(m);
      CHECK(k.dim() + r.pivots.size() == m.cols());
      for (auto& x : k.basis_vectors()) CHECK(is_zero(m.apply(x)));
      CHECK(image(m).dim() == r.pivots.size());
    }
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(11);
  for (Field f : {Q, F3}) {
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(f, 4, 3, rng);
      Vector x0 = random_matrix(f, 3, 1, rng).column(0);
      auto x = solve(m, m.apply(x0));
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == m.apply(x0));
      Matrix s = random_matrix(f, 3, 3, rng);
      auto inv = inverse(s);
      if (rank(s) == 3) {
        REQUIRE(inv.has_value());
        CHECK(s * *inv == Matrix::identity(f, 3));
      } else {
        CHECK(!inv.has_value());
      }
    }
  }
  // Inconsistent system.
  CHECK(!solve(Matrix::from_ints(Q, {{1, 0}, {1, 0}}), {Q.one(), Q.zero()}).has_value());
}

TEST_CASE("sum and intersection dimensions") {
  std::mt19937_64 rng(3);
  for (Field f : {Q, F2, F3}) {
    for (int trial = 0; trial < 40; ++trial) {
      Subspace u = random_subspace(f, 5, 1 + trial % 4, rng);
      Subspace v = random_subspace(f, 5, 1 + (trial / 4) % 4, rng);
      Subspace s = sum(u, v), i = intersect(u, v);
      CHECK(s.dim() + i.dim() == u.dim() + v.dim());
      CHECK(u.contains(i));
      CHECK(v.contains(i));
      CHECK(s.contains(u));
      CHECK(intersect(u, v) == intersect(v, u));
    }
  }
}

TEST_CASE("preimage against vector enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(F2, 3, 4, rng);
    Subspace v = random_subspace(F2, 3, 1 + trial % 3, rng);
    Subspace pre = preimage(m, v);
    std::size_t count = 0;
    for (auto& x : all_vectors(F2, 4)) {
      bool in = v.contains(m.apply(x));
      CHECK(in == pre.contains(x));
      count += in;
    }
    CHECK(count == (std::size_t{1} << pre.dim()));
  }
}

TEST_CASE("largest invariant subspace") {
  // Nilpotent shift on Q^3: invariant subspaces are the flags 0 < <e0> < <e0,e1> < Q^3.
  Matrix shift = Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  Subspace w = Subspace::span(Q, 3, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 2)});
  CHECK(largest_invariant_subspace({shift}, w) == Subspace::span(Q, 3, {unit_vector(Q, 3, 0)}));
  CHECK(invariant_closure({shift}, Subspace::span(Q, 3, {unit_vector(Q, 3, 2)})).is_full());

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Matrix> maps = {random_matrix(F2, 4, 4, rng, 1)};
    Subspace w2 = random_subspace(F2, 4, 1 + trial % 4, rng);
    Subspace u = largest_invariant_subspace(maps, w2);
    CHECK(w2.contains(u));
    CHECK(is_invariant(u, maps));
    // Oracle: every invariant subspace inside w2 lies in u.
    for (auto& s : enumerate_subspaces(F2, 4))
      if (w2.contains(s) && is_invariant(s, maps)) CHECK(u.contains(s));
  }
}

TEST_CASE("subspace enumeration counts") {
  CHECK(enumerate_subspaces(F2, 1).size() == 2);
  CHECK(enumerate_subspaces(F2, 2).size() == 5);
  CHECK(enumerate_subspaces(F3, 2).size() == 6);
  // Oracle: additively closed subsets of F_2^3 containing 0.
  auto vecs = all_vectors(F2, 3);
  std::size_t closed = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (!(mask & 1)) continue;
    bool ok = true;
    for (unsigned a = 0; a < 8 && ok; ++a)
      for (unsigned b = 0; b < 8 && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> (a ^ b) & 1)) ok = false;
    closed += ok;
  }
  CHECK(enumerate_subspaces(F2, 3).size() == closed);
  // Gaussian binomial sums: 1 + 15 + 35 + 15 + 1 for F_2^4, 1 + 40 + 130 + 40 + 1 for F_3^4.
  CHECK(enumerate_subspaces(F2, 4).size() == 67);
  CHECK(enumerate_subspaces(F3, 4).size() == 212);
  std::set<std::string> seen;
  for (auto& s : enumerate_subspaces(F3, 3)) seen.insert(s.basis().to_string());
  CHECK(seen.size() == 28);
  CHECK_THROWS_AS(enumerate_subspaces(Q, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subspaces(F2, 17), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subspaces(F3, 3, 26), std::invalid_argument);
}

TEST_CASE("span builder agrees with row space") {
  std::mt19937_64 rng(13);
  for (Field f : {Q, F3}) {
    Matrix m = random_matrix(f, 6, 5, rng);
    SpanBuilder b(f, 5);
    for (std::size_t r = 0; r < 6; ++r) b.add(m.row(r));
    CHECK(b.build() == Subspace::row_space(m));
  }
}

TEST_CASE("quotient projection kills exactly the subspace") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace v = random_subspace(F3, 5, 1 + trial % 5, rng);
    Matrix q = v.quotient_projection();
    CHECK(q.rows() == 5 - v.dim());
    CHECK(null_space(q) == v);
  }
}
