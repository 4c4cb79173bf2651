#include <algorithm>
#include <random>

#include "doctest.h"
#include "exactalg/corpus.hpp"

using namespace exactalg;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F3 = Field::prime(3);

Subspace span_ints(Field f, std::size_t n, const std::vector<std::vector<long long>>& rows) {
  return Subspace::row_space(Matrix::from_ints(f, rows));
}

// k[t]/(c_0 + c_1 t + ... + t^d) with the trivial Hopf algebra.
ModuleAlgebraPtr polynomial_quotient(Field f, const std::vector<long long>& low) {
  const std::size_t d = low.size();
  auto mult_t = [&](Vector v) {
    Vector out = zero_vector(f, d);
    for (std::size_t i = 0; i + 1 < d; ++i) out[i + 1] = v[i];
    for (std::size_t i = 0; i < d; ++i) out[i] -= v[d - 1] * f.from_int(low[i]);
    return out;
  };
  auto a = std::make_shared<const Algebra>(Algebra::from_products(
      f, d,
      [&](std::size_t i, std::size_t j) {
        Vector v = unit_vector(f, d, 0);
        for (std::size_t k = 0; k < i + j; ++k) v = mult_t(v);
        return v;
      },
      unit_vector(f, d, 0)));
  auto h = std::make_shared<const HopfAlgebra>(group_algebra(cyclic_group(1), f));
  return std::make_shared<const ModuleAlgebra>(trivial_action(h, a));
}

std::vector<std::string> f2_corpus() { return {"mu2_char2", "mu2_tensor_char2", "fun_Z2", "group_Z2_modp", "trivialH_localF2"}; }

std::vector<std::string> module_algebra_names() {
  std::vector<std::string> out;
  for (const auto& e : example_registry())
    if (!is_hopf_example(e.name)) out.push_back(e.name);
  return out;
}

}  // namespace

TEST_CASE("corpus module algebras pass their axioms") {
  for (const auto& name : module_algebra_names()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    CHECK(check_module_algebra(*ma).ok());
  }
  CHECK(check_module_algebra(*adjoint_algebra(std::make_shared<const HopfAlgebra>(sweedler4(Q)))).ok());
  CHECK_THROWS_AS(example_module_algebra("nope"), std::out_of_range);
  CHECK_THROWS_AS(example_module_algebra("sweedler4_Q"), std::invalid_argument);
  CHECK(check_hopf(*example_hopf("sweedler4_Q")).ok());
}

TEST_CASE("a misgraded action is rejected") {
  auto good = mu2_algebra(F2);
  ModuleAlgebra bad(good->hopf(), good->algebra(),
                    {Matrix::from_ints(F2, {{0, 0}, {0, 1}}), Matrix::from_ints(F2, {{1, 0}, {0, 0}})});
  CHECK(!check_module_algebra(bad).ok());
}

TEST_CASE("mu2 over F_2") {
  auto ma = mu2_algebra(F2);
  CHECK(!is_ideal_object(*ma, span_ints(F2, 2, {{0, 1}})));
  CHECK(is_ideal_object(*ma, Subspace::zero(F2, 2)));
  CHECK(is_ideal_object(*ma, Subspace::full(F2, 2)));
  CHECK(radical(*ma->algebra()) == span_ints(F2, 2, {{1, 1}}));
  CHECK(largest_stable_subideal(*ma, span_ints(F2, 2, {{1, 1}})).is_zero());
  CHECK(c_module_radical(*ma).is_zero());
  CHECK(is_exact(*ma));
  CHECK(enumerate_ideal_objects(*ma).size() == 2);
  auto dec = decompose_simple_factors(*ma);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0].certified);
  CHECK(is_exact(*mu2_algebra(F3)));
  CHECK(is_exact(*mu2_algebra(Q)));
}

TEST_CASE("tensor square of mu2") {
  auto a2 = mu2_tensor(F2);
  REQUIRE(a2->dim() == 4);
  // Basis 1, v, u, uv.
  Subspace expected = span_ints(F2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  CHECK(radical(*a2->algebra()).dim() == 3);
  CHECK(c_module_radical(*a2) == expected);
  CHECK(brute_force_c_radical(*a2) == expected);
  CHECK(is_ideal_object(*a2, expected));
  CHECK(largest_stable_subideal(*a2, radical(*a2->algebra())) == expected);
  CHECK(!is_exact(*a2));
  CHECK(ideal_object_product(*a2, expected, expected).is_zero());
  CHECK_THROWS_AS(decompose_simple_factors(*a2), std::invalid_argument);
  auto q = semisimple_quotient(*a2);
  CHECK(q.algebra.dim() == 2);
  CHECK(c_module_radical(q.algebra).is_zero());

  auto a3 = mu2_tensor(F3);
  CHECK(is_exact(*a3));
  auto dec = decompose_simple_factors(*a3);
  REQUIRE(dec.factors.size() == 2);
  CHECK(dec.complete);
  // (1 + uv)/2 = 2 + 2uv and (1 - uv)/2 = 2 + uv over F_3.
  std::vector<Vector> idems = {dec.factors[0].idempotent, dec.factors[1].idempotent};
  std::vector<Vector> want = {Matrix::from_ints(F3, {{2, 0, 0, 2}}).row(0), Matrix::from_ints(F3, {{2, 0, 0, 1}}).row(0)};
  CHECK(std::is_permutation(idems.begin(), idems.end(), want.begin()));
  for (const auto& fac : dec.factors) {
    CHECK(fac.factor.dim() == 2);
    CHECK(fac.certified);
    CHECK(fac.certificate == "exhaustive");
    CHECK(check_module_algebra(fac.factor).ok());
    // Isomorphic to mu2: one even and one odd line, the odd generator squares to a unit.
    CHECK(null_space(fac.factor.rho(1)).dim() == 1);
    Subspace odd = image(fac.factor.rho(1));
    Vector w = odd.basis_vector(0);
    Vector sq = fac.factor.algebra()->multiply(w, w);
    CHECK(!is_zero(sq));
    CHECK(Subspace::span(F3, 2, {sq}) == Subspace::span(F3, 2, {fac.factor.algebra()->unit()}));
  }
}

TEST_CASE("translation action on functions") {
  auto ma = example_module_algebra("fun_Z2");
  CHECK(is_exact(*ma));
  CHECK(enumerate_ideal_objects(*ma).size() == 2);
  auto dec = decompose_simple_factors(*ma);
  CHECK(dec.factors.size() == 1);
  auto s3 = example_module_algebra("fun_S3_Q");
  CHECK(is_exact(*s3));
  auto d3 = decompose_simple_factors(*s3);
  REQUIRE(d3.factors.size() == 1);
  CHECK(d3.factors[0].certified);
}

TEST_CASE("non-exact corpus instances") {
  auto g = example_module_algebra("group_Z2_modp");
  CHECK(c_module_radical(*g) == span_ints(F2, 2, {{1, 1}}));
  auto local = example_module_algebra("trivialH_localF2");
  CHECK(c_module_radical(*local) == span_ints(F2, 2, {{0, 1}}));
  auto q = semisimple_quotient(*local);
  CHECK(q.algebra.dim() == 1);
  // Trivial H: the C-module radical is the classical radical.
  auto tri = truncated_trivial(Q, 4);
  CHECK(c_module_radical(*tri) == radical(*tri->algebra()));
}

TEST_CASE("Sweedler's algebra on the dual numbers") {
  auto ma = sweedler_line(Q);
  CHECK(radical(*ma->algebra()).dim() == 1);
  CHECK(is_exact(*ma));
  auto dec = decompose_simple_factors(*ma);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0].certified);
  CHECK(dec.factors[0].certificate == "invariant center is a field");
  CHECK_THROWS_AS(tensor_module_algebras(*ma, *ma), std::invalid_argument);
  auto br = std::make_shared<const HopfAlgebra>(with_rmatrix(*ma->hopf(), sweedler_rmatrix(Q, Q.one())));
  ModuleAlgebra twisted(br, ma->algebra(), ma->rhos());
  ModuleAlgebra sq = tensor_module_algebras(twisted, twisted);
  CHECK(sq.dim() == 4);
  CHECK(check_module_algebra(sq).ok());
  CHECK(!is_commutative(*sq.algebra()));
}

TEST_CASE("tensoring with the unit algebra") {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    if (!is_cocommutative(*ma->hopf())) continue;
    ModuleAlgebra one = unit_module_algebra(ma->hopf());
    ModuleAlgebra t = tensor_module_algebras(*ma, one);
    CHECK(*t.algebra() == *ma->algebra());
    CHECK(t.rhos() == ma->rhos());
  }
}

TEST_CASE("double stability agrees with ideal objects") {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    std::size_t count = 0;
    for_each_subspace(F2, ma->dim(), kDefaultEnumerationBound, [&](const Subspace& s) {
      CHECK(double_stability(*ma, s) == is_ideal_object(*ma, s));
      count += is_ideal_object(*ma, s);
      return true;
    });
    CHECK(count == enumerate_ideal_objects(*ma).size());
  }
  // Random subspaces over F_3 and Q.
  std::mt19937_64 rng(7);
  for (const auto& name : {"mu2_char3", "mu2_tensor_char3", "sweedler_line_Q", "sweedler_line_F3", "fun_S3_Q"}) {
    auto ma = example_module_algebra(name);
    const Field f = ma->field();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vector> gens;
      const std::size_t k = rng() % (ma->dim() + 1);
      for (std::size_t g = 0; g < k; ++g) {
        Vector v = zero_vector(f, ma->dim());
        for (auto& x : v) x = f.from_int(static_cast<long long>(rng() % 3) - 1);
        gens.push_back(v);
      }
      Subspace s = Subspace::span(f, ma->dim(), gens);
      CHECK(double_stability(*ma, s) == is_ideal_object(*ma, s));
      Subspace closed = ideal_object_closure(*ma, s);
      CHECK(double_stability(*ma, closed));
      CHECK(is_ideal_object(*ma, closed));
    }
  }
}

TEST_CASE("radical oracles and the equivalence of exactness conditions") {
  for (const auto& name : f2_corpus()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    Subspace rad = c_module_radical(*ma);
    CHECK(rad == brute_force_c_radical(*ma));
    CHECK(radical(*ma->algebra()) == brute_force_max_nilpotent_ideal(*ma->algebra()));
    bool some_nilpotent = false;
    for (const auto& i : enumerate_ideal_objects(*ma))
      if (is_nilpotent_ideal(*ma->algebra(), i).first) {
        CHECK(rad.contains(i));
        some_nilpotent = some_nilpotent || !i.is_zero();
      }
    CHECK(rad.is_zero() == !some_nilpotent);
    bool decomposes = false;
    try {
      auto dec = decompose_simple_factors(*ma);
      decomposes = true;
      for (const auto& f : dec.factors) decomposes = decomposes && is_ideal_object_simple_exhaustive(f.factor);
    } catch (const std::invalid_argument&) {
    }
    CHECK(rad.is_zero() == decomposes);
    CHECK(c_module_radical(semisimple_quotient(*ma).algebra).is_zero());
  }
}

TEST_CASE("idempotent splitting over various fields") {
  // F_2[t]/(t^2 + t) = F_2 x F_2 and F_2[t]/(t^2 + t + 1) = F_4.
  CHECK(decompose_simple_factors(*polynomial_quotient(F2, {0, 1})).factors.size() == 2);
  auto f4 = decompose_simple_factors(*polynomial_quotient(F2, {1, 1}));
  REQUIRE(f4.factors.size() == 1);
  CHECK(f4.factors[0].certified);
  // t^3 - t over F_3 splits completely.
  CHECK(decompose_simple_factors(*polynomial_quotient(F3, {0, -1, 0})).factors.size() == 3);
  // A large prime forces the randomized root split.
  Field big = Field::prime(1000003);
  auto dec = decompose_simple_factors(*polynomial_quotient(big, {-1, 0}));
  REQUIRE(dec.factors.size() == 2);
  for (const auto& f : dec.factors) CHECK(f.certificate == "invariant center is a field");
  // t^4 - 1 over F_5 has four roots.
  Field f5 = Field::prime(5);
  CHECK(decompose_simple_factors(*polynomial_quotient(f5, {-1, 0, 0, 0})).factors.size() == 4);
  // Over Q: t^2 - 1 splits, t^2 - 2 needs an extension, (t - 3)(t^2 - 2) splits once.
  CHECK(decompose_simple_factors(*polynomial_quotient(Q, {-1, 0})).factors.size() == 2);
  auto sqrt2 = decompose_simple_factors(*polynomial_quotient(Q, {-2, 0}));
  CHECK(!sqrt2.complete);
  REQUIRE(sqrt2.notes.size() == 1);
  CHECK(sqrt2.notes[0].find("field extension needed") != std::string::npos);
  CHECK(!sqrt2.factors[0].certified);
  auto mixed = decompose_simple_factors(*polynomial_quotient(Q, {6, -2, -3}));
  CHECK(mixed.factors.size() == 2);
  CHECK(!mixed.complete);
  CHECK_THROWS_AS(decompose_simple_factors(*polynomial_quotient(Q, {0, 0})), std::invalid_argument);
}

TEST_CASE("products of ideal objects respect the factor decomposition") {
  auto ma = mu2_tensor(F3);
  auto dec = decompose_simple_factors(*ma);
  const Algebra& a = *ma->algebra();
  auto ideals = enumerate_ideal_objects(*ma);
  auto piece = [&](const Subspace& i, const Vector& e) { return image_of(a.right_mult(e), i); };
  for (const auto& i : ideals) {
    Subspace parts = Subspace::zero(F3, 4);
    for (const auto& f : dec.factors) parts = sum(parts, piece(i, f.idempotent));
    CHECK(parts == i);
    for (const auto& j : ideals) {
      Subspace rhs = Subspace::zero(F3, 4);
      for (const auto& f : dec.factors)
        rhs = sum(rhs, ideal_product(a, piece(i, f.idempotent), piece(j, f.idempotent)));
      CHECK(ideal_object_product(*ma, i, j) == rhs);
    }
  }
}

TEST_CASE("module objects") {
  for (const auto& name : module_algebra_names()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    Subspace rad = c_module_radical(*ma);
    auto mods = corpus_modules(ma);
    CHECK(mods.size() >= 2);
    for (const auto& m : mods) {
      CHECK(check_module_object(m).ok());
      CHECK(module_times_ideal_object(m, Subspace::full(ma->field(), ma->dim())).dim() == m.dim());
      CHECK(module_times_ideal_object(m, Subspace::zero(ma->field(), ma->dim())).is_zero());
      // Nakayama for ideal objects.
      CHECK(module_times_ideal_object(m, rad).dim() < m.dim());
      CHECK(is_module_subobject(m, module_times_ideal_object(m, rad)));
    }
    ModuleObject reg = regular_module_object(ma);
    HModule hreg = regular_module(ma->hopf());
    CHECK(act_projective(trivial_module(ma->hopf()), reg).nablas() == reg.nablas());
    CHECK(act_projective(hreg, reg).dim() == hreg.dim() * reg.dim());
  }
}

TEST_CASE("module times ideal objects on F_2 corpora") {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    auto ideals = enumerate_ideal_objects(*ma);
    for (const auto& m : corpus_modules(ma))
      for (const auto& i : ideals) {
        Subspace mi = module_times_ideal_object(m, i);
        Matrix inc = mi.inclusion();
        for (const auto& j : ideals) {
          Subspace left = image_of(inc, module_times_ideal(submodule(m.underlying(), mi), j));
          CHECK(left == module_times_ideal_object(m, ideal_object_product(*ma, i, j)));
        }
      }
    // Modules over a quotient, pulled back, are killed by the ideal.
    for (const auto& i : ideals) {
      if (i.is_full()) continue;
      auto q = quotient_module_algebra(*ma, i);
      auto qa = std::make_shared<const ModuleAlgebra>(q.algebra);
      for (const auto& m : corpus_modules(qa)) {
        ModuleObject back = restrict_along(ma, q.projection, m);
        CHECK(check_module_object(back).ok());
        CHECK(module_times_ideal_object(back, i).is_zero());
      }
    }
  }
}

TEST_CASE("module object hom spaces") {
  auto ma = mu2_tensor(F2);
  ModuleObject reg = regular_module_object(ma);
  // End(A) in mod(A) is the invariant part of A under left multiplication by A.
  CHECK(module_object_hom_space(reg, reg).size() == 2);
  ModuleObject free = free_module_object(ma, regular_module(ma->hopf()));
  CHECK(module_object_hom_space(free, reg).size() == hom_module_space(regular_module(ma->hopf()), ma->hmodule()).size());
}
