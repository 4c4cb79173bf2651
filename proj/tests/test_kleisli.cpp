#include <random>

#include "doctest.h"
#include "exactalg/corpus.hpp"
#include "exactalg/kleisli.hpp"

using namespace exactalg;

namespace {

Field F2 = Field::prime(2);

std::vector<std::string> f2_corpus() { return {"mu2_char2", "mu2_tensor_char2", "fun_Z2", "group_Z2_modp", "trivialH_localF2"}; }

MixedSubfunctorK mixed(const Subspace& s) { return {s}; }

Vector unit_tensor(const KleisliContext& ctx, const Vector& a) {
  const Vector& uh = ctx.hopf()->algebra()->unit();
  Vector out;
  for (const auto& x : uh)
    for (const auto& y : a) out.push_back(x * y);
  return out;
}

// The ideals generated by single End(H |> A) basis maps and by pairs of them.
std::vector<StableIdeal> generated_ideals(const KleisliContext& ctx) {
  auto basis = hom_space(ctx, 0, 0);
  std::vector<StableIdeal> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      auto id = generate_stable_ideal(ctx, {basis[i], basis[j]});
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
    }
  return out;
}

}  // namespace

TEST_CASE("hom spaces have the adjunction dimension and satisfy both linearity identities") {
  auto ma = example_module_algebra("mu2_char2");
  KleisliContext ctx(ma);
  CHECK(ctx.depth() == 2);
  CHECK(ctx.hom_dim(0, 0) == 4);
  CHECK(ctx.hom_dim(0, 0) == ctx.hopf()->dim() * ma->dim());
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      auto homs = hom_space(ctx, s, t);
      CHECK(homs.size() == ctx.hom_dim(s, t));
      // dim C(P_s, P_t (x) A) by the intertwiner solver.
      CHECK(hom_module_space(ctx.probe(s), ctx.free_hmodule(t)).size() == homs.size());
      for (const auto& h : homs) CHECK(is_kleisli_hom(ctx, s, t, h.matrix));
      for (const auto& h : homs) CHECK(hom_coordinates(ctx, h) == hom_coordinates(ctx, hom_from_coordinates(ctx, s, t, hom_coordinates(ctx, h))));
    }
  // Composites stay Kleisli maps.
  auto a = hom_space(ctx, 0, 1), b = hom_space(ctx, 1, 0);
  for (const auto& x : a)
    for (const auto& y : b) CHECK(is_kleisli_hom(ctx, 0, 0, compose(y, x).matrix));
  CHECK_THROWS_AS(compose(a[0], a[0]), std::invalid_argument);
}

TEST_CASE("coordinates 1 (x) 1 give the identity and mates invert unit restriction") {
  for (const auto& name : {"mu2_char3", "sweedler_line_Q", "fun_Z2"}) {
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma);
    auto id = hom_from_coordinates(ctx, 0, 0, unit_tensor(ctx, ma->algebra()->unit()));
    CHECK(id.matrix == identity_hom(ctx, 0).matrix);
    CHECK(hom_coordinates(ctx, identity_hom(ctx, 1)).size() == ctx.hom_dim(1, 1));

    std::mt19937_64 rng(7);
    for (std::size_t s = 0; s < ctx.depth(); ++s)
      for (std::size_t t = 0; t < ctx.depth(); ++t) {
        auto basis = probe_hom_basis(ctx, s, ctx.free_hmodule(t));
        Matrix g(ctx.field(), ctx.free_dim(t), ctx.probe(s).dim());
        for (const auto& b : basis) g += ctx.field().from_int(static_cast<long long>(rng() % 7) - 3) * b;
        CHECK(is_module_map(ctx.probe(s), ctx.free_hmodule(t), g));
        auto f = mate_free(ctx, g, s, t);
        CHECK(is_kleisli_hom(ctx, s, t, f.matrix));
        CHECK(unit_restrict(ctx, f) == g);
        CHECK(mate_free(ctx, unit_restrict(ctx, f), s, t).matrix == f.matrix);
        CHECK(mate_free(ctx, Matrix(ctx.field(), g.rows(), g.cols()), s, t).matrix.is_zero());
      }
  }
  // A non-equivariant map is rejected.
  auto ma = example_module_algebra("mu2_char2");
  KleisliContext ctx(ma);
  Matrix bad(F2, 4, 2);
  bad(2, 0) = F2.one();
  CHECK_THROWS_AS(mate_free(ctx, bad, 0, 0), std::invalid_argument);
}

TEST_CASE("mate of the counit-type map on mu2 by hand") {
  // H = F_2^{Z/2} on e_0, e_1 with unit e_0 + e_1; A = F_2[x]/(x^2 - 1).
  // Coordinates 1 (x) x give g(e_i) = e_i . (1 (x) x) = sum_{ab=i} e_a (x) e_b.x,
  // and e_b . x = delta_{b1} x, so g(e_0) = e_1 (x) x and g(e_1) = e_0 (x) x.
  auto ma = example_module_algebra("mu2_char2");
  KleisliContext ctx(ma);
  auto f = hom_from_coordinates(ctx, 0, 0, unit_tensor(ctx, unit_vector(F2, 2, 1)));
  Matrix g = unit_restrict(ctx, f);
  CHECK(g == Matrix::from_ints(F2, {{0, 0}, {0, 1}, {0, 0}, {1, 0}}));
  // The mate multiplies on the right: e_0 (x) x -> e_1 (x) x.x = e_1 (x) 1.
  CHECK(f.matrix.column(1) == Vector{F2.zero(), F2.zero(), F2.one(), F2.zero()});
}

TEST_CASE("stable ideal generation") {
  auto ma = example_module_algebra("mu2_tensor_char2");
  KleisliContext ctx(ma);
  CHECK(generate_stable_ideal(ctx, {}) == zero_stable_ideal(ctx));
  CHECK(generate_stable_ideal(ctx, {identity_hom(ctx, 0)}) == full_stable_ideal(ctx));
  CHECK(generate_stable_ideal(ctx, {identity_hom(ctx, 1)}) == full_stable_ideal(ctx));

  Subspace rad = c_module_radical(*ma);
  std::vector<KleisliHom> gens;
  for (const auto& r : rad.basis_vectors()) gens.push_back(hom_from_coordinates(ctx, 0, 0, unit_tensor(ctx, r)));
  StableIdeal j = generate_stable_ideal(ctx, gens);
  CHECK(j != zero_stable_ideal(ctx));
  CHECK(j != full_stable_ideal(ctx));
  CHECK(check_stable_ideal(ctx, j).ok());
  CHECK(S_map(ctx, j).component == rad);
  CHECK(j == R_map(ctx, mixed(rad)));

  KleisliHom not_a_map{0, 0, Matrix(F2, 8, 8)};
  not_a_map.matrix(0, 1) = F2.one();
  CHECK_THROWS_AS(generate_stable_ideal(ctx, {not_a_map}), std::invalid_argument);
  CHECK_THROWS_AS(generate_stable_ideal(ctx, {KleisliHom{0, 2, Matrix(F2, 1, 1)}}), std::invalid_argument);
}

TEST_CASE("S and R on the zero and full families, and S does not depend on q") {
  for (const auto& name : f2_corpus()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma);
    CHECK(S_map(ctx, zero_stable_ideal(ctx)).component.is_zero());
    CHECK(S_map(ctx, full_stable_ideal(ctx)).component.is_full());
    CHECK(R_map(ctx, mixed(Subspace::zero(F2, ma->dim()))) == zero_stable_ideal(ctx));
    CHECK(R_map(ctx, mixed(Subspace::full(F2, ma->dim()))) == full_stable_ideal(ctx));
    for (const auto& j : generated_ideals(ctx)) {
      CHECK(check_stable_ideal(ctx, j).ok());
      CHECK(s_values(ctx, j, 0) == s_values(ctx, j, 1));
      CHECK(check_mixed_family(ctx, s_values(ctx, j)).ok());
      CHECK(roundtrip_RS(ctx, j));
    }
  }
}

TEST_CASE("R and S are inverse lattice isomorphisms on every ideal object of the F_2 corpus") {
  for (const auto& name : f2_corpus()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma);
    auto ideals = enumerate_ideal_objects(*ma);
    std::vector<StableIdeal> images;
    for (const auto& i : ideals) {
      CHECK(roundtrip_SR(ctx, mixed(i)));
      images.push_back(R_map(ctx, mixed(i)));
      CHECK(roundtrip_RS(ctx, images.back()));
      CHECK(check_stable_ideal(ctx, images.back()).ok());
      CHECK(check_mixed_family(ctx, mixed_values(ctx, mixed(i))).ok());
      CHECK(mixed_values(ctx, mixed(i)) == s_values(ctx, images.back()));
    }
    for (std::size_t a = 0; a < ideals.size(); ++a)
      for (std::size_t b = 0; b < ideals.size(); ++b) {
        CHECK(ideals[a].contains(ideals[b]) == images[a].contains(images[b]));
        StableIdeal meet, join;
        for (const auto& [k, v] : images[a].components) {
          meet.components.emplace(k, intersect(v, images[b].at(k.first, k.second)));
          join.components.emplace(k, sum(v, images[b].at(k.first, k.second)));
        }
        CHECK(R_map(ctx, mixed(intersect(ideals[a], ideals[b]))) == meet);
        CHECK(R_map(ctx, mixed(sum(ideals[a], ideals[b]))) == join);
      }
  }
}

TEST_CASE("probe conditions single out ideal objects") {
  auto ma = example_module_algebra("mu2_tensor_char2");
  KleisliContext ctx(ma);
  std::size_t mixed_count = 0;
  for_each_subspace(F2, ma->dim(), 1u << 8, [&](const Subspace& s) {
    bool ok = check_mixed_family(ctx, mixed_values(ctx, mixed(s))).ok();
    CHECK(ok == is_ideal_object(*ma, s));
    mixed_count += ok;
    return true;
  });
  CHECK(mixed_count == enumerate_ideal_objects(*ma).size());
}

TEST_CASE("duality transfer produces exactly the maps into the ideal") {
  auto ma = example_module_algebra("mu2_tensor_char2");
  KleisliContext ctx(ma);
  for (const auto& i : enumerate_ideal_objects(*ma))
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t t = 0; t < 2; ++t) {
        Duality du = left_dual(ctx.probe(t));
        HModule src = tensor_module(du.dual, ctx.probe(s));
        auto fs = dual_transfer_basis(ctx, mixed(i), s, t);
        SpanBuilder span(F2, ma->dim() * src.dim());
        for (const auto& f : fs) {
          CHECK(is_module_map(src, ma->hmodule(), f));
          CHECK(i.contains(image(f)));
          span.add(f.data());
        }
        CHECK(span.dim() == fs.size());
        CHECK(fs.size() == hom_module_space(src, restrict_module(ma->hmodule(), i)).size());
      }
}

TEST_CASE("S intertwines products and nilpotency indices correspond") {
  for (const auto& name : f2_corpus()) {
    CAPTURE(name);
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma);
    auto ideals = enumerate_ideal_objects(*ma);
    for (const auto& i : ideals) {
      StableIdeal ri = R_map(ctx, mixed(i));
      for (const auto& j : ideals) {
        StableIdeal rj = R_map(ctx, mixed(j));
        StableIdeal p = stable_ideal_product(ctx, ri, rj);
        CHECK(S_map(ctx, p).component == ideal_object_product(*ma, i, j));
        CHECK(p == R_map(ctx, mixed(ideal_object_product(*ma, i, j))));
      }
      CHECK(stable_nilpotency_index(ctx, ri) == is_nilpotent_ideal(*ma->algebra(), i).second);
    }
    CHECK(stable_ideal_product(ctx, full_stable_ideal(ctx), full_stable_ideal(ctx)) == full_stable_ideal(ctx));
    CHECK(stable_ideal_product(ctx, full_stable_ideal(ctx), zero_stable_ideal(ctx)) == zero_stable_ideal(ctx));
  }
}

TEST_CASE("S intertwines products on a non-commutative algebra") {
  const Field Q = Field::rationals();
  auto line = example_module_algebra("sweedler_line_Q");
  auto br = std::make_shared<const HopfAlgebra>(with_rmatrix(*line->hopf(), sweedler_rmatrix(Q, Q.one())));
  ModuleAlgebra twisted(br, line->algebra(), line->rhos());
  auto ma = std::make_shared<const ModuleAlgebra>(tensor_module_algebras(twisted, twisted));
  REQUIRE(!is_commutative(*ma->algebra()));
  KleisliContext ctx(ma, 1);
  Subspace rad = radical(*ma->algebra());
  Subspace i = largest_stable_subideal(*ma, rad);
  std::vector<Subspace> ideals = {Subspace::zero(ma->field(), 4), i, ideal_object_product(*ma, i, i), Subspace::full(ma->field(), 4)};
  for (const auto& x : ideals)
    for (const auto& y : ideals) {
      StableIdeal p = stable_ideal_product(ctx, R_map(ctx, mixed(x)), R_map(ctx, mixed(y)));
      CHECK(S_map(ctx, p).component == ideal_object_product(*ma, x, y));
    }
}

TEST_CASE("category radical") {
  auto ma = example_module_algebra("mu2_tensor_char2");
  KleisliContext ctx(ma);
  StableIdeal rad = category_radical(ctx);
  CHECK(rad != zero_stable_ideal(ctx));
  CHECK(rad == category_radical_full(ctx));
  CHECK(rad == category_radical_corner(ctx));
  CHECK(check_stable_ideal(ctx, rad).ok());
  CHECK(rad.contains(c_radical_stable_ideal(ctx)));
  CHECK(stable_nilpotency_index(ctx, rad) > 1);

  KleisliContext semisimple(example_module_algebra("mu2_char3"));
  CHECK(category_radical(semisimple) == zero_stable_ideal(semisimple));
  // Sweedler's algebra is not semisimple, but H |> A is a semisimple object here.
  KleisliContext sw(example_module_algebra("sweedler_line_Q"));
  CHECK(category_radical(sw) == zero_stable_ideal(sw));
  CHECK(category_radical_full(sw) == category_radical_corner(sw));
  // Over the local algebra every probe endomorphism ring is local.
  KleisliContext loc(example_module_algebra("trivialH_localF2"), 3);
  CHECK(category_radical_full(loc) == category_radical_corner(loc));
  CHECK(category_radical(loc) == c_radical_stable_ideal(loc));
}

TEST_CASE("both routes to the C-module radical agree on the corpus") {
  for (const auto& e : example_registry()) {
    if (is_hopf_example(e.name)) continue;
    CAPTURE(e.name);
    auto ma = example_module_algebra(e.name);
    KleisliContext ctx(ma, default_probe_depth(*ma));
    CHECK(c_module_radical_kleisli(ctx) == c_module_radical(*ma));
  }
  auto ma = example_module_algebra("mu2_tensor_char2");
  Subspace expected = Subspace::span(F2, 4, {Vector{F2.one(), F2.zero(), F2.zero(), F2.one()}, Vector{F2.zero(), F2.one(), F2.one(), F2.zero()}});
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    KleisliContext ctx(ma, depth);
    CHECK(c_module_radical_kleisli(ctx) == expected);
  }
  KleisliContext ctx(example_module_algebra("trivialH_localF2"));
  CHECK(c_module_radical_kleisli(ctx) == radical(*ctx.module_algebra()->algebra()));
}

TEST_CASE("split epimorphism criterion") {
  // Isomorphisms split.
  auto ma = example_module_algebra("mu2_tensor_char2");
  ModuleObject reg = regular_module_object(ma);
  CHECK(split_epi_check(reg, reg, Matrix::identity(F2, 4), free_presentation(reg)));

  // A -> A / rad over F_2[t]/t^2 with its minimal presentation A --t--> A.
  auto local = example_module_algebra("trivialH_localF2");
  ModuleObject a = regular_module_object(local);
  Subspace rad = radical(*local->algebra());
  ModuleObject top = quotient_module_object(a, rad);
  Matrix proj = rad.quotient_projection();
  Presentation minimal{a, proj, a, local->algebra()->left_basis(1)};
  CHECK_FALSE(split_epi_check(a, top, proj, minimal));
  CHECK_FALSE(split_epi_check(a, top, proj, free_presentation(top)));

  // H |> g for g : M -> L with M a module over A / Rad.
  Subspace crad = c_module_radical(*ma);
  ModuleAlgebraQuotient q = quotient_module_algebra(*ma, crad);
  auto qa = std::make_shared<const ModuleAlgebra>(q.algebra);
  ModuleObject m = restrict_along(ma, q.projection, regular_module_object(qa));
  HModule hreg = regular_module(ma->hopf());
  ModuleObject hm = act_projective(hreg, m);
  for_each_subspace(F2, m.dim(), 1u << 8, [&](const Subspace& s) {
    if (s.is_full() || !is_module_subobject(m, s)) return true;
    ModuleObject l = quotient_module_object(m, s);
    Matrix g = s.quotient_projection();
    ModuleObject hl = act_projective(hreg, l);
    Matrix hg = tensor(Matrix::identity(F2, hreg.dim()), g);
    CHECK(split_epi_check(hm, hl, hg, free_presentation(hl)));
    return true;
  });
  CHECK_THROWS_AS(split_epi_check(reg, reg, Matrix(F2, 4, 4), free_presentation(reg)), std::invalid_argument);
}
