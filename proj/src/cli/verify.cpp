#include "exactalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include "exactalg/corpus.hpp"
#include "exactalg/kleisli.hpp"
#include "exactalg/smash.hpp"

namespace exactalg {

namespace {

using Outcome = std::optional<std::string>;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<Verdict>& out) : suite_(std::move(suite)), out_(out) {}

  void law(const std::string& law, const std::string& instance, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome w;
    try {
      w = body();
    } catch (const std::exception& e) {
      w = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    Verdict v{suite_, law, instance, !w.has_value(), w.value_or(""), std::chrono::duration<double, std::milli>(t1 - t0).count()};
    if (!v.pass && v.witness.empty()) v.witness = "unspecified failure";
    out_.push_back(std::move(v));
  }

 private:
  std::string suite_;
  std::vector<Verdict>& out_;
};

std::string show(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string show(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + show(s.basis_vector(i));
  return out + "}";
}

Outcome first_violation(const Report& r) {
  if (r.ok()) return std::nullopt;
  return r.violations.front();
}

Outcome expect(bool cond, const std::function<std::string()>& witness) {
  if (cond) return std::nullopt;
  return witness();
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

const std::vector<std::string>& f2_corpus() {
  static const std::vector<std::string> names = {"mu2_char2", "mu2_tensor_char2", "fun_Z2", "group_Z2_modp", "trivialH_localF2"};
  return names;
}

std::vector<std::string> module_algebra_names() {
  std::vector<std::string> out;
  for (const auto& e : example_registry())
    if (!is_hopf_example(e.name)) out.push_back(e.name);
  return out;
}

bool desk_scale(const ModuleAlgebra& ma) { return ma.dim() * ma.hopf()->dim() <= 16; }

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

Subspace random_subspace(std::mt19937_64& rng, Field f, std::size_t n) {
  std::vector<Vector> gens;
  const std::size_t k = rng() % (n + 1);
  for (std::size_t g = 0; g < k; ++g) {
    Vector v = zero_vector(f, n);
    for (auto& x : v) x = f.from_int(static_cast<long long>(rng() % 5) - 2);
    gens.push_back(v);
  }
  return Subspace::span(f, n, gens);
}

Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(static_cast<long long>(rng() % 5) - 2);
  return m;
}

// ---------------------------------------------------------------------------

void suite_linear_algebra(Recorder& rec, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (Field f : {Field::prime(3), Field::rationals()}) {
    const std::string inst = "random over " + f.name() + ", seed " + std::to_string(o.seed);
    rec.law("rank plus nullity", inst, [&]() -> Outcome {
      for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, f, 1 + rng() % 5, 1 + rng() % 5);
        if (rank(m) + null_space(m).dim() != m.cols()) return "matrix " + m.to_string();
        RrefResult r = rref(m);
        if (!(rref(r.matrix).matrix == r.matrix)) return "rref not idempotent on " + m.to_string();
      }
      return std::nullopt;
    });
    rec.law("sum and intersection dimensions", inst, [&]() -> Outcome {
      for (int t = 0; t < 30; ++t) {
        Subspace u = random_subspace(rng, f, 4), v = random_subspace(rng, f, 4);
        if (sum(u, v).dim() + intersect(u, v).dim() != u.dim() + v.dim()) return show(u) + " and " + show(v);
        if (!u.contains(intersect(u, v)) || !sum(u, v).contains(v)) return show(u) + " and " + show(v);
      }
      return std::nullopt;
    });
    rec.law("solve finds a preimage", inst, [&]() -> Outcome {
      for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, f, 1 + rng() % 4, 1 + rng() % 4);
        Vector x = zero_vector(f, m.cols());
        for (auto& e : x) e = f.from_int(static_cast<long long>(rng() % 5) - 2);
        auto y = solve(m, m.apply(x));
        if (!y || m.apply(*y) != m.apply(x)) return "matrix " + m.to_string();
      }
      return std::nullopt;
    });
  }
  rec.law("subspace count of F_2^4", "F_2", [&]() -> Outcome {
    const std::size_t n = enumerate_subspaces(Field::prime(2), 4).size();
    return expect(n == 67, [&] { return "got " + std::to_string(n); });
  });
}

void suite_hopf_axioms(Recorder& rec, const VerifyOptions&) {
  const Field F2 = Field::prime(2), F3 = Field::prime(3), Q = Field::rationals();
  const GroupTable s3 = symmetric_group_s3();
  std::vector<std::pair<std::string, HopfPtr>> hs = {
      {"k[C1] over F_2", share(group_algebra(cyclic_group(1), F2))},
      {"k[C2] over F_2", share(group_algebra(cyclic_group(2), F2))},
      {"k[C3] over F_3", share(group_algebra(cyclic_group(3), F3))},
      {"k[S3] over Q", share(group_algebra(s3, Q))},
      {"k[S3] over F_2", share(group_algebra(s3, F2))},
      {"k^C2 over F_2", share(dual_group_algebra(cyclic_group(2), F2))},
      {"k^C3 over Q", share(dual_group_algebra(cyclic_group(3), Q))},
      {"k^S3 over F_3", share(dual_group_algebra(s3, F3))},
      {"sweedler4 over Q", share(sweedler4(Q))},
      {"sweedler4 over F_3", share(sweedler4(F3))},
      {"sweedler4 over Q with R", share(with_rmatrix(sweedler4(Q), sweedler_rmatrix(Q, Q.one())))},
      {"sweedler4 over F_3 with R", share(with_rmatrix(sweedler4(F3), sweedler_rmatrix(F3, F3.from_int(2))))},
  };
  for (const auto& entry : hs) {
    const std::string& name = entry.first;
    const HopfPtr& h = entry.second;
    rec.law("Hopf axioms", name, [&] { return first_violation(check_hopf(*h)); });
    rec.law("zig-zag identities", name, [&]() -> Outcome {
      HModule reg = regular_module(h);
      std::vector<HModule> ms = {reg, trivial_module(h), tensor_module(reg, trivial_module(h))};
      if (h->dim() <= 4) ms.push_back(tensor_module(reg, reg));
      for (const auto& m : ms) {
        Report r = check_left_duality(m, left_dual(m));
        r.merge(check_right_duality(m, right_dual(m)));
        if (!r.ok()) return "module of dim " + std::to_string(m.dim()) + ": " + r.violations.front();
      }
      return std::nullopt;
    });
  }
  rec.law("group algebras are cocommutative", "k[S3] over Q", [&] {
    return expect(is_cocommutative(group_algebra(s3, Q)), [] { return std::string("non-cocommutative"); });
  });
  auto sw = example_hopf("sweedler4_Q");
  rec.law("antipode squared is not the identity", "sweedler4_Q", [&] {
    return expect(!(sw->antipode() * sw->antipode() == Matrix::identity(Q, 4)), [] { return std::string("S^2 = id"); });
  });
  rec.law("not cocommutative", "sweedler4_Q", [&] {
    return expect(!is_cocommutative(*sw), [] { return std::string("reported cocommutative"); });
  });
}

void suite_module_algebra_axioms(Recorder& rec, const VerifyOptions&) {
  for (const auto& name : module_algebra_names()) {
    auto ma = example_module_algebra(name);
    rec.law("module algebra axioms", name, [&] { return first_violation(check_module_algebra(*ma)); });
    rec.law("corpus module objects", name, [&]() -> Outcome {
      auto mods = corpus_modules(ma);
      for (std::size_t i = 0; i < mods.size(); ++i)
        if (auto w = first_violation(check_module_object(mods[i]))) return "module " + std::to_string(i) + ": " + *w;
      auto left = left_corpus_modules(ma);
      for (std::size_t i = 0; i < left.size(); ++i)
        if (auto w = first_violation(check_left_module_object(left[i]))) return "left module " + std::to_string(i) + ": " + *w;
      return std::nullopt;
    });
  }
}

void suite_double_stability(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    rec.law("double stability iff ideal object", name + " (every subspace)", [&]() -> Outcome {
      Outcome w;
      std::size_t count = 0;
      for_each_subspace(ma->field(), ma->dim(), o.enum_bound, [&](const Subspace& s) {
        ++count;
        if (double_stability(*ma, s) != is_ideal_object(*ma, s)) {
          w = show(s);
          return false;
        }
        return true;
      });
      if (w) return w;
      const std::size_t expected = name == "mu2_char2" ? 5 : name == "mu2_tensor_char2" ? 67 : count;
      return expect(count == expected, [&] { return "visited " + std::to_string(count) + " subspaces"; });
    });
  }
  std::mt19937_64 rng(o.seed);
  for (const auto& name : {"mu2_char3", "mu2_tensor_char3", "sweedler_line_Q", "sweedler_line_F3", "fun_S3_Q"}) {
    auto ma = example_module_algebra(name);
    rec.law("double stability iff ideal object", std::string(name) + " (random, seed " + std::to_string(o.seed) + ")", [&]() -> Outcome {
      for (int t = 0; t < 40; ++t) {
        Subspace s = random_subspace(rng, ma->field(), ma->dim());
        if (double_stability(*ma, s) != is_ideal_object(*ma, s)) return show(s);
        Subspace c = ideal_object_closure(*ma, s);
        if (!double_stability(*ma, c)) return "closure of " + show(s);
      }
      return std::nullopt;
    });
  }
}

void suite_golden(Recorder& rec, const VerifyOptions& o) {
  auto a2 = example_module_algebra("mu2_tensor_char2");
  auto a3 = example_module_algebra("mu2_tensor_char3");
  rec.law("not exact in characteristic 2", "mu2_tensor_char2", [&] {
    return expect(!is_exact(*a2), [] { return std::string("reported exact"); });
  });
  rec.law("exact in characteristic 3", "mu2_tensor_char3", [&] {
    return expect(is_exact(*a3), [] { return std::string("reported not exact"); });
  });
  rec.law("two factors of dimension 2", "mu2_tensor_char3", [&]() -> Outcome {
    auto dec = decompose_simple_factors(*a3, o.enum_bound);
    std::string dims;
    bool ok = dec.factors.size() == 2 && dec.complete;
    for (const auto& f : dec.factors) {
      dims += std::to_string(f.factor.dim()) + " ";
      ok = ok && f.factor.dim() == 2 && f.certified && is_ideal_object_simple_exhaustive(f.factor, o.enum_bound);
    }
    return expect(ok, [&] { return "factor dimensions " + dims; });
  });
  rec.law("C-module radical has dimension 2", "mu2_tensor_char2", [&]() -> Outcome {
    Subspace r = c_module_radical(*a2);
    return expect(r.dim() == 2, [&] { return show(r); });
  });
  for (const auto& name : {"mu2_char2", "mu2_char3"}) {
    auto ma = example_module_algebra(name);
    rec.law("mu2 itself is exact", name, [&] { return expect(is_exact(*ma), [] { return std::string("reported not exact"); }); });
  }
}

void suite_exactness_equivalence(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    rec.law("zero radical iff no nilpotent ideal object iff simple factors", name, [&]() -> Outcome {
      const bool zero_rad = c_module_radical(*ma).is_zero();
      bool nilpotent = false;
      for (const auto& i : enumerate_ideal_objects(*ma, o.enum_bound))
        if (!i.is_zero() && is_nilpotent_ideal(*ma->algebra(), i).first) nilpotent = true;
      bool splits = false;
      if (is_exact(*ma)) {
        auto dec = decompose_simple_factors(*ma, o.enum_bound);
        splits = dec.complete;
        for (const auto& f : dec.factors) splits = splits && is_ideal_object_simple_exhaustive(f.factor, o.enum_bound);
      }
      return expect(zero_rad == !nilpotent && zero_rad == splits, [&] {
        return "radical zero " + str(zero_rad) + ", nilpotent ideal object " + str(nilpotent) + ", splits " + str(splits);
      });
    });
  }
}

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

void suite_correspondence(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma, default_probe_depth(*ma));
    auto ideals = enumerate_ideal_objects(*ma, o.enum_bound);
    std::vector<StableIdeal> images;
    for (const auto& i : ideals) images.push_back(R_map(ctx, {i}));
    auto gens = generated_ideals(ctx);
    rec.law("SR = id on ideal objects", name, [&]() -> Outcome {
      for (const auto& i : ideals)
        if (!roundtrip_SR(ctx, {i})) return show(i);
      return std::nullopt;
    });
    rec.law("RS = id on stable ideals", name, [&]() -> Outcome {
      for (std::size_t k = 0; k < images.size(); ++k)
        if (!roundtrip_RS(ctx, images[k])) return "R of " + show(ideals[k]);
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (!roundtrip_RS(ctx, gens[k])) return "generated ideal " + std::to_string(k) + " with core " + show(gens[k].at(0, 0));
      return std::nullopt;
    });
    rec.law("monotone in both directions", name, [&]() -> Outcome {
      for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = 0; b < ideals.size(); ++b)
          if (ideals[a].contains(ideals[b]) != images[a].contains(images[b])) return show(ideals[a]) + " vs " + show(ideals[b]);
      for (const auto& x : gens)
        for (const auto& y : gens)
          if (x.contains(y) && !S_map(ctx, x).component.contains(S_map(ctx, y).component))
            return "S not monotone on cores " + show(x.at(0, 0)) + " and " + show(y.at(0, 0));
      return std::nullopt;
    });
    rec.law("meets and joins are preserved", name, [&]() -> Outcome {
      for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = 0; b < ideals.size(); ++b) {
          StableIdeal meet, join;
          for (const auto& [k, v] : images[a].components) {
            meet.components.emplace(k, intersect(v, images[b].at(k.first, k.second)));
            join.components.emplace(k, sum(v, images[b].at(k.first, k.second)));
          }
          if (!(R_map(ctx, {intersect(ideals[a], ideals[b])}) == meet)) return "meet of " + show(ideals[a]) + ", " + show(ideals[b]);
          if (!(R_map(ctx, {sum(ideals[a], ideals[b])}) == join)) return "join of " + show(ideals[a]) + ", " + show(ideals[b]);
        }
      return std::nullopt;
    });
    rec.law("images are stable ideals and mixed families", name, [&]() -> Outcome {
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        if (auto w = first_violation(check_stable_ideal(ctx, images[k]))) return show(ideals[k]) + ": " + *w;
        if (auto w = first_violation(check_mixed_family(ctx, mixed_values(ctx, {ideals[k]})))) return show(ideals[k]) + ": " + *w;
      }
      return std::nullopt;
    });
  }
}

void suite_products(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    KleisliContext ctx(ma, default_probe_depth(*ma));
    auto ideals = enumerate_ideal_objects(*ma, o.enum_bound);
    rec.law("S(I) S(J) = S(IJ)", name, [&]() -> Outcome {
      for (const auto& i : ideals)
        for (const auto& j : ideals) {
          StableIdeal p = stable_ideal_product(ctx, R_map(ctx, {i}), R_map(ctx, {j}));
          Subspace ij = ideal_object_product(*ma, i, j);
          if (!(S_map(ctx, p).component == ij) || !(p == R_map(ctx, {ij}))) return show(i) + " times " + show(j);
        }
      return std::nullopt;
    });
    rec.law("nilpotency indices correspond", name, [&]() -> Outcome {
      for (const auto& i : ideals) {
        const std::size_t a = stable_nilpotency_index(ctx, R_map(ctx, {i}));
        const std::size_t b = is_nilpotent_ideal(*ma->algebra(), i).second;
        const std::size_t b0 = is_nilpotent_ideal(*ma->algebra(), i).first ? b : 0;
        if (a != b0) return show(i) + ": " + std::to_string(a) + " vs " + std::to_string(b0);
      }
      return std::nullopt;
    });
  }
  rec.law("S(I) S(J) = S(IJ)", "braided square of sweedler_line_Q", [&]() -> Outcome {
    const Field Q = Field::rationals();
    auto line = example_module_algebra("sweedler_line_Q");
    auto br = share(with_rmatrix(*line->hopf(), sweedler_rmatrix(Q, Q.one())));
    ModuleAlgebra twisted(br, line->algebra(), line->rhos());
    auto ma = std::make_shared<const ModuleAlgebra>(tensor_module_algebras(twisted, twisted));
    if (is_commutative(*ma->algebra())) return std::string("expected a non-commutative algebra");
    KleisliContext ctx(ma, 1);
    Subspace i = largest_stable_subideal(*ma, radical(*ma->algebra()));
    std::vector<Subspace> ideals = {Subspace::zero(Q, 4), i, ideal_object_product(*ma, i, i), Subspace::full(Q, 4)};
    for (const auto& x : ideals)
      for (const auto& y : ideals) {
        StableIdeal p = stable_ideal_product(ctx, R_map(ctx, {x}), R_map(ctx, {y}));
        if (!(S_map(ctx, p).component == ideal_object_product(*ma, x, y))) return show(x) + " times " + show(y);
      }
    return std::nullopt;
  });
}

std::vector<std::pair<std::string, Algebra>> small_f2_algebras() {
  const Field F2 = Field::prime(2);
  std::vector<std::pair<std::string, Algebra>> out;
  for (const auto& name : f2_corpus()) out.emplace_back(name, *example_module_algebra(name)->algebra());
  out.emplace_back("F_2[t]/t^3", truncated_polynomial(F2, 3));
  out.emplace_back("F_2[t]/t^4", truncated_polynomial(F2, 4));
  out.emplace_back("F_2[s,t]/(s^2,t^2)", tensor_product(truncated_polynomial(F2, 2), truncated_polynomial(F2, 2)));
  out.emplace_back("M_2(F_2)", matrix_algebra(F2, 2));
  out.emplace_back("F_2[C4]", *group_algebra(cyclic_group(4), F2).algebra());
  out.emplace_back("F_2 x F_2[t]/t^2", direct_product(truncated_polynomial(F2, 1), truncated_polynomial(F2, 2)));
  return out;
}

void suite_radicals(Recorder& rec, const VerifyOptions& o) {
  for (const auto& entry : small_f2_algebras()) {
    const Algebra& a = entry.second;
    rec.law("radical equals the largest nilpotent ideal", entry.first, [&]() -> Outcome {
      Subspace r = radical(a), b = brute_force_max_nilpotent_ideal(a, o.enum_bound);
      return expect(r == b, [&] { return show(r) + " vs " + show(b); });
    });
  }
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    rec.law("C-module radical equals the subspace scan", name, [&]() -> Outcome {
      Subspace r = c_module_radical(*ma), b = brute_force_c_radical(*ma, o.enum_bound);
      return expect(r == b, [&] { return show(r) + " vs " + show(b); });
    });
  }
  for (const auto& name : module_algebra_names()) {
    auto ma = example_module_algebra(name);
    rec.law("radical of the quotient is zero", name, [&]() -> Outcome {
      const Algebra& a = *ma->algebra();
      Subspace r = radical(a);
      Subspace rq = radical(quotient_algebra(a, r).algebra);
      if (!rq.is_zero()) return "algebra quotient radical " + show(rq);
      Subspace cq = c_module_radical(semisimple_quotient(*ma).algebra);
      return expect(cq.is_zero(), [&] { return "C-module quotient radical " + show(cq); });
    });
    rec.law("stable-core and Kleisli radicals agree", name, [&]() -> Outcome {
      KleisliContext ctx(ma, default_probe_depth(*ma));
      Subspace a = c_module_radical(*ma), b = c_module_radical_kleisli(ctx);
      return expect(a == b, [&] { return show(a) + " vs " + show(b); });
    });
  }
}

void suite_module_products(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : module_algebra_names()) {
    auto ma = example_module_algebra(name);
    rec.law("M Rad != M for nonzero modules", name, [&]() -> Outcome {
      Subspace rad = c_module_radical(*ma);
      auto mods = corpus_modules(ma);
      for (std::size_t i = 0; i < mods.size(); ++i)
        if (mods[i].dim() > 0 && module_times_ideal_object(mods[i], rad).dim() == mods[i].dim()) return "module " + std::to_string(i);
      return std::nullopt;
    });
    rec.law("semisimple quotient has zero C-module radical", name, [&]() -> Outcome {
      auto q = semisimple_quotient(*ma);
      Subspace r = c_module_radical(q.algebra);
      return expect(r.is_zero(), [&] { return show(r); });
    });
  }
  for (const auto& name : f2_corpus()) {
    auto ma = example_module_algebra(name);
    auto ideals = enumerate_ideal_objects(*ma, o.enum_bound);
    rec.law("(M I) J = M (I J)", name, [&]() -> Outcome {
      for (const auto& m : corpus_modules(ma))
        for (const auto& i : ideals) {
          Subspace mi = module_times_ideal_object(m, i);
          Matrix inc = mi.inclusion();
          for (const auto& j : ideals) {
            Subspace left = image_of(inc, module_times_ideal(submodule(m.underlying(), mi), j));
            if (!(left == module_times_ideal_object(m, ideal_object_product(*ma, i, j))))
              return "module of dim " + std::to_string(m.dim()) + ", I = " + show(i) + ", J = " + show(j);
          }
        }
      return std::nullopt;
    });
    rec.law("lifts are submultiplicative and keep nilpotency", name, [&]() -> Outcome {
      for (const auto& i : ideals) {
        if (i.is_full() || !is_nilpotent_ideal(*ma->algebra(), i).first) continue;
        auto q = quotient_module_algebra(*ma, i);
        for (const auto& j : enumerate_ideal_objects(q.algebra, o.enum_bound)) {
          Subspace lj = lift_ideal(q.projection, j);
          if (!is_ideal_object(*ma, lj)) return "lift of " + show(j) + " over " + show(i) + " is not an ideal object";
          if (is_nilpotent_ideal(*q.algebra.algebra(), j).first && !is_nilpotent_ideal(*ma->algebra(), lj).first)
            return "lift of nilpotent " + show(j) + " over " + show(i);
          for (const auto& j2 : enumerate_ideal_objects(q.algebra, o.enum_bound)) {
            Subspace lhs = ideal_object_product(*ma, lj, lift_ideal(q.projection, j2));
            if (!lift_ideal(q.projection, ideal_object_product(q.algebra, j, j2)).contains(lhs))
              return "lifts of " + show(j) + " and " + show(j2) + " over " + show(i);
          }
        }
      }
      return std::nullopt;
    });
    Subspace crad = c_module_radical(*ma);
    if (crad.is_zero()) continue;
    rec.law("H |> g splits for g over the semisimple quotient", name, [&]() -> Outcome {
      ModuleAlgebraQuotient q = quotient_module_algebra(*ma, crad);
      auto qa = std::make_shared<const ModuleAlgebra>(q.algebra);
      ModuleObject m = restrict_along(ma, q.projection, regular_module_object(qa));
      HModule hreg = regular_module(ma->hopf());
      ModuleObject hm = act_projective(hreg, m);
      Outcome w;
      std::size_t instances = 0;
      for_each_subspace(ma->field(), m.dim(), o.enum_bound, [&](const Subspace& s) {
        if (s.is_full() || !is_module_subobject(m, s)) return true;
        ModuleObject l = quotient_module_object(m, s);
        ModuleObject hl = act_projective(hreg, l);
        Matrix hg = tensor(Matrix::identity(ma->field(), hreg.dim()), s.quotient_projection());
        ++instances;
        if (!split_epi_check(hm, hl, hg, free_presentation(hl))) {
          w = "kernel " + show(s);
          return false;
        }
        return true;
      });
      if (w) return w;
      return expect(instances > 0, [] { return std::string("no instances"); });
    });
  }
}

void suite_smash(Recorder& rec, const VerifyOptions& o) {
  for (const auto& name : module_algebra_names()) {
    auto ma = example_module_algebra(name);
    SmashProduct s = smash(ma);
    rec.law("smash product axioms", name, [&]() -> Outcome {
      if (s.algebra->dim() != ma->dim() * ma->hopf()->dim()) return std::string("wrong dimension");
      return first_violation(check_smash(s));
    });
    auto mods = corpus_modules(ma);
    rec.law("translate and untranslate are inverse", name, [&]() -> Outcome {
      for (std::size_t i = 0; i < mods.size(); ++i) {
        TranslatedModule t = translate(s, mods[i]);
        if (!same_module_object(untranslate(s, t.module), mods[i])) return "module " + std::to_string(i);
      }
      return std::nullopt;
    });
    if (!desk_scale(*ma)) continue;
    rec.law("(A#H) (x)_A M = M (x) H as A#H-modules", name, [&]() -> Outcome {
      auto left = left_corpus_modules(ma);
      for (std::size_t i = 0; i < left.size(); ++i) {
        IsomorphismCheck c = smash_tensor_isomorphism_check(left[i]);
        if (!c.ok())
          return "left module " + std::to_string(i) + ": relators " + str(c.relators_killed) + ", linear " + str(c.linear) +
                 ", dims " + std::to_string(c.source_dim) + " -> " + std::to_string(c.target_dim);
      }
      for (std::size_t i = 0; i < mods.size(); ++i) {
        IsomorphismCheck c = smash_tensor_isomorphism_check(mods[i]);
        if (!c.ok()) return "right module " + std::to_string(i);
      }
      return std::nullopt;
    });
    rec.law("projectivity agrees with H |> M over A#H", name, [&]() -> Outcome {
      for (std::size_t i = 0; i < mods.size(); ++i)
        if (is_c_projective(mods[i]) != is_c_projective_via_smash(s, mods[i])) return "module " + std::to_string(i);
      return std::nullopt;
    });
  }
  for (const auto& name : {"mu2_char2", "mu2_char3", "fun_Z2"}) {
    auto ma = example_module_algebra(name);
    rec.law("every module over a simple algebra is C-projective", name, [&]() -> Outcome {
      SkryabinReport r = skryabin_check(ma, corpus_modules(ma), o.enum_bound);
      if (r.status != "pass") return r.status + " (" + r.gate + ")";
      return std::nullopt;
    });
  }
}

void suite_documents(Recorder& rec, const VerifyOptions&) {
  auto roundtrip = [](const Json& j) { return Json::parse(j.dump()); };
  for (const auto& e : example_registry()) {
    rec.law("documents re-parse to equal values", e.name, [&]() -> Outcome {
      if (is_hopf_example(e.name)) {
        auto h = example_hopf(e.name);
        return expect(hopf_from_json(roundtrip(to_json(*h))) == *h, [] { return std::string("hopf document"); });
      }
      auto ma = example_module_algebra(e.name);
      if (!same_module_algebra(module_algebra_from_json(roundtrip(to_json(*ma))), *ma)) return std::string("module algebra document");
      if (!(algebra_from_json(roundtrip(to_json(*ma->algebra()))) == *ma->algebra())) return std::string("algebra document");
      if (!(field_from_json(roundtrip(to_json(ma->field()))) == ma->field())) return std::string("field document");
      Subspace r = c_module_radical(*ma);
      if (!(subspace_from_json(roundtrip(to_json(r))) == r)) return "subspace document " + show(r);
      for (const auto& m : corpus_modules(ma))
        if (!same_module_object(module_object_from_json(roundtrip(to_json(m))), m)) return "module object of dim " + std::to_string(m.dim());
      return std::nullopt;
    });
  }
  rec.law("verdicts re-parse to equal values", "sample", [&]() -> Outcome {
    Verdict v{"s", "law", "inst", false, "w", 1.5};
    Verdict back = verdict_from_json(roundtrip(to_json(v)));
    return expect(back.suite == v.suite && back.law == v.law && back.instance == v.instance && back.pass == v.pass &&
                      back.witness == v.witness && back.millis == v.millis,
                  [] { return std::string("verdict fields differ"); });
  });
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

// Sorted by name.
const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {{"correspondence", "ideal objects and stable Kleisli ideals: RS = id, SR = id, monotone, lattice", false}, suite_correspondence},
      {{"documents", "serialization roundtrip of every emitted document kind", false}, suite_documents},
      {{"double_stability", "double stability iff ideal object (exhaustive over F_2, random over F_3 and Q)", true}, suite_double_stability},
      {{"exactness_equivalence", "zero C-radical iff no nilpotent ideal object iff simple factor decomposition", false}, suite_exactness_equivalence},
      {{"golden_mu2_tensor", "tensor square of mu2: exactness, factors and radical in characteristics 2 and 3", false}, suite_golden},
      {{"hopf_axioms", "Hopf axioms, zig-zag identities, Sweedler's antipode and cocommutativity", false}, suite_hopf_axioms},
      {{"linear_algebra", "rank, subspace lattice and solver identities", true}, suite_linear_algebra},
      {{"module_algebra_axioms", "module algebra and module object axioms on the corpus", false}, suite_module_algebra_axioms},
      {{"module_products", "module times ideal objects, lifted ideals, semisimple quotient, split epimorphisms", false}, suite_module_products},
      {{"products", "S preserves products of ideals and nilpotency indices", false}, suite_products},
      {{"radicals", "radical oracles, idempotence and the two C-radical routes", false}, suite_radicals},
      {{"smash", "smash products, translation, the tensor isomorphism and C-projectivity", false}, suite_smash},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : suite_table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_suite(const std::string& name) {
  for (const auto& e : suite_table())
    if (e.info.name == name) return true;
  return false;
}

std::vector<Verdict> run_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& e : suite_table())
    if (e.info.name == name) {
      std::vector<Verdict> out;
      Recorder rec(name, out);
      e.fn(rec, opts);
      return out;
    }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<Verdict> run_verify(const std::string& name, const VerifyOptions& opts) {
  if (name != "all") return run_suite(name, opts);
  std::vector<std::future<std::vector<Verdict>>> jobs;
  std::vector<std::vector<Verdict>> done;
  for (const auto& e : suite_table()) {
    if (opts.parallel)
      jobs.push_back(std::async(std::launch::async, [&e, opts] { return run_suite(e.info.name, opts); }));
    else
      done.push_back(run_suite(e.info.name, opts));
  }
  for (auto& j : jobs) done.push_back(j.get());
  std::vector<Verdict> out;
  for (auto& d : done) out.insert(out.end(), d.begin(), d.end());
  return out;
}

Json to_json(const Verdict& v) {
  Json j = {{"suite", v.suite}, {"law", v.law}, {"instance", v.instance}, {"pass", v.pass}, {"millis", v.millis}};
  if (!v.pass) j["witness"] = v.witness;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.suite = j.at("suite").get<std::string>();
    v.law = j.at("law").get<std::string>();
    v.instance = j.at("instance").get<std::string>();
    v.pass = j.at("pass").get<bool>();
    v.millis = j.at("millis").get<double>();
    if (j.contains("witness")) v.witness = j.at("witness").get<std::string>();
    if (!v.pass && v.witness.empty()) throw DocumentError("failing verdict without a witness");
    return v;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("bad verdict: ") + e.what());
  }
}

bool all_pass(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

}  // namespace exactalg
