#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

#include "kleisli_internal.hpp"

namespace exactalg {

using namespace kl;

namespace {

std::string pair_name(std::size_t s, std::size_t t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

// (pi_k (x) A) f (iota_l (x) A) for every k, l, read as End(H |> A) coordinates.
void compress_into(const KleisliContext& ctx, std::size_t s, std::size_t t, const Matrix& f,
                   const std::function<void(const Vector&)>& out) {
  const std::size_t da = ctx.module_algebra()->dim();
  const Vector w = unit_input(ctx, 0, 0);
  for (const auto& in : ctx.inclusions(s)) {
    Vector v = f.apply(kron_apply(in, w, da));
    for (const auto& pr : ctx.projections(t)) out(kron_apply(pr, v, da));
  }
}

// Compressions of H |> f for f in End(H |> A).
void compress_regular_action(const KleisliContext& ctx, const Matrix& f, const std::function<void(const Vector&)>& out) {
  const std::size_t da = ctx.module_algebra()->dim();
  const Vector w = unit_input(ctx, 0, 0);
  for (const auto& in : ctx.square_inclusions()) {
    Vector v = block_apply(f, kron_apply(in, w, da));
    for (const auto& pr : ctx.square_projections()) out(kron_apply(pr, v, da));
  }
}

std::vector<Matrix> end_basis(const KleisliContext& ctx) {
  std::vector<Matrix> out;
  for (auto& h : hom_space(ctx, 0, 0)) out.push_back(std::move(h.matrix));
  return out;
}

Subspace close_core(const KleisliContext& ctx, SpanBuilder core, std::deque<Vector> queue) {
  const auto basis = end_basis(ctx);
  auto push = [&](const Vector& v) {
    if (core.add(v)) queue.push_back(v);
  };
  while (!queue.empty()) {
    Vector c = std::move(queue.front());
    queue.pop_front();
    Matrix f = hom_from_coordinates(ctx, 0, 0, c).matrix;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      push(basis[i].apply(c));
      push(f.column(i));
    }
    compress_regular_action(ctx, f, push);
  }
  return core.build();
}

void require_shape(const KleisliContext& ctx, const StableIdeal& j) {
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (std::size_t t = 0; t < ctx.depth(); ++t) {
      auto it = j.components.find({s, t});
      if (it == j.components.end() || it->second.ambient() != ctx.hom_dim(s, t))
        throw std::invalid_argument("stable ideal does not match the probe list at " + pair_name(s, t));
    }
}

// Radical of End(H |> A) alone; the probes are sums of copies of H.
Subspace corner_radical(const KleisliContext& ctx) {
  return matrix_algebra_radical(ctx.field(), end_basis(ctx));
}

void require_nilpotent_core(const KleisliContext& ctx, const Subspace& core) {
  const std::size_t m = ctx.hom_dim(0, 0);
  Subspace power = core;
  for (std::size_t k = 0; k <= m && !power.is_zero(); ++k) {
    SpanBuilder next(ctx.field(), m);
    for (const auto& g : power.basis_vectors()) {
      Matrix gm = hom_from_coordinates(ctx, 0, 0, g).matrix;
      for (const auto& f : core.basis_vectors()) next.add(gm.apply(f));
    }
    power = next.build();
  }
  if (!power.is_zero()) throw VerificationError("category radical is not nilpotent on End(H |> A)");
}

}  // namespace

bool StableIdeal::contains(const StableIdeal& o) const {
  for (const auto& [k, v] : o.components) {
    auto it = components.find(k);
    if (it == components.end() || !it->second.contains(v)) return false;
  }
  return true;
}

StableIdeal zero_stable_ideal(const KleisliContext& ctx) {
  StableIdeal j;
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (std::size_t t = 0; t < ctx.depth(); ++t) j.components.emplace(std::make_pair(s, t), Subspace::zero(ctx.field(), ctx.hom_dim(s, t)));
  return j;
}

StableIdeal full_stable_ideal(const KleisliContext& ctx) {
  StableIdeal j;
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (std::size_t t = 0; t < ctx.depth(); ++t) j.components.emplace(std::make_pair(s, t), Subspace::full(ctx.field(), ctx.hom_dim(s, t)));
  return j;
}

StableIdeal generate_stable_ideal(const KleisliContext& ctx, const std::vector<KleisliHom>& gens) {
  SpanBuilder core(ctx.field(), ctx.hom_dim(0, 0));
  std::deque<Vector> queue;
  for (const auto& g : gens) {
    if (g.source >= ctx.depth() || g.target >= ctx.depth())
      throw std::invalid_argument("generator between probes " + pair_name(g.source, g.target) + " outside the probe list");
    if (!is_kleisli_hom(ctx, g.source, g.target, g.matrix))
      throw std::invalid_argument("generator at " + pair_name(g.source, g.target) + " is not a Kleisli morphism");
    compress_into(ctx, g.source, g.target, g.matrix, [&](const Vector& v) {
      if (core.add(v)) queue.push_back(v);
    });
  }
  return expand_stable_ideal(ctx, close_core(ctx, std::move(core), std::move(queue)));
}

StableIdeal expand_stable_ideal(const KleisliContext& ctx, const Subspace& core) {
  if (core.ambient() != ctx.hom_dim(0, 0)) throw std::invalid_argument("expand_stable_ideal: core has the wrong ambient");
  const std::size_t da = ctx.module_algebra()->dim();
  std::vector<Matrix> cores;
  for (const auto& g : core.basis_vectors()) cores.push_back(hom_from_coordinates(ctx, 0, 0, g).matrix);
  StableIdeal j;
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (std::size_t t = 0; t < ctx.depth(); ++t) {
      SpanBuilder comp(ctx.field(), ctx.hom_dim(s, t));
      const std::size_t dx = ctx.cofactor(s).dim();
      for (const auto& g : cores)
        for (const auto& pr : ctx.projections(s))
          for (const auto& in : ctx.inclusions(t)) {
            if (comp.dim() == ctx.hom_dim(s, t)) break;
            Matrix c(ctx.field(), ctx.free_dim(t), dx);
            for (std::size_t x = 0; x < dx; ++x)
              c.set_column(x, kron_apply(in, g.apply(kron_apply(pr, unit_input(ctx, s, x), da)), da));
            comp.add(flatten(c));
          }
      j.components.emplace(std::make_pair(s, t), comp.build());
    }
  return j;
}

Report check_stable_ideal(const KleisliContext& ctx, const StableIdeal& j) {
  require_shape(ctx, j);
  Report r;
  const std::size_t d = ctx.depth();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<KleisliHom>> homs;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) homs[{s, t}] = hom_space(ctx, s, t);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      for (const auto& c : j.at(s, t).basis_vectors()) {
        Matrix f = hom_from_coordinates(ctx, s, t, c).matrix;
        for (std::size_t x = 0; x < d; ++x) {
          for (std::size_t i = 0; i < ctx.hom_dim(x, s); ++i)
            if (!j.at(x, t).contains(compose_coordinates(ctx, f, x, s, unit_vector(ctx.field(), ctx.hom_dim(x, s), i)))) {
              r.fail("not closed under precomposition at " + pair_name(x, t));
              break;
            }
          for (const auto& psi : homs[{t, x}])
            if (!j.at(s, x).contains(compose_coordinates(ctx, psi.matrix, s, t, c))) {
              r.fail("not closed under postcomposition at " + pair_name(s, x));
              break;
            }
        }
        if (s + 1 < d && t + 1 < d) {
          Matrix hf = tensor(Matrix::identity(ctx.field(), ctx.hopf()->dim()), f);
          if (!j.at(s + 1, t + 1).contains(coordinates_of(ctx, s + 1, hf)))
            r.fail("not closed under H |> - at " + pair_name(s, t));
        }
      }
  return r;
}

std::vector<Subspace> mixed_values(const KleisliContext& ctx, const MixedSubfunctorK& v) {
  const std::size_t da = ctx.module_algebra()->dim();
  if (v.component.ambient() != da) throw std::invalid_argument("mixed subfunctor component has the wrong ambient");
  std::vector<Subspace> out;
  for (std::size_t k = 0; k < ctx.depth(); ++k) {
    const std::size_t dx = ctx.cofactor(k).dim();
    SpanBuilder b(ctx.field(), da * dx);
    for (const auto& x : v.component.basis_vectors())
      for (std::size_t j = 0; j < dx; ++j) {
        Vector c = zero_vector(ctx.field(), da * dx);
        for (std::size_t a = 0; a < da; ++a) c[a * dx + j] = x[a];
        b.add(c);
      }
    out.push_back(b.build());
  }
  return out;
}

Report check_mixed_family(const KleisliContext& ctx, const std::vector<Subspace>& values) {
  const ModuleAlgebra& ma = *ctx.module_algebra();
  const Algebra& a = *ma.algebra();
  const Field f = ctx.field();
  const std::size_t da = a.dim(), d = ctx.depth();
  if (values.size() != d) throw std::invalid_argument("check_mixed_family: one value per probe expected");
  Report r;
  for (std::size_t p = 0; p < d; ++p) {
    const std::size_t dp = ctx.probe(p).dim();
    for (const auto& gc : values[p].basis_vectors()) {
      Matrix phi = probe_map(ctx, p, ma.hmodule(), Matrix::from_flat(f, da, ctx.cofactor(p).dim(), gc));
      // phi^A = mu (phi (x) A) and ^A phi = mu (A (x) phi).
      Matrix right_mate(f, da, dp * da), left_mate(f, da, da * dp);
      for (std::size_t q = 0; q < dp; ++q)
        for (std::size_t x = 0; x < da; ++x)
          for (std::size_t y = 0; y < da; ++y) {
            const Scalar& c = phi(y, q);
            if (c.is_zero()) continue;
            for (std::size_t z = 0; z < da; ++z) {
              if (!a.constant(y, x, z).is_zero()) right_mate(z, q * da + x) += c * a.constant(y, x, z);
              if (!a.constant(x, y, z).is_zero()) left_mate(z, x * dp + q) += c * a.constant(x, y, z);
            }
          }
      for (std::size_t s = 0; s < d; ++s) {
        const std::size_t dx = ctx.cofactor(s).dim();
        auto check = [&](const Matrix& coords, const char* what) {
          if (!values[s].contains(flatten(coords)))
            r.fail(std::string(what) + " fails from probe " + std::to_string(p) + " to probe " + std::to_string(s));
        };
        // (M1): phi o f for f : P_s -> P_p, coordinates X_s -> P_p.
        for (std::size_t i = 0; i < dp * dx; ++i) {
          Matrix c(f, dp, dx);
          c(i / dx, i % dx) = f.one();
          check(phi * c, "(M1)");
        }
        // (M2): (phi^A o f)^1 for f in Hom_{-A}(P_s |> A, P_p |> A).
        for (std::size_t i = 0; i < ctx.hom_dim(s, p); ++i)
          check(right_mate * coordinate_matrix(ctx, s, p, unit_vector(f, ctx.hom_dim(s, p), i)), "(M2)");
        // (M3): ^1(^A phi o f) for f the left mate of h : P_s -> A (x) P_p.
        for (std::size_t i = 0; i < da * dp * dx; ++i) {
          Matrix c(f, da * dp, dx);
          c(i / dx, i % dx) = f.one();
          check(left_mate * c, "(M3)");
        }
      }
    }
  }
  return r;
}

std::vector<Subspace> s_values(const KleisliContext& ctx, const StableIdeal& j, std::size_t q_probe) {
  require_shape(ctx, j);
  if (q_probe >= ctx.depth()) throw std::invalid_argument("S_map: probe for q outside the probe list");
  const std::size_t da = ctx.module_algebra()->dim();
  const Matrix q = ctx.augmentation(q_probe);
  std::vector<Subspace> out;
  for (std::size_t p = 0; p < ctx.depth(); ++p) {
    const std::size_t dx = ctx.cofactor(p).dim();
    SpanBuilder b(ctx.field(), da * dx);
    for (const auto& g : j.at(p, q_probe).basis_vectors()) {
      Matrix c = coordinate_matrix(ctx, p, q_probe, g);
      Matrix v(ctx.field(), da, dx);
      for (std::size_t x = 0; x < dx; ++x) v.set_column(x, kron_apply(q, c.column(x), da));
      b.add(flatten(v));
    }
    out.push_back(b.build());
  }
  return out;
}

MixedSubfunctorK S_map(const KleisliContext& ctx, const StableIdeal& j, std::size_t q_probe) {
  return {s_values(ctx, j, q_probe).front()};
}

std::vector<Matrix> dual_transfer_basis(const KleisliContext& ctx, const MixedSubfunctorK& v, std::size_t s,
                                        std::size_t t) {
  const Field f = ctx.field();
  const std::size_t da = ctx.module_algebra()->dim(), dq = ctx.probe(t).dim(), dp = ctx.probe(s).dim();
  const std::size_t dx = ctx.cofactor(s).dim();
  if (v.component.ambient() != da) throw std::invalid_argument("mixed subfunctor component has the wrong ambient");
  Duality du = left_dual(ctx.probe(t));
  std::vector<Matrix> out;
  for (std::size_t q = 0; q < dq; ++q)
    for (const auto& y : v.component.basis_vectors())
      for (std::size_t x = 0; x < dx; ++x) {
        // u : P_s -> Q (x) v, then f = (ev (x) A)(dual (x) u).
        Matrix c(f, dq * da, dx);
        for (std::size_t a = 0; a < da; ++a) c(q * da + a, x) = y[a];
        Matrix u = probe_map(ctx, s, ctx.free_hmodule(t), c);
        Matrix fm(f, da, dq * dp);
        for (std::size_t b = 0; b < dq; ++b)
          for (std::size_t cc = 0; cc < dq; ++cc) {
            const Scalar& e = du.ev(0, b * dq + cc);
            if (e.is_zero()) continue;
            for (std::size_t a = 0; a < da; ++a)
              for (std::size_t j = 0; j < dp; ++j)
                if (!u(cc * da + a, j).is_zero()) fm(a, b * dp + j) += e * u(cc * da + a, j);
          }
        out.push_back(std::move(fm));
      }
  return out;
}

StableIdeal R_map(const KleisliContext& ctx, const MixedSubfunctorK& v) {
  const Field f = ctx.field();
  const std::size_t da = ctx.module_algebra()->dim();
  StableIdeal out;
  for (std::size_t s = 0; s < ctx.depth(); ++s)
    for (std::size_t t = 0; t < ctx.depth(); ++t) {
      const std::size_t dq = ctx.probe(t).dim(), dp = ctx.probe(s).dim();
      Duality du = left_dual(ctx.probe(t));
      SpanBuilder comp(f, ctx.hom_dim(s, t));
      for (const auto& fm : dual_transfer_basis(ctx, v, s, t)) {
        // (Q (x) f)(coev_Q (x) P).
        Matrix g(f, dq * da, dp);
        for (std::size_t i = 0; i < dq; ++i)
          for (std::size_t c = 0; c < dq; ++c) {
            const Scalar& e = du.coev(i * dq + c, 0);
            if (e.is_zero()) continue;
            for (std::size_t a = 0; a < da; ++a)
              for (std::size_t j = 0; j < dp; ++j)
                if (!fm(a, c * dp + j).is_zero()) g(i * da + a, j) += e * fm(a, c * dp + j);
          }
        comp.add(hom_coordinates(ctx, mate_free(ctx, g, s, t)));
      }
      out.components.emplace(std::make_pair(s, t), comp.build());
    }
  return out;
}

bool roundtrip_RS(const KleisliContext& ctx, const StableIdeal& j) { return R_map(ctx, S_map(ctx, j)) == j; }
bool roundtrip_SR(const KleisliContext& ctx, const MixedSubfunctorK& v) { return S_map(ctx, R_map(ctx, v)) == v; }

StableIdeal stable_ideal_product(const KleisliContext& ctx, const StableIdeal& i, const StableIdeal& j) {
  require_shape(ctx, i);
  require_shape(ctx, j);
  const std::size_t d = ctx.depth();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix>> jm;
  for (const auto& [k, sub] : j.components)
    for (const auto& g : sub.basis_vectors()) jm[k].push_back(hom_from_coordinates(ctx, k.first, k.second, g).matrix);
  StableIdeal out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c) {
      SpanBuilder comp(ctx.field(), ctx.hom_dim(a, c));
      for (std::size_t b = 0; b < d && comp.dim() < ctx.hom_dim(a, c); ++b)
        for (const auto& g : jm[{b, c}])
          for (const auto& fc : i.at(a, b).basis_vectors()) comp.add(compose_coordinates(ctx, g, a, b, fc));
      out.components.emplace(std::make_pair(a, c), comp.build());
    }
  return out;
}

std::size_t stable_nilpotency_index(const KleisliContext& ctx, const StableIdeal& j, std::size_t limit) {
  StableIdeal power = j;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (power == zero_stable_ideal(ctx)) return k;
    StableIdeal next = stable_ideal_product(ctx, power, j);
    if (next == power) return 0;
    power = std::move(next);
  }
  return 0;
}

StableIdeal category_radical_full(const KleisliContext& ctx) {
  const std::size_t d = ctx.depth();
  std::vector<std::size_t> offset(d + 1, 0);
  for (std::size_t k = 0; k < d; ++k) offset[k + 1] = offset[k] + ctx.free_dim(k);
  std::vector<Matrix> basis;
  std::vector<std::pair<std::size_t, std::size_t>> owner;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      for (const auto& h : hom_space(ctx, s, t)) {
        Matrix big(ctx.field(), offset[d], offset[d]);
        for (std::size_t r = 0; r < h.matrix.rows(); ++r)
          for (std::size_t c = 0; c < h.matrix.cols(); ++c) big(offset[t] + r, offset[s] + c) = h.matrix(r, c);
        basis.push_back(std::move(big));
        owner.emplace_back(s, t);
      }
  Subspace rad = matrix_algebra_radical(ctx.field(), basis);
  std::map<std::pair<std::size_t, std::size_t>, SpanBuilder> comps;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) comps.emplace(std::make_pair(s, t), SpanBuilder(ctx.field(), ctx.hom_dim(s, t)));
  for (const auto& v : rad.basis_vectors()) {
    std::map<std::pair<std::size_t, std::size_t>, Vector> slices;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        Vector slice(v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + ctx.hom_dim(s, t)));
        pos += ctx.hom_dim(s, t);
        comps.at({s, t}).add(slice);
      }
  }
  StableIdeal out;
  for (auto& [k, b] : comps) out.components.emplace(k, b.build());
  require_nilpotent_core(ctx, out.at(0, 0));
  return out;
}

StableIdeal category_radical_corner(const KleisliContext& ctx) {
  Subspace core = corner_radical(ctx);
  require_nilpotent_core(ctx, core);
  return expand_stable_ideal(ctx, core);
}

StableIdeal category_radical(const KleisliContext& ctx) {
  std::size_t homs = 0, total = 0;
  for (std::size_t s = 0; s < ctx.depth(); ++s) {
    total += ctx.free_dim(s);
    for (std::size_t t = 0; t < ctx.depth(); ++t) homs += ctx.hom_dim(s, t);
  }
  if (homs <= kFullRadicalHoms && total <= kFullRadicalSize) return category_radical_full(ctx);
  return category_radical_corner(ctx);
}

StableIdeal c_radical_stable_ideal(const KleisliContext& ctx) {
  const std::size_t m = ctx.hom_dim(0, 0);
  Subspace w = category_radical(ctx).at(0, 0);
  const std::size_t n = ctx.hopf()->dim();
  std::vector<Matrix> maps(n * n, Matrix(ctx.field(), m, m));
  const auto basis = end_basis(ctx);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t idx = 0;
    compress_regular_action(ctx, basis[e], [&](const Vector& v) { maps[idx++].set_column(e, v); });
  }
  return expand_stable_ideal(ctx, largest_invariant_subspace(maps, w));
}

Subspace c_module_radical_kleisli(const KleisliContext& ctx) {
  Subspace s = S_map(ctx, c_radical_stable_ideal(ctx)).component;
  if (!is_ideal_object(*ctx.module_algebra(), s))
    throw VerificationError("Kleisli-side C-module radical is not an ideal object");
  return s;
}

}  // namespace exactalg
