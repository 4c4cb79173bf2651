#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "exactalg/module_algebra.hpp"

namespace exactalg {

// Free modules P |> A for the probes P = H^{(x) k+1}, k = 0..depth-1. Probe 0
// is the regular module, the projective generator. Each probe is written as
// H (x) X_k with X_k = H^{(x) k}; the isomorphism H (x) X ~ H (x) X_trivial
// gives canonical coordinates on every hom space used here.
class KleisliContext {
 public:
  explicit KleisliContext(ModuleAlgebraPtr ma, std::size_t depth = 2);

  const ModuleAlgebraPtr& module_algebra() const noexcept { return ma_; }
  const HopfPtr& hopf() const noexcept { return ma_->hopf(); }
  Field field() const noexcept { return ma_->field(); }
  std::size_t depth() const noexcept { return probes_.size(); }

  const HModule& probe(std::size_t k) const { return probes_.at(k).module; }
  // X_k, so that probe k is H (x) X_k.
  const HModule& cofactor(std::size_t k) const { return probes_.at(k).cofactor; }
  // P_k (x) A with the diagonal action.
  const HModule& free_hmodule(std::size_t k) const { return probes_.at(k).free; }
  std::size_t free_dim(std::size_t k) const { return probe(k).dim() * ma_->dim(); }
  // The epimorphism q onto the unit used by the map S: counit tensor powers.
  Matrix augmentation(std::size_t k) const;

  // Coordinates of Hom_{-A}(P_s |> A, P_t |> A): a linear map X_s -> P_t (x) A.
  std::size_t hom_dim(std::size_t s, std::size_t t) const;
  // H (x) X -> H (x) X_trivial, h (x) x -> h1 (x) S(h2) x.
  const Matrix& untwist(std::size_t k) const { return probes_.at(k).untwist; }
  // Split idempotents exhibiting P_k as dim X_k copies of H.
  const std::vector<Matrix>& inclusions(std::size_t k) const { return probes_.at(k).iota; }
  const std::vector<Matrix>& projections(std::size_t k) const { return probes_.at(k).pi; }
  // The same data for H (x) H, used to compress H |> f for f : H |> A -> H |> A.
  const std::vector<Matrix>& square_inclusions() const noexcept { return square_iota_; }
  const std::vector<Matrix>& square_projections() const noexcept { return square_pi_; }

 private:
  struct Probe {
    HModule module;
    HModule cofactor;
    HModule free;
    Matrix untwist;
    std::vector<Matrix> iota;
    std::vector<Matrix> pi;
  };
  ModuleAlgebraPtr ma_;
  std::vector<Probe> probes_;
  std::vector<Matrix> square_iota_;
  std::vector<Matrix> square_pi_;
};

// Depth used by the suites: two probes unless H (x) H |> A exceeds 64 dimensions.
std::size_t default_probe_depth(const ModuleAlgebra& ma);

struct KleisliHom {
  std::size_t source = 0;
  std::size_t target = 0;
  // (dim P_t (x) A) x (dim P_s (x) A).
  Matrix matrix;
};

// Right A-linearity and H-linearity of a candidate matrix.
bool is_kleisli_hom(const KleisliContext& ctx, std::size_t s, std::size_t t, const Matrix& m);
KleisliHom hom_from_coordinates(const KleisliContext& ctx, std::size_t s, std::size_t t, const Vector& c);
Vector hom_coordinates(const KleisliContext& ctx, const KleisliHom& f);
std::vector<KleisliHom> hom_space(const KleisliContext& ctx, std::size_t s, std::size_t t);
KleisliHom identity_hom(const KleisliContext& ctx, std::size_t p);
// g o f; throws on mismatched probes.
KleisliHom compose(const KleisliHom& g, const KleisliHom& f);

// g : P_s -> P_t (x) A must be H-linear; returns (id (x) mu)(g (x) id_A).
KleisliHom mate_free(const KleisliContext& ctx, const Matrix& g, std::size_t s, std::size_t t);
// f o (id_P (x) eta).
Matrix unit_restrict(const KleisliContext& ctx, const KleisliHom& f);

// Basis of the H-linear maps P_k -> Y, read off X_k -> Y.
std::vector<Matrix> probe_hom_basis(const KleisliContext& ctx, std::size_t k, const HModule& y);
// The H-linear map P_k -> Y with coordinates c (a dim Y x dim X_k matrix).
Matrix probe_map(const KleisliContext& ctx, std::size_t k, const HModule& y, const Matrix& c);

// One subspace of hom coordinates per probe pair (s, t).
struct StableIdeal {
  std::map<std::pair<std::size_t, std::size_t>, Subspace> components;

  const Subspace& at(std::size_t s, std::size_t t) const { return components.at({s, t}); }
  bool contains(const StableIdeal& o) const;
  friend bool operator==(const StableIdeal& a, const StableIdeal& b) { return a.components == b.components; }
};

StableIdeal zero_stable_ideal(const KleisliContext& ctx);
StableIdeal full_stable_ideal(const KleisliContext& ctx);
// Least stable ideal containing gens. Membership at every probe pair is
// decided on End(H |> A) through the split idempotents of the probes, so the
// closure never leaves the probe list.
StableIdeal generate_stable_ideal(const KleisliContext& ctx, const std::vector<KleisliHom>& gens);
// The stable ideal whose End(H |> A) component is the given subspace, which
// must already be closed.
StableIdeal expand_stable_ideal(const KleisliContext& ctx, const Subspace& core);
// Checks the closure properties directly on hom-space bases.
Report check_stable_ideal(const KleisliContext& ctx, const StableIdeal& j);

// Stored by the component at the generator, a subspace of omega(A) = C(H, A)
// read through phi -> phi(1).
struct MixedSubfunctorK {
  Subspace component;
  friend bool operator==(const MixedSubfunctorK& a, const MixedSubfunctorK& b) { return a.component == b.component; }
};

// Values at each probe, as subspaces of the coordinates X_k -> A of C(P_k, A).
std::vector<Subspace> mixed_values(const KleisliContext& ctx, const MixedSubfunctorK& v);
// Conditions (M1)-(M3) on the probe list for a family of values.
Report check_mixed_family(const KleisliContext& ctx, const std::vector<Subspace>& values);

// Values of S(J) at each probe, with q the augmentation of probe q_probe.
std::vector<Subspace> s_values(const KleisliContext& ctx, const StableIdeal& j, std::size_t q_probe = 0);
MixedSubfunctorK S_map(const KleisliContext& ctx, const StableIdeal& j, std::size_t q_probe = 0);
StableIdeal R_map(const KleisliContext& ctx, const MixedSubfunctorK& v);
// The maps f : dual(P_t) (x) P_s -> A with image in v that feed R_map, built
// through the duality adjunction.
std::vector<Matrix> dual_transfer_basis(const KleisliContext& ctx, const MixedSubfunctorK& v, std::size_t s,
                                        std::size_t t);
bool roundtrip_RS(const KleisliContext& ctx, const StableIdeal& j);
bool roundtrip_SR(const KleisliContext& ctx, const MixedSubfunctorK& v);

// Span of g o f, f in i(a, b), g in j(b, c), over every probe b.
StableIdeal stable_ideal_product(const KleisliContext& ctx, const StableIdeal& i, const StableIdeal& j);
// Nilpotency index of a stable ideal under stable_ideal_product (0 if not nilpotent).
std::size_t stable_nilpotency_index(const KleisliContext& ctx, const StableIdeal& j, std::size_t limit = 64);

// Jacobson radical of End(sum of the probes |> A), sliced into components.
// The full endomorphism algebra is used up to the size limits below; beyond
// them the radical of the corner End(H |> A) is expanded through the probe
// idempotents, which gives the same family.
inline constexpr std::size_t kFullRadicalHoms = 96;
inline constexpr std::size_t kFullRadicalSize = 32;
StableIdeal category_radical(const KleisliContext& ctx);
StableIdeal category_radical_full(const KleisliContext& ctx);
StableIdeal category_radical_corner(const KleisliContext& ctx);
// { f : H^{(x) k} |> f in the category radical for all k }.
StableIdeal c_radical_stable_ideal(const KleisliContext& ctx);
Subspace c_module_radical_kleisli(const KleisliContext& ctx);

// Module-object maps and the split criterion for epimorphisms.
bool is_module_object_map(const ModuleObject& m, const ModuleObject& n, const Matrix& f);

// P1 -> P0 -> N -> 0 with both P_i free module objects.
struct Presentation {
  ModuleObject p0;
  Matrix p0_map;
  ModuleObject p1;
  Matrix p1_map;
};

// P0 = (H (x) N) |> A mapping by h (x) v (x) a -> eps(h) v.a, and P1 the same
// cover of its kernel.
Presentation free_presentation(const ModuleObject& n);
// g : M -> N epic. True iff some lift of p0 through g kills p1.
bool split_epi_check(const ModuleObject& m, const ModuleObject& n, const Matrix& g, const Presentation& pres);

}  // namespace exactalg
