#pragma once

#include <string>
#include <vector>

#include "exactalg/module_algebra.hpp"

namespace exactalg {

// A#H on the basis a_i (x) h_j, index i * dim H + j, with
// (a (x) h)(a' (x) h') = sum a (h1 . a') (x) h2 h'.
struct SmashProduct {
  ModuleAlgebraPtr ma;
  AlgebraPtr algebra;

  std::size_t index(std::size_t a, std::size_t h) const { return a * ma->hopf()->dim() + h; }
  // a (x) 1_H and 1_A (x) h as vectors of A#H.
  Vector a_part(const Vector& a) const;
  Vector h_part(const Vector& h) const;
};

SmashProduct smash(const ModuleAlgebraPtr& ma);
// check_algebra plus the defining product on every basis quadruple.
Report check_smash(const SmashProduct& s);

// Right module objects become right A#H-modules through
// m <| (a (x) h) = S^-1(h) . (m . a).
struct TranslatedModule {
  ModuleObject source;
  RightModule module;
};

TranslatedModule translate(const SmashProduct& s, const ModuleObject& m);
ModuleObject untranslate(const SmashProduct& s, const RightModule& t);

// Left A-module in H-mod: lambda(i) is v -> a_i v, with h.(a v) = sum (h1.a)(h2.v).
class LeftModuleObject {
 public:
  LeftModuleObject(ModuleAlgebraPtr ma, HModule hmodule, std::vector<Matrix> lambda);

  const ModuleAlgebraPtr& module_algebra() const noexcept { return ma_; }
  Field field() const noexcept { return ma_->field(); }
  std::size_t dim() const noexcept { return hmodule_.dim(); }
  const HModule& hmodule() const noexcept { return hmodule_; }
  const Matrix& lambda(std::size_t i) const { return lambda_.at(i); }
  const std::vector<Matrix>& lambdas() const noexcept { return lambda_; }

 private:
  ModuleAlgebraPtr ma_;
  HModule hmodule_;
  std::vector<Matrix> lambda_;
};

Report check_left_module_object(const LeftModuleObject& m);
LeftModuleObject left_regular_module_object(const ModuleAlgebraPtr& ma);
// A (x) Q with a (b (x) q) = ab (x) q and the diagonal H-action.
LeftModuleObject left_free_module_object(const ModuleAlgebraPtr& ma, const HModule& q);
// M (x) Q with A acting on M.
LeftModuleObject left_tensor_module_object(const LeftModuleObject& m, const HModule& q);
LeftModuleObject left_quotient_module_object(const LeftModuleObject& m, const Subspace& s);
// Left counterparts of corpus_modules: A, A (x) H, A / I, (A / Rad) (x) H.
std::vector<LeftModuleObject> left_corpus_modules(const ModuleAlgebraPtr& ma, std::uint64_t bound = 1u << 8);

// Matrices of v -> (a (x) h) . v = a (h . v), one per basis element of A#H.
std::vector<Matrix> left_smash_action(const SmashProduct& s, const LeftModuleObject& m);

struct IsomorphismCheck {
  bool relators_killed = false;
  bool linear = false;
  bool bijective = false;
  // dim of the balanced tensor product and of the target.
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  bool ok() const noexcept { return relators_killed && linear && bijective; }
};

// (A#H) (x)_A M -> M (x) H, a (x) h (x) v -> a (h1 v) (x) h2, where M (x) H
// carries (a (x) h)(w (x) k) = a (h1 w) (x) h2 k.
IsomorphismCheck smash_tensor_isomorphism_check(const LeftModuleObject& m);
// Right mirror: M (x)_A (A#H) -> translate(H |> M), v (x) x -> (1 (x) v) <| x.
IsomorphismCheck smash_tensor_isomorphism_check(const ModuleObject& m);

// Projectivity of the underlying A-module.
bool is_c_projective(const ModuleObject& m);
// Projectivity of translate(H |> m) over A#H.
bool is_c_projective_via_smash(const SmashProduct& s, const ModuleObject& m);

struct SkryabinReport {
  // "pass", "fail" or "skipped".
  std::string status;
  // How simplicity was decided, or why the check was skipped.
  std::string gate;
  std::vector<bool> projective;
  // Indices of the non-projective modules.
  std::vector<std::size_t> counterexamples;
};

// When ma has no proper nonzero ideal object, every module in the list must be
// C-projective.
SkryabinReport skryabin_check(const ModuleAlgebraPtr& ma, const std::vector<ModuleObject>& modules,
                              std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace exactalg
