#include "exactalg/commands.hpp"

#include <chrono>
#include <functional>

#include "exactalg/corpus.hpp"
#include "exactalg/kleisli.hpp"
#include "exactalg/smash.hpp"

namespace exactalg {

namespace {

std::string dims(const Subspace& s) { return std::to_string(s.dim()) + " of " + std::to_string(s.ambient()); }

void require_ok(const Report& r, const std::string& what) {
  if (!r.ok()) throw DocumentError(what + " fails its axioms: " + r.violations.front());
}

Algebra load_algebra(const Json& doc) {
  const std::string kind = document_kind(doc);
  if (kind == "module_algebra" || kind == "module_object") return *load_module_algebra(doc)->algebra();
  Algebra a = kind == "hopf" ? *hopf_from_json(doc).algebra() : algebra_from_json(doc);
  require_ok(check_algebra(a), "algebra");
  return a;
}

std::size_t depth_for(const ModuleAlgebra& ma, const CommandOptions& opts) {
  return opts.probes ? opts.probes : default_probe_depth(ma);
}

// One verdict per law, timed.
Verdict verdict(const std::string& law, const std::string& instance, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string w;
  try {
    w = body();
  } catch (const VerificationError& e) {
    w = std::string("verification error: ") + e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  return {"correspondence", law, instance, w.empty(), w, std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

Json verdict_array(const std::vector<Verdict>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::string verdict_summary(const std::vector<Verdict>& vs) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& v : vs) {
    out += (v.pass ? "PASS " : "FAIL ") + v.suite + ": " + v.law + " [" + v.instance + "]";
    if (!v.pass) {
      out += " -- " + v.witness;
      ++failed;
    }
    out += "\n";
  }
  out += std::to_string(vs.size() - failed) + " passed, " + std::to_string(failed) + " failed";
  return out;
}

}  // namespace

ModuleAlgebraPtr load_module_algebra(const Json& doc) {
  const std::string kind = document_kind(doc);
  const Json* body = &doc;
  if (kind == "module_object") {
    if (!doc.contains("module_algebra")) throw DocumentError("module object without a module algebra");
    body = &doc.at("module_algebra");
  } else if (kind != "module_algebra") {
    throw DocumentError("expected a module_algebra document, got " + kind);
  }
  auto ma = std::make_shared<const ModuleAlgebra>(module_algebra_from_json(*body));
  require_ok(check_hopf(*ma->hopf()), "Hopf algebra");
  require_ok(check_module_algebra(*ma), "module algebra");
  return ma;
}

CommandResult cmd_example(const std::string& name, const CommandOptions& opts) {
  CommandResult r;
  Report rep;
  if (is_hopf_example(name)) {
    HopfPtr h = opts.field ? example_hopf_over(name, *opts.field) : example_hopf(name);
    rep = check_hopf(*h);
    r.document = to_json(*h);
    r.summary = name + ": Hopf algebra of dimension " + std::to_string(h->dim()) + " over " + h->field().name();
  } else {
    ModuleAlgebraPtr ma = opts.field ? example_module_algebra_over(name, *opts.field) : example_module_algebra(name);
    rep = check_hopf(*ma->hopf());
    rep.merge(check_module_algebra(*ma));
    r.document = to_json(*ma);
    r.summary = name + ": module algebra of dimension " + std::to_string(ma->dim()) + " over a Hopf algebra of dimension " +
                std::to_string(ma->hopf()->dim()) + ", field " + ma->field().name();
  }
  if (!rep.ok()) {
    r.exit_code = kExitFailure;
    r.summary += "\naxiom failure: " + rep.violations.front();
  }
  return r;
}

CommandResult cmd_list_examples() {
  CommandResult r;
  Json list = Json::array();
  for (const auto& e : example_registry()) {
    list.push_back({{"name", e.name}, {"description", e.description}});
    r.summary += e.name + "  " + e.description + "\n";
  }
  r.document = report_document("example", {{"examples", list}});
  if (!r.summary.empty()) r.summary.pop_back();
  return r;
}

CommandResult cmd_check(const Json& doc) {
  const std::string kind = document_kind(doc);
  Report rep;
  if (kind == "algebra") {
    rep = check_algebra(algebra_from_json(doc));
  } else if (kind == "hopf") {
    rep = check_hopf(hopf_from_json(doc));
  } else if (kind == "module_algebra") {
    ModuleAlgebra ma = module_algebra_from_json(doc);
    rep = check_hopf(*ma.hopf());
    rep.merge(check_module_algebra(ma));
  } else if (kind == "module_object") {
    ModuleObject m = module_object_from_json(doc);
    rep = check_hopf(*m.module_algebra()->hopf());
    rep.merge(check_module_algebra(*m.module_algebra()));
    rep.merge(check_module_object(m));
  } else if (kind == "subspace") {
    subspace_from_json(doc);
  } else if (kind == "field") {
    field_from_json(doc);
  } else if (kind == "report") {
    if (!doc.contains("result")) throw DocumentError("report without a result");
  } else {
    throw DocumentError("unknown document kind " + kind);
  }
  CommandResult r;
  r.document = report_document("check", {{"kind", kind}, {"ok", rep.ok()}, {"violations", rep.violations}});
  r.summary = kind + ": " + (rep.ok() ? "all axioms hold" : std::to_string(rep.violations.size()) + " violations, first: " + rep.violations.front());
  r.exit_code = rep.ok() ? kExitOk : kExitFailure;
  return r;
}

CommandResult cmd_radical(const Json& doc) {
  Algebra a = load_algebra(doc);
  Subspace rad = radical(a);
  CommandResult r;
  r.document = to_json(rad);
  r.summary = "Jacobson radical: dimension " + dims(rad);
  return r;
}

CommandResult cmd_c_radical(const Json& doc, const CommandOptions& opts) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  Subspace rad = c_module_radical(*ma);
  KleisliContext ctx(ma, depth_for(*ma, opts));
  Subspace kl = c_module_radical_kleisli(ctx);
  CommandResult r;
  r.document = to_json(rad);
  r.summary = "C-module radical: dimension " + dims(rad);
  if (kl == rad) {
    r.summary += "; Kleisli route with " + std::to_string(ctx.depth()) + " probes agrees";
  } else {
    r.summary += "; Kleisli route disagrees (dimension " + std::to_string(kl.dim()) + ")";
    r.exit_code = kExitFailure;
  }
  return r;
}

CommandResult cmd_exact(const Json& doc) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  Subspace rad = c_module_radical(*ma);
  const bool exact = rad.is_zero();
  CommandResult r;
  r.document = report_document("exact", {{"exact", exact}, {"c_radical", to_json(rad)}});
  r.summary = exact ? "exact: the C-module radical is zero" : "not exact: the C-module radical has dimension " + dims(rad);
  return r;
}

CommandResult cmd_decompose(const Json& doc, const CommandOptions& opts) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  Decomposition dec = decompose_simple_factors(*ma, opts.enum_bound);
  Json factors = Json::array();
  CommandResult r;
  r.summary = std::to_string(dec.factors.size()) + " simple factor(s)";
  for (const auto& f : dec.factors) {
    factors.push_back({{"dim", f.factor.dim()},
                       {"idempotent", to_json(f.idempotent)},
                       {"certified", f.certified},
                       {"certificate", f.certificate},
                       {"module_algebra", to_json(f.factor)}});
    r.summary += "\n  dim " + std::to_string(f.factor.dim()) + (f.certified ? ", simple (" + f.certificate + ")" : ", not certified");
  }
  for (const auto& n : dec.notes) r.summary += "\n  note: " + n;
  r.document = report_document("decompose", {{"factors", factors}, {"complete", dec.complete}, {"notes", dec.notes}});
  return r;
}

CommandResult cmd_semisimple_quotient(const Json& doc) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  ModuleAlgebraQuotient q = semisimple_quotient(*ma);
  CommandResult r;
  r.document = to_json(q.algebra);
  r.summary = "quotient by the C-module radical: dimension " + std::to_string(q.algebra.dim()) + " (from " + std::to_string(ma->dim()) + ")";
  return r;
}

CommandResult cmd_smash(const Json& doc) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  SmashProduct s = smash(ma);
  Report rep = check_smash(s);
  CommandResult r;
  r.document = to_json(*s.algebra);
  r.summary = "smash product of dimension " + std::to_string(s.algebra->dim());
  if (!rep.ok()) {
    r.summary += "\naxiom failure: " + rep.violations.front();
    r.exit_code = kExitFailure;
  }
  return r;
}

CommandResult cmd_projective(const Json& doc, const std::optional<Json>& module) {
  std::vector<ModuleObject> mods;
  ModuleAlgebraPtr ma;
  auto load_object = [](const Json& d) {
    ModuleObject m = module_object_from_json(d);
    require_ok(check_module_algebra(*m.module_algebra()), "module algebra");
    require_ok(check_module_object(m), "module object");
    return m;
  };
  if (module) {
    ma = load_module_algebra(doc);
    ModuleObject m = load_object(*module);
    if (!same_module_algebra(*m.module_algebra(), *ma)) throw DocumentError("module object over a different module algebra");
    mods.push_back(ModuleObject(ma, m.hmodule(), m.nablas()));
  } else if (document_kind(doc) == "module_object") {
    mods.push_back(load_object(doc));
    ma = mods.back().module_algebra();
  } else {
    ma = load_module_algebra(doc);
    mods = corpus_modules(ma);
  }
  SmashProduct s = smash(ma);
  const bool cross = ma->dim() * ma->hopf()->dim() <= 16;
  Json list = Json::array();
  CommandResult r;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const bool p = is_c_projective(mods[i]);
    Json e = {{"dim", mods[i].dim()}, {"c_projective", p}};
    r.summary += (i ? "\n" : "") + std::string("module ") + std::to_string(i) + " (dim " + std::to_string(mods[i].dim()) + "): " +
                 (p ? "C-projective" : "not C-projective");
    if (cross) {
      const bool q = is_c_projective_via_smash(s, mods[i]);
      e["via_smash"] = q;
      if (p != q) {
        r.exit_code = kExitFailure;
        r.summary += " (smash-side test disagrees)";
      }
    }
    list.push_back(std::move(e));
  }
  r.document = report_document("projective", {{"modules", list}});
  return r;
}

CommandResult cmd_correspondence(const Json& doc, const CommandOptions& opts) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  KleisliContext ctx(ma, depth_for(*ma, opts));
  std::vector<Subspace> ideals;
  std::string inst;
  if (enumeration_feasible(ma->field(), ma->dim(), opts.enum_bound)) {
    ideals = enumerate_ideal_objects(*ma, opts.enum_bound);
    inst = "all " + std::to_string(ideals.size()) + " ideal objects";
  } else {
    Subspace rad = c_module_radical(*ma);
    ideals = {Subspace::zero(ma->field(), ma->dim()), Subspace::full(ma->field(), ma->dim())};
    if (!rad.is_zero()) ideals.insert(ideals.begin() + 1, rad);
    inst = "0, the C-module radical and A";
  }
  std::vector<StableIdeal> images;
  for (const auto& i : ideals) images.push_back(R_map(ctx, {i}));
  auto basis = hom_space(ctx, 0, 0);
  std::vector<Verdict> vs;
  vs.push_back(verdict("SR", inst, [&]() -> std::string {
    for (std::size_t k = 0; k < ideals.size(); ++k)
      if (!roundtrip_SR(ctx, {ideals[k]})) return "ideal object " + std::to_string(k);
    return {};
  }));
  vs.push_back(verdict("RS", inst + " and principal stable ideals", [&]() -> std::string {
    for (std::size_t k = 0; k < images.size(); ++k)
      if (!roundtrip_RS(ctx, images[k])) return "image of ideal object " + std::to_string(k);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!roundtrip_RS(ctx, generate_stable_ideal(ctx, {basis[k]}))) return "ideal generated by basis map " + std::to_string(k);
    return {};
  }));
  vs.push_back(verdict("lattice", inst, [&]() -> std::string {
    for (std::size_t a = 0; a < ideals.size(); ++a)
      for (std::size_t b = 0; b < ideals.size(); ++b) {
        if (ideals[a].contains(ideals[b]) != images[a].contains(images[b]))
          return "order between " + std::to_string(a) + " and " + std::to_string(b);
        StableIdeal meet, join;
        for (const auto& [k, v] : images[a].components) {
          meet.components.emplace(k, intersect(v, images[b].at(k.first, k.second)));
          join.components.emplace(k, sum(v, images[b].at(k.first, k.second)));
        }
        if (!(R_map(ctx, {intersect(ideals[a], ideals[b])}) == meet) || !(R_map(ctx, {sum(ideals[a], ideals[b])}) == join))
          return "meet or join of " + std::to_string(a) + " and " + std::to_string(b);
      }
    return {};
  }));
  vs.push_back(verdict("product", inst, [&]() -> std::string {
    for (std::size_t a = 0; a < ideals.size(); ++a)
      for (std::size_t b = 0; b < ideals.size(); ++b) {
        StableIdeal p = stable_ideal_product(ctx, images[a], images[b]);
        if (!(S_map(ctx, p).component == ideal_object_product(*ma, ideals[a], ideals[b])))
          return "product of " + std::to_string(a) + " and " + std::to_string(b);
      }
    return {};
  }));
  CommandResult r;
  r.document = report_document("correspondence", {{"probes", ctx.depth()}, {"verdicts", verdict_array(vs)}});
  r.summary = verdict_summary(vs);
  r.exit_code = all_pass(vs) ? kExitOk : kExitFailure;
  return r;
}

CommandResult cmd_skryabin(const Json& doc, const CommandOptions& opts) {
  ModuleAlgebraPtr ma = load_module_algebra(doc);
  auto mods = corpus_modules(ma);
  SkryabinReport rep = skryabin_check(ma, mods, opts.enum_bound);
  Json list = Json::array();
  for (std::size_t i = 0; i < rep.projective.size(); ++i) list.push_back({{"dim", mods[i].dim()}, {"c_projective", static_cast<bool>(rep.projective[i])}});
  CommandResult r;
  r.document = report_document("skryabin", {{"status", rep.status}, {"gate", rep.gate}, {"modules", list}, {"counterexamples", rep.counterexamples}});
  r.summary = rep.status + " (" + rep.gate + ")";
  if (rep.status != "skipped") r.summary += ", " + std::to_string(mods.size()) + " corpus modules";
  r.exit_code = rep.status == "fail" ? kExitFailure : kExitOk;
  return r;
}

CommandResult cmd_verify(const std::string& suite, const CommandOptions& opts) {
  if (suite != "all" && !is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  VerifyOptions vo;
  vo.seed = opts.seed;
  vo.enum_bound = opts.enum_bound;
  std::vector<Verdict> vs = run_verify(suite, vo);
  CommandResult r;
  r.document = report_document("verify", {{"suite", suite}, {"seed", opts.seed}, {"verdicts", verdict_array(vs)}});
  r.summary = verdict_summary(vs);
  r.exit_code = all_pass(vs) ? kExitOk : kExitFailure;
  return r;
}

}  // namespace exactalg
