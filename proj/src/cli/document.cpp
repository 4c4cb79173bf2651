#include "exactalg/document.hpp"

namespace exactalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DocumentError(what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t index_of(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= bound)
    bad(std::string(what) + " index out of range");
  return v.get<std::size_t>();
}

Scalar scalar_from_json(Field f, const Json& v) {
  try {
    if (v.is_string()) return f.parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  } catch (const std::exception& e) {
    bad(std::string("bad scalar: ") + e.what());
  }
  bad("scalars must be strings or integers");
}

const Json& expect_kind(const Json& doc, const std::string& kind) {
  if (!doc.is_object()) bad("document must be an object");
  if (!doc.contains("format") || doc.at("format") != kDocumentFormat) bad("unsupported document format");
  if (document_kind(doc) != kind) bad("expected a " + kind + " document, got " + document_kind(doc));
  return doc;
}

Field nested_field(const Json& doc, Field outer) {
  Field f = field_from_json(doc);
  if (!(f == outer)) bad("nested document over a different field");
  return f;
}

Json sparse_triples(const Matrix& m, std::size_t n, bool comult) {
  // comult: entry (j n + k, i) -> [i, j, k, c].
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) {
        if (comult)
          out.push_back({c, r / n, r % n, m(r, c).to_string()});
        else
          out.push_back({r, c, m(r, c).to_string()});
      }
  return out;
}

template <class Fn>
auto guarded(const char* what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json document(const std::string& kind, Json body) {
  Json out = {{"format", kDocumentFormat}, {"kind", kind}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

std::string document_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) bad("document has no kind");
  return doc.at("kind").get<std::string>();
}

Json to_json(Field f) { return document("field", {{"field", f.name()}}); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  return document("subspace", {{"field", s.field().name()}, {"ambient", s.ambient()}, {"basis", to_json(s.basis())}});
}

Json to_json(const Algebra& a) {
  Json c = Json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.constant(i, j, k).is_zero()) c.push_back({i, j, k, a.constant(i, j, k).to_string()});
  return document("algebra", {{"field", a.field().name()}, {"dim", n}, {"unit", to_json(a.unit())}, {"constants", c}});
}

Json to_json(const HopfAlgebra& h) {
  Json body = {{"field", h.field().name()},
               {"algebra", to_json(*h.algebra())},
               {"comult", sparse_triples(h.comult(), h.dim(), true)},
               {"counit", to_json(h.counit().row(0))},
               {"antipode", to_json(h.antipode())}};
  if (h.rmatrix()) body["rmatrix"] = to_json(*h.rmatrix());
  return document("hopf", std::move(body));
}

Json to_json(const ModuleAlgebra& ma) {
  Json act = Json::array();
  for (const auto& r : ma.rhos()) act.push_back(to_json(r));
  return document("module_algebra", {{"field", ma.field().name()},
                                     {"hopf", to_json(*ma.hopf())},
                                     {"algebra", to_json(*ma.algebra())},
                                     {"action", act}});
}

Json to_json(const ModuleObject& m) {
  Json h = Json::array(), a = Json::array();
  for (const auto& x : m.hmodule().actions()) h.push_back(to_json(x));
  for (const auto& x : m.nablas()) a.push_back(to_json(x));
  return document("module_object", {{"field", m.field().name()},
                                    {"module_algebra", to_json(*m.module_algebra())},
                                    {"dim", m.dim()},
                                    {"h_action", h},
                                    {"a_action", a}});
}

Json report_document(const std::string& command, Json result) {
  return document("report", {{"command", command}, {"result", std::move(result)}});
}

Field field_from_json(const Json& doc) {
  const Json& f = member(doc, "field");
  if (!f.is_string()) bad("field must be a string such as \"2\" or \"Q\"");
  return guarded("bad field", [&] { return Field::parse(f.get<std::string>()); });
}

Vector vector_from_json(Field f, const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("expected a vector of length " + std::to_string(n));
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(f, x));
  return out;
}

Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    bad("expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(f, j[r], cols));
  return m;
}

Subspace subspace_from_json(const Json& doc) {
  expect_kind(doc, "subspace");
  const Field f = field_from_json(doc);
  const std::size_t n = size_member(doc, "ambient");
  const Json& b = member(doc, "basis");
  if (!b.is_array()) bad("basis must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : b) rows.push_back(vector_from_json(f, r, n));
  return Subspace::span(f, n, rows);
}

Algebra algebra_from_json(const Json& doc) {
  expect_kind(doc, "algebra");
  const Field f = field_from_json(doc);
  const std::size_t n = size_member(doc, "dim");
  Vector unit = vector_from_json(f, member(doc, "unit"), n);
  std::vector<Scalar> c(n * n * n, f.zero());
  const Json& t = member(doc, "constants");
  if (!t.is_array()) bad("constants must be an array of [i, j, k, c] triples");
  for (const auto& e : t) {
    if (!e.is_array() || e.size() != 4) bad("constants entries are [i, j, k, c]");
    const std::size_t i = index_of(e[0], n, "constant"), j = index_of(e[1], n, "constant"), k = index_of(e[2], n, "constant");
    c[(i * n + j) * n + k] += scalar_from_json(f, e[3]);
  }
  return guarded("bad algebra", [&] { return Algebra(f, n, std::move(c), std::move(unit)); });
}

HopfAlgebra hopf_from_json(const Json& doc) {
  expect_kind(doc, "hopf");
  const Field f = field_from_json(doc);
  const Json& ad = member(doc, "algebra");
  nested_field(ad, f);
  auto a = std::make_shared<const Algebra>(algebra_from_json(ad));
  const std::size_t n = a->dim();
  Matrix comult(f, n * n, n);
  const Json& t = member(doc, "comult");
  if (!t.is_array()) bad("comult must be an array of [i, j, k, c] triples");
  for (const auto& e : t) {
    if (!e.is_array() || e.size() != 4) bad("comult entries are [i, j, k, c]");
    const std::size_t i = index_of(e[0], n, "comult"), j = index_of(e[1], n, "comult"), k = index_of(e[2], n, "comult");
    comult(j * n + k, i) += scalar_from_json(f, e[3]);
  }
  Matrix counit = Matrix::from_rows(f, n, {vector_from_json(f, member(doc, "counit"), n)});
  Matrix antipode = matrix_from_json(f, member(doc, "antipode"), n, n);
  std::optional<Vector> r;
  if (doc.contains("rmatrix")) r = vector_from_json(f, doc.at("rmatrix"), n * n);
  return guarded("bad Hopf algebra", [&] { return HopfAlgebra(a, comult, counit, antipode, r); });
}

ModuleAlgebra module_algebra_from_json(const Json& doc) {
  expect_kind(doc, "module_algebra");
  const Field f = field_from_json(doc);
  nested_field(member(doc, "hopf"), f);
  nested_field(member(doc, "algebra"), f);
  auto h = std::make_shared<const HopfAlgebra>(hopf_from_json(doc.at("hopf")));
  auto a = std::make_shared<const Algebra>(algebra_from_json(doc.at("algebra")));
  const Json& act = member(doc, "action");
  if (!act.is_array() || act.size() != h->dim()) bad("action needs one matrix per Hopf basis element");
  std::vector<Matrix> rho;
  for (const auto& m : act) rho.push_back(matrix_from_json(f, m, a->dim(), a->dim()));
  return guarded("bad module algebra", [&] { return ModuleAlgebra(h, a, std::move(rho)); });
}

ModuleObject module_object_from_json(const Json& doc) {
  expect_kind(doc, "module_object");
  const Field f = field_from_json(doc);
  nested_field(member(doc, "module_algebra"), f);
  auto ma = std::make_shared<const ModuleAlgebra>(module_algebra_from_json(doc.at("module_algebra")));
  const std::size_t d = size_member(doc, "dim");
  const Json& h = member(doc, "h_action");
  const Json& a = member(doc, "a_action");
  if (!h.is_array() || h.size() != ma->hopf()->dim()) bad("h_action needs one matrix per Hopf basis element");
  if (!a.is_array() || a.size() != ma->dim()) bad("a_action needs one matrix per algebra basis element");
  std::vector<Matrix> hact, nabla;
  for (const auto& m : h) hact.push_back(matrix_from_json(f, m, d, d));
  for (const auto& m : a) nabla.push_back(matrix_from_json(f, m, d, d));
  return guarded("bad module object", [&] {
    return ModuleObject(ma, HModule(ma->hopf(), d, std::move(hact)), std::move(nabla));
  });
}

bool same_module_algebra(const ModuleAlgebra& a, const ModuleAlgebra& b) {
  return *a.hopf() == *b.hopf() && *a.algebra() == *b.algebra() && a.rhos() == b.rhos();
}

bool same_module_object(const ModuleObject& a, const ModuleObject& b) {
  return same_module_algebra(*a.module_algebra(), *b.module_algebra()) && a.dim() == b.dim() &&
         a.hmodule().actions() == b.hmodule().actions() && a.nablas() == b.nablas();
}

}  // namespace exactalg
