#pragma once

#include <stdexcept>
#include <string>

#include "exactalg/module_algebra.hpp"
#include "json.hpp"

namespace exactalg {

using Json = nlohmann::json;

inline constexpr int kDocumentFormat = 1;

// Malformed or inconsistent input document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars are decimal strings, matrices nested row arrays, structure
// constants and coproducts sparse [i, j, k, "c"] triples.
Json to_json(Field f);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const Subspace& s);
Json to_json(const Algebra& a);
Json to_json(const HopfAlgebra& h);
Json to_json(const ModuleAlgebra& ma);
Json to_json(const ModuleObject& m);

// Bare documents: {"format": 1, "kind": ..., ...}.
Json document(const std::string& kind, Json body);
std::string document_kind(const Json& doc);

Field field_from_json(const Json& doc);
Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols);
Vector vector_from_json(Field f, const Json& j, std::size_t n);
Subspace subspace_from_json(const Json& doc);
Algebra algebra_from_json(const Json& doc);
HopfAlgebra hopf_from_json(const Json& doc);
ModuleAlgebra module_algebra_from_json(const Json& doc);
ModuleObject module_object_from_json(const Json& doc);

// A report document: {"kind": "report", "command": ..., "result": ..., "verdicts"?: [...]}.
Json report_document(const std::string& command, Json result);

bool same_module_algebra(const ModuleAlgebra& a, const ModuleAlgebra& b);
bool same_module_object(const ModuleObject& a, const ModuleObject& b);

}  // namespace exactalg
