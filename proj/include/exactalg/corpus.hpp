#pragma once

#include <string>
#include <vector>

#include "exactalg/module_algebra.hpp"

namespace exactalg {

// k[x]/(x^2 - 1) graded with x odd, over k^{Z/2}.
ModuleAlgebraPtr mu2_algebra(Field f);
// mu2 (x) mu2 on the basis 1, v, u, uv (u = x (x) 1, v = 1 (x) x).
ModuleAlgebraPtr mu2_tensor(Field f);
// k^G with G acting by left translation, over k[G].
ModuleAlgebraPtr function_algebra(const GroupTable& g, Field f);
// H acting on itself by h . a = h1 a S(h2).
ModuleAlgebraPtr adjoint_algebra(const HopfPtr& h);
// k[t]/t^m with the trivial Hopf algebra k.
ModuleAlgebraPtr truncated_trivial(Field f, std::size_t m);
// k[y]/y^2 over Sweedler's algebra: g.y = -y, x.1 = 0, x.y = 1.
ModuleAlgebraPtr sweedler_line(Field f);

struct Example {
  std::string name;
  std::string description;
};

// Registered module algebra examples, plus sweedler4_Q which names a Hopf algebra.
const std::vector<Example>& example_registry();
bool is_hopf_example(const std::string& name);
// Throws std::out_of_range on unknown names; sweedler4_Q is not a module algebra.
ModuleAlgebraPtr example_module_algebra(const std::string& name);
HopfPtr example_hopf(const std::string& name);
// The same construction over another field; sweedler families need p != 2.
ModuleAlgebraPtr example_module_algebra_over(const std::string& name, Field f);
HopfPtr example_hopf_over(const std::string& name, Field f);
GroupTable symmetric_group_s3();

// Module objects used by the property suites: A, H |> A, and A / I for the
// proper ideal objects I (all of them when enumeration is feasible, else the
// C-module radical), plus H |> (A / Rad) when the radical is nonzero.
std::vector<ModuleObject> corpus_modules(const ModuleAlgebraPtr& ma, std::uint64_t bound = 1u << 8);

}  // namespace exactalg
