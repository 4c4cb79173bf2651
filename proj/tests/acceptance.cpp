#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exactalg/commands.hpp"
#include "exactalg/corpus.hpp"

using namespace exactalg;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  // Extra end-to-end checks through the command layer; returns failure notes.
  std::function<std::vector<std::string>()> extra;
};

std::vector<std::string> golden_commands() {
  std::vector<std::string> notes;
  const Json a2 = to_json(*example_module_algebra("mu2_tensor_char2"));
  const Json a3 = to_json(*example_module_algebra("mu2_tensor_char3"));
  if (cmd_exact(a2).document["result"]["exact"] != false) notes.push_back("exact over F_2");
  if (cmd_exact(a3).document["result"]["exact"] != true) notes.push_back("not exact over F_3");
  const Json dec = cmd_decompose(a3).document["result"]["factors"];
  if (dec.size() != 2) notes.push_back("factor count " + std::to_string(dec.size()));
  for (const auto& f : dec)
    if (f["dim"] != 2) notes.push_back("factor of dim " + f["dim"].dump());
  const CommandResult rad = cmd_c_radical(a2);
  if (rad.document["basis"].size() != 2 || rad.exit_code != kExitOk) notes.push_back("C-module radical over F_2");
  return notes;
}

std::vector<std::string> correspondence_commands() {
  std::vector<std::string> notes;
  const CommandResult r = cmd_correspondence(to_json(*example_module_algebra("mu2_tensor_char2")));
  if (r.exit_code != kExitOk) notes.push_back(r.summary);
  return notes;
}

std::vector<std::string> none() { return {}; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden tensor square of mu2 (exactness by characteristic, factors, radical)", {"golden_mu2_tensor"}, golden_commands},
      {2, "three exactness conditions agree on the F_2 corpus", {"exactness_equivalence"}, none},
      {3, "double stability iff ideal object on every F_2 subspace", {"double_stability"}, none},
      {4, "RS = id, SR = id, monotonicity and lattice isomorphism", {"correspondence"}, correspondence_commands},
      {5, "products and nilpotency indices match across the correspondence", {"products"}, none},
      {6, "radical oracles, idempotence and agreement of both C-radical routes", {"radicals"}, none},
      {7, "module times ideal objects, lifts, semisimple quotient, split epimorphisms", {"module_products"}, none},
      {8, "smash products, translation, tensor isomorphism and C-projectivity", {"smash"}, none},
      {9, "Hopf axioms, zig-zag identities and Sweedler's algebra", {"hopf_axioms"}, none},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> notes;
    std::size_t laws = 0;
    for (const auto& s : c.suites)
      for (const auto& v : run_suite(s)) {
        ++laws;
        if (!v.pass) notes.push_back(v.law + " [" + v.instance + "]: " + v.witness);
      }
    try {
      for (auto& n : c.extra()) notes.push_back("command: " + n);
    } catch (const std::exception& e) {
      notes.push_back(std::string("command threw: ") + e.what());
    }
    const bool pass = notes.empty();
    failures += !pass;
    std::printf("%s criterion %d: %s (%zu laws)\n", pass ? "PASS" : "FAIL", c.id, c.title, laws);
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
