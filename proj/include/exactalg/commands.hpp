#pragma once

#include <optional>
#include <string>

#include "exactalg/document.hpp"
#include "exactalg/verify.hpp"

namespace exactalg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitFailure = 2;

struct CommandOptions {
  // Rebuilds a named example over this field.
  std::optional<Field> field;
  // Kleisli probe depth; 0 picks default_probe_depth.
  std::size_t probes = 0;
  std::uint64_t enum_bound = kDefaultEnumerationBound;
  std::uint64_t seed = 0;
};

struct CommandResult {
  Json document;
  std::string summary;
  // kExitOk, or kExitFailure when a verification in the command failed.
  int exit_code = kExitOk;
};

// Input problems surface as DocumentError or std::invalid_argument.
CommandResult cmd_example(const std::string& name, const CommandOptions& opts = {});
CommandResult cmd_list_examples();
CommandResult cmd_check(const Json& doc);
CommandResult cmd_radical(const Json& doc);
CommandResult cmd_c_radical(const Json& doc, const CommandOptions& opts = {});
CommandResult cmd_exact(const Json& doc);
CommandResult cmd_decompose(const Json& doc, const CommandOptions& opts = {});
CommandResult cmd_semisimple_quotient(const Json& doc);
CommandResult cmd_smash(const Json& doc);
// doc is a module object, or a module algebra whose corpus modules are tested.
CommandResult cmd_projective(const Json& doc, const std::optional<Json>& module = std::nullopt);
CommandResult cmd_correspondence(const Json& doc, const CommandOptions& opts = {});
CommandResult cmd_skryabin(const Json& doc, const CommandOptions& opts = {});
CommandResult cmd_verify(const std::string& suite, const CommandOptions& opts = {});

// Module algebra of a module_algebra or module_object document, axiom-checked.
ModuleAlgebraPtr load_module_algebra(const Json& doc);

}  // namespace exactalg
