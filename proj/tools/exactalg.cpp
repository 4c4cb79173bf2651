#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "exactalg/commands.hpp"

using namespace exactalg;

namespace {

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

int emit(const CommandResult& r, const std::string& format, const std::string& out) {
  const std::string body = r.document.dump(2) + "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitInput;
    }
    f << body;
  }
  if (format == "json") {
    if (out.empty()) std::cout << body;
    std::cerr << r.summary << "\n";
  } else {
    std::cout << r.summary << "\n";
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with module algebras over finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text, out, format = "text";
  CommandOptions opts;
  app.add_option("--field", field_text, "field for example builders: a prime p or Q");
  app.add_option("--probes", opts.probes, "Kleisli probe depth (0 = automatic)");
  app.add_option("--enum-bound", opts.enum_bound, "largest p^n enumerated by the exhaustive oracles");
  app.add_option("--seed", opts.seed, "seed for randomized suites");
  app.add_option("--out", out, "write the result document to this file");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string name, file, module_file, suite = "all";
  bool list = false;
  auto* example = app.add_subcommand("example", "emit a checked example document");
  example->add_option("name", name, "registry name");
  example->add_flag("--list", list, "list the registry");

  std::function<CommandResult()> run;
  example->callback([&] {
    run = [&] {
      if (list || name.empty()) return cmd_list_examples();
      return cmd_example(name, opts);
    };
  });

  struct FileCommand {
    const char* name;
    const char* help;
    std::function<CommandResult(const Json&)> fn;
  };
  const std::vector<FileCommand> file_commands = {
      {"check", "run the axioms of any document", [](const Json& d) { return cmd_check(d); }},
      {"radical", "Jacobson radical of the underlying algebra", [](const Json& d) { return cmd_radical(d); }},
      {"c-radical", "C-module radical, cross-checked on the Kleisli side", [&](const Json& d) { return cmd_c_radical(d, opts); }},
      {"exact", "decide exactness", [](const Json& d) { return cmd_exact(d); }},
      {"decompose", "split an exact module algebra into simple factors", [&](const Json& d) { return cmd_decompose(d, opts); }},
      {"quotient", "quotient by the C-module radical", [](const Json& d) { return cmd_semisimple_quotient(d); }},
      {"smash", "smash product algebra", [](const Json& d) { return cmd_smash(d); }},
      {"correspondence", "ideal objects against stable Kleisli ideals", [&](const Json& d) { return cmd_correspondence(d, opts); }},
      {"skryabin", "projectivity of corpus modules over a simple module algebra", [&](const Json& d) { return cmd_skryabin(d, opts); }},
  };
  for (const auto& c : file_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", file, "input document, - for stdin")->required();
    sub->callback([&, fn = c.fn] { run = [&, fn] { return fn(read_document(file)); }; });
  }

  auto* projective = app.add_subcommand("projective", "C-projectivity of a module object or of the corpus modules");
  projective->add_option("file", file, "module algebra or module object document")->required();
  projective->add_option("module", module_file, "module object document over the module algebra in file");
  projective->callback([&] {
    run = [&] {
      std::optional<Json> m;
      if (!module_file.empty()) m = read_document(module_file);
      return cmd_projective(read_document(file), m);
    };
  });

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", suite, "suite name or all");
  bool list_suites = false;
  verify->add_flag("--list", list_suites, "list the suites");
  verify->callback([&] {
    run = [&] {
      if (!list_suites) return cmd_verify(suite, opts);
      CommandResult r;
      Json names = Json::array();
      for (const auto& s : verify_suites()) {
        names.push_back({{"name", s.name}, {"description", s.description}, {"seeded", s.seeded}});
        r.summary += s.name + "  " + s.description + "\n";
      }
      r.summary.pop_back();
      r.document = report_document("verify", {{"suites", names}});
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!field_text.empty()) opts.field = Field::parse(field_text);
    return emit(run(), format, out);
  } catch (const DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
