#include "commands.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gi;
using namespace gi::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_seed(const std::string& s, const char* origin) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(origin) + ": invalid seed '" + s + "'");
  }
}

int report_error(const std::string& kind, const std::exception& e, bool json_out, const std::string& file,
                 const ScriptError* se) {
  if (se)
    std::cerr << "error: " << (file.empty() ? "" : file + ":") << se->location().line << ":" << se->location().column
              << ": " << se->detail() << "\n";
  else
    std::cerr << "error: " << e.what() << "\n";
  if (json_out) {
    nlohmann::json j{{"error", {{"kind", kind}, {"message", se ? se->detail() : std::string(e.what())}}}};
    if (se) {
      j["error"]["line"] = se->location().line;
      j["error"]["column"] = se->location().column;
      if (!file.empty()) j["error"]["file"] = file;
    }
    std::cout << j.dump(2) << "\n";
  }
  return kind == "internal" ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gi: graded algebra invariants and extension checks"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_out = false, csv_out = false;
  std::string seed_opt, file;
  app.add_flag("--json", json_out, "emit a JSON report");
  app.add_flag("--csv", csv_out, "emit invariant tables as CSV");
  app.add_option("--seed", seed_opt, "seed for sampling systems of parameters (also GI_SEED)");
  app.add_option("-f,--file", file, "script whose declarations are loaded first");

  std::string name, theorem, instance, number;
  bool regraded = false, ambient = false;
  unsigned parallel = 1;
  std::string script_path;

  auto* inv = app.add_subcommand("invariants", "invariant report of a ring or quotient");
  inv->add_option("name", name)->required();
  auto* hil = app.add_subcommand("hilbert", "Hilbert series");
  hil->add_option("name", name)->required();
  auto* bet = app.add_subcommand("betti", "graded Betti table");
  bet->add_option("name", name)->required();
  auto* ker = app.add_subcommand("kernel", "kernel of a ring map");
  ker->add_option("map", name)->required();
  auto* ver = app.add_subcommand("veronese", "Veronese subring presentation");
  ver->add_option("name", name)->required();
  ver->add_option("n", number)->required();
  auto* reg_flag = ver->add_flag("--regraded", regraded, "place A_{ni} in degree i (default)");
  ver->add_flag("--ambient", ambient, "keep degrees multiples of n")->excludes(reg_flag);
  auto* fro = app.add_subcommand("frobenius", "Frobenius power presentation");
  fro->add_option("name", name)->required();
  fro->add_option("q", number)->required();
  auto* chk = app.add_subcommand("check", "evaluate a theorem on an instance");
  chk->add_option("theorem", theorem)->required();
  chk->add_option("instance", instance)->required();
  auto* sui = app.add_subcommand("suite", "run the built-in instance suite");
  sui->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
  auto* run = app.add_subcommand("run", "execute the commands of a script");
  run->add_option("script", script_path)->required();
  auto* prs = app.add_subcommand("parse", "parse a script and print it in canonical form");
  prs->add_option("script", script_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Options opt;
  opt.format = json_out ? Format::json : csv_out ? Format::csv : Format::text;
  opt.parallel = parallel;
  std::string error_file = file;
  try {
    if (json_out && csv_out) throw InputError("--json and --csv are exclusive");
    if (const char* env = std::getenv("GI_SEED"); env && *env) opt.seed = parse_seed(env, "GI_SEED");
    if (!seed_opt.empty()) opt.seed = parse_seed(seed_opt, "--seed");

    Report report(opt.seed);
    std::ostream& out = std::cout;

    if (*prs) {
      error_file = script_path;
      SessionScript s = parse_script(read_file(script_path));
      std::string canon = print_script(s);
      if (json_out)
        std::cout << nlohmann::json{{"tool-version", kToolVersion}, {"statements", s.statements.size()},
                                    {"canonical", canon}}
                         .dump(2)
                  << "\n";
      else
        std::cout << canon;
      return 0;
    }

    if (*sui) {
      run_builtin_suite(opt, report, out);
    } else if (*run) {
      error_file = script_path;
      SessionScript s = parse_script(read_file(script_path));
      Session session(s);
      for (std::size_t i = 0; i < s.statements.size(); ++i)
        if (auto* c = std::get_if<CommandStmt>(&s.statements[i])) {
          try {
            run_command(*c, session, opt, report, out);
          } catch (const ScriptError&) {
            throw;
          } catch (const InputError& e) {
            throw ScriptError(s.locations[i], e.what());
          }
        }
    } else {
      Session session;
      if (!file.empty()) session = Session(parse_script(read_file(file)));
      for (auto& e : builtin_suite())
        if (!session.has_instance(e.instance.name)) session.add_builtin(e.instance);
      CommandStmt c;
      if (*inv) c = {"invariants", {name}};
      if (*hil) c = {"hilbert", {name}};
      if (*bet) c = {"betti", {name}};
      if (*ker) c = {"kernel", {name}};
      if (*ver) c = {"veronese", {name, number, ambient ? "ambient" : "regraded"}};
      if (*fro) c = {"frobenius", {name, number}};
      if (*chk) c = {"check", {theorem, instance}};
      if ((*ver || *fro) && (number.empty() || number.find_first_not_of("0123456789") != std::string::npos ||
                             number.size() > 9 || std::stol(number) <= 0))
        throw InputError(c.name + ": expected a positive integer, found '" + number + "'");
      run_command(c, session, opt, report, out);
    }
    if (json_out) std::cout << report.document().dump(2) << "\n";
    return 0;
  } catch (const ScriptError& e) {
    return report_error("input", e, json_out, error_file, &e);
  } catch (const InputError& e) {
    return report_error("input", e, json_out, "", nullptr);
  } catch (const PreconditionError& e) {
    return report_error("precondition", e, json_out, "", nullptr);
  } catch (const UnsupportedError& e) {
    return report_error("unsupported", e, json_out, "", nullptr);
  } catch (const std::exception& e) {
    return report_error("internal", e, json_out, "", nullptr);
  }
}
