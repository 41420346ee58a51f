#pragma once

#include "gi/error.hpp"
#include "gi/theorems.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gi::cli {

struct Location {
  int line = 1;
  int column = 1;
  friend bool operator==(const Location&, const Location&) = default;
};

/// Parse or resolution error carrying a position in the script.
class ScriptError : public InputError {
 public:
  ScriptError(Location loc, const std::string& msg);
  const Location& location() const { return loc_; }
  const std::string& detail() const { return detail_; }

 private:
  Location loc_;
  std::string detail_;
};

/// Polynomial kept as its token sequence; equality ignores layout.
struct PolyText {
  std::vector<std::string> tokens;
  Location loc;
  std::vector<Location> token_locs;
  std::string to_string() const;
  friend bool operator==(const PolyText& a, const PolyText& b) { return a.tokens == b.tokens; }
};

struct RingDecl {
  std::string name;
  unsigned characteristic = 0;  ///< 0 for QQ
  std::vector<std::pair<std::string, int>> vars;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name, ring;
  std::vector<PolyText> gens;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

/// SRC and TGT name rings or ideals (the quotient by the ideal).
struct MapDecl {
  std::string name, source, target;
  std::vector<PolyText> images;
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

struct InstanceDecl {
  std::string name, a, b, map;
  std::optional<unsigned> characteristic;
  std::optional<long> p_power;
  bool domain = false;
  Separability claim = Separability::unknown;
  std::optional<ToricData> toric;
  friend bool operator==(const InstanceDecl& x, const InstanceDecl& y);
};

/// A command: its name and raw word arguments.
struct CommandStmt {
  std::string name;
  std::vector<std::string> args;
  friend bool operator==(const CommandStmt&, const CommandStmt&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, MapDecl, InstanceDecl, CommandStmt>;

struct SessionScript {
  std::vector<Statement> statements;
  std::vector<Location> locations;
  friend bool operator==(const SessionScript& a, const SessionScript& b) { return a.statements == b.statements; }
};

/// Throws ScriptError with the position of the first problem.
SessionScript parse_script(std::string_view text);
/// Canonical text; parse_script(print_script(s)) == s.
std::string print_script(const SessionScript& s);

/// Commands accepted in scripts and on the command line.
const std::vector<std::string>& command_names();

/// The declarations of a script turned into library objects.
class Session {
 public:
  Session() = default;
  explicit Session(const SessionScript& script);

  const Presentation& algebra(const std::string& name) const;
  const GradedRingMap& map(const std::string& name) const;
  const ExtensionInstance& instance(const std::string& name) const;
  bool has_algebra(const std::string& name) const { return algebras_.count(name) > 0; }
  bool has_instance(const std::string& name) const { return instances_.count(name) > 0; }

  /// Registers built-in suite instances and their rings as NAME.A, NAME.B.
  void add_builtin(const ExtensionInstance& inst);

 private:
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, Presentation> algebras_;
  std::map<std::string, GradedRingMap> maps_;
  std::map<std::string, ExtensionInstance> instances_;
};

}  // namespace gi::cli
