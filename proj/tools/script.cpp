#include "script.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gi::cli {

ScriptError::ScriptError(Location loc, const std::string& msg)
    : InputError("line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + msg),
      loc_(loc),
      detail_(msg) {}

std::string PolyText::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if ((t == "+" || t == "-") && i > 0 && tokens[i - 1] != "(")
      out += " " + t + " ";
    else
      out += t;
  }
  return out;
}

bool operator==(const InstanceDecl& x, const InstanceDecl& y) {
  auto toric_eq = [](const std::optional<ToricData>& a, const std::optional<ToricData>& b) {
    if (bool(a) != bool(b)) return false;
    return !a || (a->a_exponents == b->a_exponents && a->b_exponents == b->b_exponents);
  };
  return x.name == y.name && x.a == y.a && x.b == y.b && x.map == y.map && x.characteristic == y.characteristic &&
         x.p_power == y.p_power && x.domain == y.domain && x.claim == y.claim && toric_eq(x.toric, y.toric);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"invariants", "hilbert", "betti", "kernel",
                                              "veronese",   "frobenius", "check"};
  return names;
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ScriptError(loc(), msg); }
  [[noreturn]] static void fail_at(Location l, const std::string& msg) { throw ScriptError(l, msg); }

  Location loc() const { return loc_; }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  bool eat(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    advance(word.size());
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'" + found());
  }
  void expect(std::string_view w) {
    if (!eat(w)) fail("expected '" + std::string(w) + "'" + found());
  }
  std::string found() {
    skip();
    if (pos_ >= s_.size()) return " at end of input";
    std::size_t e = pos_;
    while (e < s_.size() && !std::isspace(static_cast<unsigned char>(s_[e])) && e - pos_ < 12) ++e;
    return ", found '" + std::string(s_.substr(pos_, e - pos_)) + "'";
  }

  bool at_ident() { return ident_start(peek()); }
  std::string ident(const char* what = "a name") {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail(std::string("expected ") + what + found());
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) advance();
    return std::string(s_.substr(b, pos_ - b));
  }
  /// Keyword check without consuming a longer identifier.
  bool eat_keyword(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    if (pos_ + w.size() < s_.size() && ident_char(s_[pos_ + w.size()])) return false;
    advance(w.size());
    return true;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
  std::string digits() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer" + found());
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    return std::string(s_.substr(b, pos_ - b));
  }
  long integer(const char* what = "an integer") {
    Location l = loc();
    bool neg = eat('-');
    std::string d = digits();
    if (d.size() > 15) fail_at(l, std::string(what) + " out of range");
    long v = std::stol(d);
    return neg ? -v : v;
  }
  /// Whitespace-delimited command argument.
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ';' && s_[pos_] != '#')
      advance();
    return std::string(s_.substr(b, pos_ - b));
  }

  /// Raw polynomial token with its location; empty at ',' ';' or the end.
  std::pair<std::string, Location> poly_token() {
    skip();
    Location l = loc();
    if (pos_ >= s_.size()) return {"", l};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return {digits(), l};
    if (ident_start(c)) return {ident(), l};
    if (std::string_view("+-*^/()").find(c) != std::string_view::npos) {
      advance();
      return {std::string(1, c), l};
    }
    if (c == ',' || c == ';') return {"", l};
    fail(std::string("unexpected character '") + c + "' in polynomial");
  }

 private:
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i) {
      if (s_[pos_] == '\n') {
        ++loc_.line;
        loc_.column = 1;
      } else {
        ++loc_.column;
      }
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Location loc_;
};

// Recursive descent over polynomial tokens. With a ring it also builds the
// polynomial; without one it only validates against the variable names.
class PolyEval {
 public:
  PolyEval(const PolyText& p, const std::vector<std::string>& vars, const RingPtr& ring)
      : p_(p), vars_(vars), ring_(ring) {}

  std::optional<Polynomial> run() {
    if (p_.tokens.empty()) fail(p_.loc, "expected a polynomial");
    auto r = expr();
    if (i_ < p_.tokens.size()) fail(here(), "unexpected '" + p_.tokens[i_] + "'");
    return r;
  }

 private:
  using Opt = std::optional<Polynomial>;

  [[noreturn]] static void fail(Location l, const std::string& msg) { throw ScriptError(l, msg); }
  Location here() const { return i_ < p_.token_locs.size() ? p_.token_locs[i_] : end_loc(); }
  Location end_loc() const { return p_.token_locs.empty() ? p_.loc : p_.token_locs.back(); }
  const std::string* peek() const { return i_ < p_.tokens.size() ? &p_.tokens[i_] : nullptr; }
  bool eat(const char* t) {
    if (peek() && *peek() == t) {
      ++i_;
      return true;
    }
    return false;
  }

  static Opt combine(const Opt& a, const Opt& b, char op) {
    if (!a || !b) return std::nullopt;
    switch (op) {
      case '+': return *a + *b;
      case '-': return *a - *b;
      default: return *a * *b;
    }
  }

  Opt expr() {
    Opt acc;
    if (ring_) acc = Polynomial(ring_);
    bool first = true;
    for (;;) {
      char op = '+';
      if (eat("+")) {
      } else if (eat("-")) {
        op = '-';
      } else if (!first) {
        break;
      }
      acc = combine(acc, term(), op);
      first = false;
    }
    return acc;
  }

  Opt term() {
    Opt acc = factor();
    for (;;) {
      if (eat("*")) {
        acc = combine(acc, factor(), '*');
      } else if (peek() && (std::isalnum(static_cast<unsigned char>((*peek())[0])) || *peek() == "(" ||
                            (*peek())[0] == '_')) {
        fail(here(), "expected '*' between factors");
      } else {
        return acc;
      }
    }
  }

  Opt factor() {
    Opt base = primary();
    if (eat("^")) {
      const std::string* t = peek();
      if (!t || !std::isdigit(static_cast<unsigned char>((*t)[0]))) fail(here(), "expected an exponent after '^'");
      if (t->size() > 6) fail(here(), "exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(*t));
      ++i_;
      if (base) base = base->pow(e);
    }
    return base;
  }

  Opt primary() {
    const std::string* t = peek();
    if (!t) fail(end_loc(), "unexpected end of polynomial");
    Location l = here();
    if (*t == "(") {
      ++i_;
      Opt e = expr();
      if (!eat(")")) fail(here(), "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>((*t)[0]))) {
      mpz_class num(*t), den(1);
      ++i_;
      if (eat("/")) {
        const std::string* d = peek();
        if (!d || !std::isdigit(static_cast<unsigned char>((*d)[0])))
          fail(here(), "expected an integer denominator");
        den = mpz_class(*d);
        if (den == 0) fail(here(), "division by zero");
        ++i_;
      }
      if (!ring_) return std::nullopt;
      const Field& k = ring_->field();
      if (!k.is_rationals() && den % k.characteristic() == 0)
        fail(l, "denominator divisible by the characteristic");
      return Polynomial::constant(ring_, k.from_fraction(num, den));
    }
    if (ident_start((*t)[0])) {
      auto it = std::find(vars_.begin(), vars_.end(), *t);
      if (it == vars_.end()) fail(l, "unknown variable " + *t);
      ++i_;
      if (!ring_) return std::nullopt;
      return Polynomial::variable(ring_, static_cast<std::size_t>(it - vars_.begin()));
    }
    fail(l, "unexpected '" + *t + "'");
  }

  const PolyText& p_;
  const std::vector<std::string>& vars_;
  RingPtr ring_;
  std::size_t i_ = 0;
};

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : sc_(text) {}

  SessionScript run() {
    SessionScript s;
    while (!sc_.at_end()) {
      Location l = sc_.loc();
      s.statements.push_back(statement());
      s.locations.push_back(l);
    }
    return s;
  }

 private:
  enum class Kind { ring, ideal, map, instance };
  struct Entry {
    Kind kind;
    std::string ring;  ///< for rings and ideals: the underlying ring
    std::string source, target;
  };

  Statement statement() {
    Location l = sc_.loc();
    std::string kw = sc_.ident("a statement");
    if (kw == "ring") return ring();
    if (kw == "ideal") return ideal();
    if (kw == "map") return map();
    if (kw == "instance") return instance();
    if (std::find(command_names().begin(), command_names().end(), kw) != command_names().end()) return command(kw, l);
    Scanner::fail_at(l, "unknown statement '" + kw + "'");
  }

  void expect_keyword(std::string_view w) {
    if (!sc_.eat_keyword(w)) sc_.fail("expected '" + std::string(w) + "'" + sc_.found());
  }

  std::string new_name() {
    Location l = sc_.loc();
    std::string n = sc_.ident();
    if (entries_.count(n)) Scanner::fail_at(l, "name " + n + " is already declared");
    return n;
  }

  const Entry& declared(const std::string& n, Location l, std::initializer_list<Kind> kinds, const char* what) {
    auto it = entries_.find(n);
    if (it == entries_.end()) Scanner::fail_at(l, "undeclared name " + n);
    if (std::find(kinds.begin(), kinds.end(), it->second.kind) == kinds.end())
      Scanner::fail_at(l, n + " is not " + what);
    return it->second;
  }

  std::string algebra_ref(const char* what = "a ring or ideal") {
    Location l = sc_.loc();
    std::string n = sc_.ident();
    declared(n, l, {Kind::ring, Kind::ideal}, what);
    return n;
  }

  RingDecl ring() {
    RingDecl d;
    d.name = new_name();
    expect_keyword("over");
    if (sc_.eat_keyword("QQ")) {
      d.characteristic = 0;
    } else if (sc_.eat_keyword("GF")) {
      sc_.expect('(');
      Location l = sc_.loc();
      long p = sc_.integer("modulus");
      if (p > 2147483647 || !is_prime(static_cast<unsigned long>(std::max(p, 0L))))
        Scanner::fail_at(l, "modulus " + std::to_string(p) + " is not a prime");
      d.characteristic = static_cast<unsigned>(p);
      sc_.expect(')');
    } else {
      sc_.fail("expected QQ or GF(p)" + sc_.found());
    }
    expect_keyword("vars");
    std::set<std::string> seen;
    do {
      Location l = sc_.loc();
      std::string v = sc_.ident("a variable");
      if (!seen.insert(v).second) Scanner::fail_at(l, "duplicate variable " + v);
      int w = 1;
      if (sc_.eat(':')) {
        Location lw = sc_.loc();
        long wl = sc_.integer("weight");
        if (wl <= 0) Scanner::fail_at(lw, "weight of " + v + " must be positive");
        if (wl > 1000000) Scanner::fail_at(lw, "weight of " + v + " too large");
        w = static_cast<int>(wl);
      }
      d.vars.emplace_back(v, w);
    } while (sc_.eat(','));
    sc_.expect(';');
    std::vector<std::string> names;
    for (const auto& [v, w] : d.vars) names.push_back(v);
    ring_vars_[d.name] = names;
    entries_[d.name] = {Kind::ring, d.name, "", ""};
    return d;
  }

  std::vector<PolyText> poly_list(const std::vector<std::string>& vars) {
    std::vector<PolyText> out;
    do {
      PolyText p;
      p.loc = sc_.loc();
      int depth = 0;
      for (;;) {
        char c = sc_.peek();
        if (c == '\0' || ((c == ',' || c == ';') && depth == 0)) break;
        auto [t, l] = sc_.poly_token();
        if (t.empty()) break;
        if (t == "(") ++depth;
        if (t == ")") --depth;
        p.tokens.push_back(t);
        p.token_locs.push_back(l);
      }
      PolyEval(p, vars, nullptr).run();
      out.push_back(std::move(p));
    } while (sc_.eat(','));
    sc_.expect(';');
    return out;
  }

  IdealDecl ideal() {
    IdealDecl d;
    d.name = new_name();
    expect_keyword("in");
    Location l = sc_.loc();
    d.ring = sc_.ident();
    declared(d.ring, l, {Kind::ring}, "a ring");
    sc_.expect('=');
    d.gens = poly_list(ring_vars_.at(d.ring));
    entries_[d.name] = {Kind::ideal, d.ring, "", ""};
    return d;
  }

  MapDecl map() {
    MapDecl d;
    d.name = new_name();
    sc_.expect(':');
    d.source = algebra_ref();
    sc_.expect("->");
    d.target = algebra_ref();
    sc_.expect('=');
    Location l = sc_.loc();
    const auto& tvars = ring_vars_.at(entries_.at(d.target).ring);
    d.images = poly_list(tvars);
    const std::size_t n = ring_vars_.at(entries_.at(d.source).ring).size();
    if (d.images.size() != n)
      Scanner::fail_at(l, "map " + d.name + " needs " + std::to_string(n) + " images, got " +
                              std::to_string(d.images.size()));
    entries_[d.name] = {Kind::map, "", d.source, d.target};
    return d;
  }

  std::vector<std::vector<long>> exponent_list() {
    std::vector<std::vector<long>> out;
    sc_.expect('[');
    do {
      sc_.expect('(');
      std::vector<long> v;
      do v.push_back(sc_.integer("exponent"));
      while (sc_.eat(','));
      sc_.expect(')');
      out.push_back(std::move(v));
    } while (sc_.eat(','));
    sc_.expect(']');
    return out;
  }

  InstanceDecl instance() {
    InstanceDecl d;
    d.name = new_name();
    sc_.expect('=');
    sc_.expect('(');
    d.a = algebra_ref();
    sc_.expect(',');
    d.b = algebra_ref();
    sc_.expect(',');
    Location lm = sc_.loc();
    d.map = sc_.ident();
    const Entry& m = declared(d.map, lm, {Kind::map}, "a map");
    if (m.source != d.a || m.target != d.b)
      Scanner::fail_at(lm, "map " + d.map + " goes from " + m.source + " to " + m.target + ", not from " + d.a +
                               " to " + d.b);
    sc_.expect(')');
    std::set<std::string> seen;
    while (sc_.at_ident()) {
      Location l = sc_.loc();
      std::string c = sc_.ident("a clause");
      if (!seen.insert(c == "purely_inseparable" ? "separable" : c).second)
        Scanner::fail_at(l, "repeated or conflicting clause " + c);
      if (c == "char") {
        Location lc = sc_.loc();
        long p = sc_.integer("characteristic");
        if (p < 0 || (p > 0 && !is_prime(static_cast<unsigned long>(p))))
          Scanner::fail_at(lc, "characteristic must be 0 or a prime");
        d.characteristic = static_cast<unsigned>(p);
      } else if (c == "pe") {
        Location lp = sc_.loc();
        long q = sc_.integer("p-power");
        if (q <= 0) Scanner::fail_at(lp, "p-power must be positive");
        d.p_power = q;
      } else if (c == "domain") {
        d.domain = true;
      } else if (c == "separable") {
        d.claim = Separability::separable;
      } else if (c == "purely_inseparable") {
        d.claim = Separability::purely_inseparable;
      } else if (c == "toric") {
        ToricData t;
        t.a_exponents = exponent_list();
        t.b_exponents = exponent_list();
        d.toric = std::move(t);
      } else {
        Scanner::fail_at(l, "unknown instance clause '" + c + "'");
      }
    }
    sc_.expect(';');
    entries_[d.name] = {Kind::instance, "", "", ""};
    return d;
  }

  CommandStmt command(const std::string& name, Location l) {
    CommandStmt c{name, {}};
    while (sc_.peek() != ';' && sc_.peek() != '\0' && sc_.peek() != '#') {
      std::string w = sc_.word();
      if (w.empty()) break;
      c.args.push_back(w);
    }
    sc_.expect(';');
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (c.args.size() < lo || c.args.size() > hi)
        Scanner::fail_at(l, name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                                " argument(s)");
    };
    auto integer_arg = [&](const std::string& s) {
      if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit) || std::stol(s) <= 0)
        Scanner::fail_at(l, name + ": expected a positive integer, found '" + s + "'");
    };
    if (name == "invariants" || name == "hilbert" || name == "betti") {
      need(1, 1);
      declared(c.args[0], l, {Kind::ring, Kind::ideal}, "a ring or ideal");
    } else if (name == "kernel") {
      need(1, 1);
      declared(c.args[0], l, {Kind::map}, "a map");
    } else if (name == "veronese") {
      need(2, 3);
      declared(c.args[0], l, {Kind::ring, Kind::ideal}, "a ring or ideal");
      integer_arg(c.args[1]);
      if (c.args.size() == 3 && c.args[2] != "regraded" && c.args[2] != "ambient")
        Scanner::fail_at(l, "veronese: convention must be regraded or ambient");
    } else if (name == "frobenius") {
      need(2, 2);
      declared(c.args[0], l, {Kind::ring, Kind::ideal}, "a ring or ideal");
      integer_arg(c.args[1]);
    } else if (name == "check") {
      need(2, 2);
      if (std::find(theorem_ids().begin(), theorem_ids().end(), c.args[0]) == theorem_ids().end())
        Scanner::fail_at(l, "unknown theorem " + c.args[0]);
      declared(c.args[1], l, {Kind::instance}, "an instance");
    }
    return c;
  }

  Scanner sc_;
  std::map<std::string, Entry> entries_;
  std::map<std::string, std::vector<std::string>> ring_vars_;
};

std::string exponents_to_string(const std::vector<std::vector<long>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t j = 0; j < v[i].size(); ++j) s += (j ? ", " : "") + std::to_string(v[i][j]);
    s += ")";
  }
  return s + "]";
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    if constexpr (std::is_same_v<T, PolyText>)
      s += v[i].to_string();
    else
      s += v[i];
  }
  return s;
}

}  // namespace

SessionScript parse_script(std::string_view text) { return ScriptParser(text).run(); }

std::string print_script(const SessionScript& s) {
  std::ostringstream out;
  for (const auto& st : s.statements) {
    if (auto* r = std::get_if<RingDecl>(&st)) {
      out << "ring " << r->name << " over "
          << (r->characteristic ? "GF(" + std::to_string(r->characteristic) + ")" : std::string("QQ")) << " vars ";
      for (std::size_t i = 0; i < r->vars.size(); ++i)
        out << (i ? ", " : "") << r->vars[i].first << ":" << r->vars[i].second;
      out << ";\n";
    } else if (auto* d = std::get_if<IdealDecl>(&st)) {
      out << "ideal " << d->name << " in " << d->ring << " = " << join(d->gens, ", ") << ";\n";
    } else if (auto* m = std::get_if<MapDecl>(&st)) {
      out << "map " << m->name << " : " << m->source << " -> " << m->target << " = " << join(m->images, ", ") << ";\n";
    } else if (auto* in = std::get_if<InstanceDecl>(&st)) {
      out << "instance " << in->name << " = (" << in->a << ", " << in->b << ", " << in->map << ")";
      if (in->characteristic) out << " char " << *in->characteristic;
      if (in->p_power) out << " pe " << *in->p_power;
      if (in->domain) out << " domain";
      if (in->claim == Separability::separable) out << " separable";
      if (in->claim == Separability::purely_inseparable) out << " purely_inseparable";
      if (in->toric)
        out << " toric " << exponents_to_string(in->toric->a_exponents) << " "
            << exponents_to_string(in->toric->b_exponents);
      out << ";\n";
    } else if (auto* c = std::get_if<CommandStmt>(&st)) {
      out << c->name;
      for (const auto& a : c->args) out << " " << a;
      out << ";\n";
    }
  }
  return out.str();
}

Session::Session(const SessionScript& script) {
  std::map<std::string, std::vector<std::string>> vars;
  auto build = [&](const std::vector<PolyText>& ps, const RingPtr& R) {
    std::vector<Polynomial> out;
    for (const auto& p : ps) out.push_back(*PolyEval(p, R->names(), R).run());
    return out;
  };
  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    const Statement& st = script.statements[i];
    const Location l = i < script.locations.size() ? script.locations[i] : Location{};
    try {
      if (auto* r = std::get_if<RingDecl>(&st)) {
        std::vector<std::string> names;
        std::vector<int> w;
        for (const auto& [v, wt] : r->vars) {
          names.push_back(v);
          w.push_back(wt);
        }
        Field k = r->characteristic ? Field::prime(r->characteristic) : Field::rationals();
        RingPtr R = PolyRing::make(k, names, w);
        rings_[r->name] = R;
        algebras_[r->name] = Presentation::polynomial_ring(R);
      } else if (auto* d = std::get_if<IdealDecl>(&st)) {
        const RingPtr& R = rings_.at(d->ring);
        algebras_[d->name] = Presentation(R, build(d->gens, R));
      } else if (auto* m = std::get_if<MapDecl>(&st)) {
        const Presentation& T = algebras_.at(m->target);
        maps_[m->name] = GradedRingMap(algebras_.at(m->source), T, build(m->images, T.ring()));
      } else if (auto* in = std::get_if<InstanceDecl>(&st)) {
        Presentation A = algebras_.at(in->a), B = algebras_.at(in->b);
        const GradedRingMap& phi = maps_.at(in->map);
        if (in->characteristic && *in->characteristic != A.field().characteristic())
          throw InputError("declared characteristic " + std::to_string(*in->characteristic) +
                           " differs from that of " + in->a);
        GradedRingMap inc = phi;
        if (in->domain)
          inc = GradedRingMap(A.with_domain_assertion(true), B.with_domain_assertion(true), phi.images());
        instances_[in->name] = make_instance(in->name, inc, in->p_power, in->claim, in->toric);
      }
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(l, e.what());
    }
  }
}

const Presentation& Session::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw InputError("unknown ring or ideal " + name);
  return it->second;
}

const GradedRingMap& Session::map(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw InputError("unknown map " + name);
  return it->second;
}

const ExtensionInstance& Session::instance(const std::string& name) const {
  auto it = instances_.find(name);
  if (it == instances_.end()) throw InputError("unknown instance " + name);
  return it->second;
}

void Session::add_builtin(const ExtensionInstance& inst) {
  instances_.emplace(inst.name, inst);
  algebras_.emplace(inst.name + ".A", inst.A);
  algebras_.emplace(inst.name + ".B", inst.B);
  maps_.emplace(inst.name, inst.inclusion);
}

}  // namespace gi::cli
