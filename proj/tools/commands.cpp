#include "commands.hpp"

#include "gi/resolution.hpp"

#include <iomanip>

namespace gi::cli {

using nlohmann::json;

namespace {

json opt_int(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

json instance_json(const ExtensionInstance& inst) {
  json j;
  j["name"] = inst.name;
  j["characteristic"] = inst.characteristic;
  j["p-power"] = opt_int(inst.p_power);
  j["field-degree"] = opt_int(inst.field_degree);
  j["separability"] = to_string(inst.separability);
  j["computed-field-data"] = inst.computed_field_data;
  j["A"] = {{"presentation", to_json(inst.A)}};
  j["B"] = {{"presentation", to_json(inst.B)}};
  std::vector<std::string> images;
  for (const auto& im : inst.inclusion.images()) images.push_back(im.to_string());
  j["inclusion"] = images;
  return j;
}

void print_report(std::ostream& out, const InvariantReport& r) {
  out << "  dim                  " << r.dim << "\n"
      << "  depth                " << r.depth << "\n"
      << "  edim                 " << opt_str(r.edim) << "\n"
      << "  multiplicity         " << opt_str(r.multiplicity) << "\n"
      << "  regularity           " << opt_str(r.regularity) << "\n"
      << "  a-invariant          " << r.a_invariant << "\n"
      << "  Cohen-Macaulay       " << yes_no(r.is_cm) << "\n"
      << "  R1                   " << (r.is_r1 ? yes_no(*r.is_r1) : "unknown") << "\n"
      << "  minimal multiplicity " << yes_no(r.has_min_mult) << "\n"
      << "  Hilbert series       " << r.hilbert.to_string() << "\n";
}

void print_verdict(std::ostream& out, const TheoremVerdict& v) {
  out << "check " << v.theorem << " " << v.instance << ": " << to_string(v.conclusion) << "\n";
  for (const auto& c : v.comparisons)
    out << "  " << c.label << ": " << c.lhs << (c.equality ? " = " : " <= ") << c.rhs
        << (c.holds() ? "" : "  (fails)") << "\n";
  for (const auto& h : v.hypotheses) out << "  hypothesis " << h.name << ": " << to_string(h.status) << "\n";
  if (!v.notes.empty()) out << "  notes: " << v.notes << "\n";
}

}  // namespace

json to_json(const InvariantReport& r) {
  return {{"dim", r.dim},
          {"depth", r.depth},
          {"edim", opt_int(r.edim)},
          {"multiplicity", opt_int(r.multiplicity)},
          {"regularity", opt_int(r.regularity)},
          {"a-invariant", r.a_invariant},
          {"is-cm", r.is_cm},
          {"is-r1", r.is_r1 ? json(*r.is_r1) : json(nullptr)},
          {"has-min-mult", r.has_min_mult},
          {"hilbert-series", to_json(r.hilbert)}};
}

json to_json(const HilbertSeries& h) {
  json num = json::array();
  const auto& c = h.numerator().coeffs();
  for (const auto& z : c) num.push_back(big(z));
  return {{"numerator-coeffs", num}, {"denominator-weights", h.denominator_weights()}};
}

json to_json(const TheoremVerdict& v) {
  json hyps = json::array();
  for (const auto& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}});
  json comps = json::array();
  for (const auto& c : v.comparisons)
    comps.push_back({{"label", c.label},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"relation", c.equality ? "=" : "<="},
                     {"holds", c.holds()}});
  return {{"theorem", v.theorem},     {"instance", v.instance},       {"hypotheses", hyps},
          {"lhs", v.lhs},             {"rhs", v.rhs},                 {"comparisons", comps},
          {"conclusion", to_string(v.conclusion)}, {"notes", v.notes}};
}

json to_json(const Presentation& P) {
  std::vector<std::string> rel;
  for (const auto& g : P.generators()) rel.push_back(g.to_string());
  return {{"characteristic", P.field().characteristic()},
          {"variables", P.ring()->names()},
          {"weights", P.ring()->weights()},
          {"relations", rel},
          {"asserted-domain", P.asserted_domain()}};
}

Report::Report(std::uint64_t seed) {
  doc_ = {{"tool-version", kToolVersion},
          {"seed", seed},
          {"instances", json::array()},
          {"verdicts", json::array()},
          {"results", json::array()}};
}

void Report::add_instance(const ExtensionInstance& inst, const InvariantReport* A, const InvariantReport* B) {
  for (const auto& existing : doc_["instances"])
    if (existing["name"] == inst.name) return;
  json j = instance_json(inst);
  if (A) j["A"]["report"] = to_json(*A);
  if (B) j["B"]["report"] = to_json(*B);
  doc_["instances"].push_back(std::move(j));
}

void Report::add_verdict(const TheoremVerdict& v) { doc_["verdicts"].push_back(to_json(v)); }
void Report::add_result(json r) { doc_["results"].push_back(std::move(r)); }

std::string csv_header() { return "name,dim,depth,edim,multiplicity,regularity,a_invariant,is_cm,is_r1,has_min_mult"; }

std::string csv_row(const std::string& name, const InvariantReport& r) {
  auto o = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
  return name + "," + std::to_string(r.dim) + "," + std::to_string(r.depth) + "," + o(r.edim) + "," +
         o(r.multiplicity) + "," + o(r.regularity) + "," + std::to_string(r.a_invariant) + "," +
         (r.is_cm ? "1" : "0") + "," + (r.is_r1 ? (*r.is_r1 ? "1" : "0") : "") + "," + (r.has_min_mult ? "1" : "0");
}

void run_command(const CommandStmt& cmd, const Session& session, const Options& opt, Report& report,
                 std::ostream& out) {
  const bool text = opt.format == Format::text;
  const auto& a = cmd.args;
  auto need = [&](std::size_t n) {
    if (a.size() < n) throw InputError(cmd.name + ": missing argument");
  };
  json res{{"command", cmd.name}, {"arguments", a}};

  if (cmd.name == "invariants") {
    need(1);
    InvariantReport r = invariant_report(session.algebra(a[0]));
    res["report"] = to_json(r);
    if (text) {
      out << "invariants " << a[0] << "\n";
      print_report(out, r);
    } else if (opt.format == Format::csv) {
      out << csv_header() << "\n" << csv_row(a[0], r) << "\n";
    }
  } else if (cmd.name == "hilbert") {
    need(1);
    HilbertSeries h = hilbert_series(session.algebra(a[0]));
    res["hilbert-series"] = to_json(h);
    if (text) out << "hilbert " << a[0] << ": " << h.to_string() << "\n";
  } else if (cmd.name == "betti") {
    need(1);
    const Presentation& P = session.algebra(a[0]);
    BettiTable b = betti_table(P);
    json entries = json::array();
    for (const auto& [ij, n] : b.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"count", n}});
    res["betti"] = {{"entries", entries},
                    {"projective-dimension", b.projective_dimension()},
                    {"regularity", P.is_standard_graded() ? json(b.regularity()) : json(nullptr)}};
    if (text) out << "betti " << a[0] << "\n" << b.to_string();
  } else if (cmd.name == "kernel") {
    need(1);
    auto ker = ring_map_kernel(session.map(a[0]));
    std::vector<std::string> gens;
    for (const auto& g : ker) gens.push_back(g.to_string());
    res["generators"] = gens;
    if (text) {
      out << "kernel " << a[0] << ":" << (gens.empty() ? " 0" : "") << "\n";
      for (const auto& g : gens) out << "  " << g << "\n";
    }
  } else if (cmd.name == "veronese") {
    need(2);
    const int n = std::stoi(a[1]);
    const bool ambient = a.size() > 2 && a[2] == "ambient";
    Presentation V = veronese_presentation(session.algebra(a[0]), n,
                                           ambient ? VeroneseConvention::ambient : VeroneseConvention::regraded);
    res["ring"] = to_json(V);
    if (text) out << "veronese " << a[0] << " " << n << (ambient ? " (ambient)" : " (regraded)") << ": " << V.to_string() << "\n";
  } else if (cmd.name == "frobenius") {
    need(2);
    Presentation F = frobenius_power_presentation(session.algebra(a[0]), std::stol(a[1]));
    res["ring"] = to_json(F);
    if (text) out << "frobenius " << a[0] << " " << a[1] << ": " << F.to_string() << "\n";
  } else if (cmd.name == "check") {
    need(2);
    const ExtensionInstance& inst = session.instance(a[1]);
    InstanceAnalysis an(inst, opt.seed);
    TheoremVerdict v = run_check(a[0], an);
    report.add_instance(inst);
    report.add_verdict(v);
    if (text) print_verdict(out, v);
    return;
  } else {
    throw InputError("unknown command " + cmd.name);
  }
  report.add_result(std::move(res));
}

void run_builtin_suite(const Options& opt, Report& report, std::ostream& out) {
  SuiteReport rep = run_suite(builtin_suite(), opt.seed, opt.parallel);
  for (const auto& rec : rep.instances) report.add_instance(rec.instance, &rec.A, &rec.B);
  for (const auto& v : rep.verdicts) report.add_verdict(v);
  if (opt.format == Format::csv) {
    out << csv_header() << "\n";
    for (const auto& rec : rep.instances) {
      out << csv_row(rec.instance.name + ".A", rec.A) << "\n";
      out << csv_row(rec.instance.name + ".B", rec.B) << "\n";
    }
  } else if (opt.format == Format::text) {
    out << std::left << std::setw(18) << "instance" << std::setw(17) << "theorem" << std::setw(27) << "conclusion"
        << "lhs rhs\n";
    for (const auto& v : rep.verdicts)
      out << std::setw(18) << v.instance << std::setw(17) << v.theorem << std::setw(27) << to_string(v.conclusion)
          << v.lhs << " " << v.rhs << "\n";
  }
}

}  // namespace gi::cli
