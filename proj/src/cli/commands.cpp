#include <algorithm>
#include <cctype>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntx/cli.hpp"

namespace ntx::cli {

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string base_name(const std::string& name) { return name.substr(0, name.find(':')); }

CheckRecord record(std::string name, std::string anchor, Verdict v = Verdict::pass) {
  CheckRecord c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.hypotheses = "none";
  c.verdict = v;
  return c;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(tok.substr(b, tok.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

const std::vector<std::string>& own_names(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> names{
      {"validate", {"map_bilinear", "map_symmetric", "map_associative", "ring_axioms"}},
      {"classify", {"ring_axioms", "element", "ring_predicates"}},
      {"ideals", {"ring_axioms", "ideal_lattice"}},
      {"homogeneity", {"ring_axioms"}},
      {"localize", {"ring_axioms"}},
      {"factor", {"ring_axioms", "element", "u_set", "irreducibility", "factorizations"}},
      {"suite", {}}};
  return names.at(command);
}

std::string list_elements(const FiniteRing& r, const ElementSet& s, std::size_t max_listed = 16) {
  std::vector<std::string> parts;
  for (Elem x : s.elements()) {
    if (parts.size() == max_listed) {
      parts.push_back("... (" + std::to_string(s.size()) + " in all)");
      break;
    }
    parts.push_back(r.name(x));
  }
  return "{" + join(parts, ", ") + "}";
}

struct Context {
  const SpecDocument& spec;
  const Flags& flags;
  const NTrivialExtension& e;
  SuiteOptions options;
  std::vector<Coords> elements;  ///< from --element
};

std::vector<CheckRecord> cmd_validate(Context& cx) {
  const NTrivialExtension& e = cx.e;
  const ValidationReport& v = e.report();
  std::vector<CheckRecord> out;
  auto law = [&](const char* name, const char* anchor, bool ok, const std::vector<std::string>& laws) {
    CheckRecord c = record(name, anchor);
    for (const auto& w : v.witnesses)
      if (std::find(laws.begin(), laws.end(), w.law) != laws.end()) c.witnesses.push_back(w.text);
    if (!ok) {
      c.verdict = Verdict::fail;
      if (c.witnesses.empty()) c.witnesses.push_back("law fails");
    }
    out.push_back(std::move(c));
  };
  law("map_bilinear", "each phi_{i,j} is additive in both slots and R-homogeneous", v.bilinear_ok,
      {"additive-left", "additive-right", "homogeneous"});
  law("map_symmetric", "phi_{i,j}(a,b) = phi_{j,i}(b,a) for all admissible i, j", v.symmetric_ok, {"symmetric"});
  law("map_associative", "phi_{i+j,k}(phi_{i,j}(a,b),c) = phi_{i,j+k}(a,phi_{j,k}(b,c)) whenever i + j + k <= n",
      v.associative_ok, {"associative"});
  CheckRecord c = record("ring_axioms", "the extension is a commutative associative ring with identity (1,0,...,0)",
                         Verdict::info);
  c.facts.push_back("strictness: " + std::string(e.strictness() == Strictness::strict ? "strict" : "exploratory"));
  c.facts.push_back("order: " + std::to_string(e.order()));
  c.facts.push_back("origin: " + to_string(e.family().origin()));
  for (const auto& [ij, val] : e.family().constants())
    c.facts.push_back("r" + std::to_string(ij.first) + std::to_string(ij.second) + " = " + e.ring()->name(val));
  for (const auto& w : e.warnings()) c.facts.push_back("warning: " + w);
  if (auto t = e.nonassociative_witness())
    c.facts.push_back("nonassociative triple: (" + e.name(t->a) + "*" + e.name(t->b) + ")*" + e.name(t->c) + " = " +
                      e.name(t->lhs) + ", " + e.name(t->a) + "*(" + e.name(t->b) + "*" + e.name(t->c) +
                      ") = " + e.name(t->rhs));
  if (auto p = e.noncommutative_witness())
    c.facts.push_back("noncommuting pair: " + e.name(p->first) + ", " + e.name(p->second));
  out.push_back(std::move(c));
  return out;
}

CheckRecord element_record(const NTrivialExtension& e, const Coords& x, const RingClassification& cl) {
  const RingPtr& s = e.flat();
  const Elem ix = e.encode(x);
  CheckRecord c = record("element:" + e.name(x), "classification and products of one element", Verdict::info);
  c.facts.push_back(e.name(x) + "^2 = " + e.name(e.mul(x, x)));
  const Coords t = tilde(e, x);
  c.facts.push_back(e.name(x) + " * " + e.name(t) + " = " + e.name(e.mul(x, t)));
  c.facts.push_back("unit: " + yes(cl.units.contains(ix)));
  c.facts.push_back("zero divisor: " + yes(cl.zero_divisors.contains(ix)));
  c.facts.push_back("idempotent: " + yes(cl.idempotents.contains(ix)));
  c.facts.push_back("nilpotent: " + yes(cl.nilpotents.contains(ix)));
  c.facts.push_back("principal ideal size: " + std::to_string(principal(s, ix).size()));
  return c;
}

std::vector<CheckRecord> cmd_classify(Context& cx) {
  const NTrivialExtension& e = cx.e;
  cx.options.only = {"classification"};
  std::vector<CheckRecord> out = spectrum_checks(e, cx.options);
  const RingClassification cl = classify(*e.flat());
  const RingPredicates p = ring_predicates(*e.flat());
  CheckRecord c = record("ring_predicates", "domain, field, local, presimplifiable and strongly associate verdicts",
                         Verdict::info);
  c.facts.push_back("domain: " + yes(p.is_domain));
  c.facts.push_back("field: " + yes(p.is_field));
  c.facts.push_back("local: " + yes(p.is_local));
  c.facts.push_back("presimplifiable: " + yes(p.is_presimplifiable) +
                    (p.is_presimplifiable ? "" : " (" + p.presimplifiable_witness + ")"));
  c.facts.push_back("strongly associate: " + yes(p.is_strongly_associate) +
                    (p.is_strongly_associate ? "" : " (" + p.strongly_associate_witness + ")"));
  c.facts.push_back("units: " + list_elements(*e.flat(), cl.units));
  c.facts.push_back("idempotents: " + list_elements(*e.flat(), cl.idempotents));
  out.push_back(std::move(c));
  for (const Coords& x : cx.elements) out.push_back(element_record(e, x, cl));
  return out;
}

std::vector<CheckRecord> cmd_ideals(Context& cx) {
  const NTrivialExtension& e = cx.e;
  cx.options.only = {"spectrum_primes", "spectrum_maximals", "spectrum_radicals", "radical_closed_forms",
                     "krull_dimension", "ideals_over_zero_module", "extended_ideals", "projection_kernels"};
  std::vector<CheckRecord> out = spectrum_checks(e, cx.options);
  const Spectrum sp = spectrum(e.flat(), cx.spec.caps.max_ideals);
  CheckRecord c = record("ideal_lattice", "ideals, primes and maximal ideals of the extension", Verdict::info);
  c.facts.push_back("ideals: " + std::to_string(sp.ideals.size()));
  for (const auto& p : sp.primes) c.facts.push_back("prime: " + describe(p));
  for (const auto& m : sp.maximals) c.facts.push_back("maximal: " + describe(m));
  c.facts.push_back("nilradical: " + describe(sp.nilradical));
  c.facts.push_back("Jacobson radical: " + describe(sp.jacobson));
  c.facts.push_back("Krull dimension: " + std::to_string(sp.krull_dimension));
  out.push_back(std::move(c));
  return out;
}

std::vector<CheckRecord> cmd_homogeneity(Context& cx) {
  for (const Coords& x : cx.elements) cx.options.recorded.push_back(x);
  cx.options.only = {"grading_n0", "grading_z_mod", "grading_gamma", "homogeneous_arithmetic", "homogeneity_class",
                     "principal_homogeneity"};
  std::vector<CheckRecord> out = structure_checks(cx.e, cx.options);
  for (auto& c : homogeneity_checks(cx.e, cx.options)) out.push_back(std::move(c));
  return out;
}

MultiplicativeSet resolve_mult_set(const Context& cx, const std::string& text, std::string& label) {
  for (const auto& [name, s] : cx.spec.mult_sets)
    if (name == text) {
      label = name;
      return s;
    }
  std::vector<Elem> seed;
  for (const auto& w : split_list(text, ',')) {
    auto x = cx.e.ring()->parse(w);
    if (!x) throw UsageError("--mult-set: unknown element '" + w + "' of " + cx.e.ring()->label());
    seed.push_back(*x);
  }
  label = "closure of {" + text + "}";
  return mult_closure(cx.e.ring(), seed, true);
}

std::vector<CheckRecord> cmd_localize(Context& cx) {
  cx.options.only = {"localization"};
  std::vector<std::pair<std::string, std::optional<MultiplicativeSet>>> sets;
  if (cx.flags.mult_set) {
    std::string label;
    MultiplicativeSet s = resolve_mult_set(cx, *cx.flags.mult_set, label);
    sets.emplace_back(label, s);
  } else if (!cx.spec.mult_sets.empty()) {
    for (const auto& [name, s] : cx.spec.mult_sets) sets.emplace_back(name, s);
  } else {
    sets.emplace_back("", std::nullopt);
  }
  std::vector<CheckRecord> out;
  for (const auto& [label, s] : sets) {
    cx.options.mult_set = s;
    cx.options.mult_set_name = label;
    for (auto& c : localization_checks(cx.e, cx.options)) {
      if (sets.size() > 1) c.name += ":" + label;
      if (s) c.facts.insert(c.facts.begin(), "S = " + list_elements(*cx.e.ring(), s->elements));
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckRecord> cmd_factor(Context& cx) {
  const NTrivialExtension& e = cx.e;
  if (cx.elements.empty()) throw UsageError("factor needs --element");
  const RingPtr& s = e.flat();
  const DivisibilityIndex d(s, cx.spec.caps.max_order);
  const RingClassification cl = classify(*s);
  const std::size_t max_len = cx.flags.max_len.value_or(cx.spec.caps.max_len);
  std::vector<CheckRecord> out;
  for (const Coords& x : cx.elements) {
    const std::string tag = ":" + e.name(x);
    const Elem a = e.encode(x);
    out.push_back(element_record(e, x, cl));

    CheckRecord u = record("u_set" + tag, "U(a) = {r : r<a> = <a>}", Verdict::info);
    const ElementSet ua = u_of(d, a);
    u.facts.push_back("U(" + e.name(x) + ") = " + list_elements(*s, ua) + ", " + std::to_string(ua.size()) +
                      " elements");
    out.push_back(std::move(u));

    CheckRecord irr = record("irreducibility" + tag,
                             "irreducible, strongly irreducible, very strongly irreducible and m-irreducible flags",
                             Verdict::info);
    CheckRecord f = record("factorizations" + tag,
                           "factorizations into nonunits up to order and associates, each split into U-factorizations "
                           "whose irrelevant factors lie in U of the relevant product");
    if (a == 0 || d.is_unit(a)) {
      const std::string why = e.name(x) + (a == 0 ? " is zero" : " is a unit") + ": factorizations need a nonzero nonunit";
      irr.verdict = Verdict::skipped;
      irr.hypotheses = why;
      f.verdict = Verdict::skipped;
      f.hypotheses = why;
      out.push_back(std::move(irr));
      out.push_back(std::move(f));
      continue;
    }
    const IrreducibilityProfile p = irreducibility_profile(e, x);
    irr.facts.push_back("irreducible: " + yes(p.irreducible));
    irr.facts.push_back("strongly irreducible: " + yes(p.strongly));
    irr.facts.push_back("very strongly irreducible: " + yes(p.very_strongly));
    irr.facts.push_back("m-irreducible: " + yes(p.m_irreducible));
    if (!p.witness.empty()) irr.facts.push_back("reducible as " + p.witness);
    if (p.idempotent_obstruction) {
      irr.facts.push_back("homogeneous over R with a nontrivial idempotent: all flags false " +
                          yes(*p.idempotent_obstruction));
      if (!*p.idempotent_obstruction) {
        irr.verdict = Verdict::fail;
        irr.witnesses.push_back(e.name(x) + " is homogeneous of positive degree yet has an irreducibility flag");
      }
    }
    out.push_back(std::move(irr));

    const FactorEnumeration fe = factor_enumerate(d, a, max_len, cx.spec.caps.max_results);
    f.hypotheses = "lengths up to " + std::to_string(fe.max_len);
    const FactorCensus& cen = fe.census;
    std::vector<std::string> atoms;
    for (Elem t : cen.atom_list) atoms.push_back(s->name(t));
    f.facts.push_back("atom classes dividing " + e.name(x) + ": " + join(atoms, ", "));
    f.facts.push_back("nonassociate divisors (unit class included): " + std::to_string(cen.nonassociate_divisor_count));
    f.facts.push_back("relevant factor classes: " + std::to_string(cen.relevant_factor_class_count));
    f.facts.push_back("factorizations: " + std::to_string(fe.factorizations.size()) + ", longest " +
                      std::to_string(cen.max_factorization_length_observed));
    f.facts.push_back("U-factorizations: " + std::to_string(fe.u_factorizations.size()));
    f.facts.push_back("lengths bounded: " + yes(cen.bounded) +
                      (cen.bounded ? "" : " (" + cen.unbounded_witness + ")"));
    const std::size_t listed = 40;
    for (std::size_t k = 0; k < fe.factorizations.size() && k < listed; ++k)
      f.facts.push_back("factorization: " + describe(*s, fe.factorizations[k]));
    if (fe.factorizations.size() > listed)
      f.facts.push_back("factorizations not listed: " + std::to_string(fe.factorizations.size() - listed));
    for (std::size_t k = 0; k < fe.u_factorizations.size(); ++k) {
      std::string why;
      if (!is_u_factorization(*s, fe.u_factorizations[k], &why)) {
        f.verdict = Verdict::fail;
        f.witnesses.push_back(describe(*s, fe.u_factorizations[k]) + ": " + why);
      }
      if (k < listed) f.facts.push_back("U-factorization: " + describe(*s, fe.u_factorizations[k]));
    }
    if (fe.u_factorizations.size() > listed)
      f.facts.push_back("U-factorizations not listed: " + std::to_string(fe.u_factorizations.size() - listed));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CheckRecord> cmd_suite(Context& cx) {
  for (const Coords& x : cx.elements) cx.options.recorded.push_back(x);
  return run_suite(cx.e, cx.options);
}

void describe_instance(ReportDocument& rep, const SpecDocument& spec) {
  const NTrivialExtension& e = *spec.extension;
  rep.instance = {{"spec", spec.origin},
                  {"label", e.label()},
                  {"n", std::to_string(e.n())},
                  {"order", std::to_string(e.order())},
                  {"ring", e.ring()->label()},
                  {"ring_kind", spec.ring_kind},
                  {"maps", spec.maps_kind},
                  {"strictness", e.strictness() == Strictness::strict ? "strict" : "exploratory"}};
  for (int i = 1; i <= e.n(); ++i) rep.instance.emplace_back("M_" + std::to_string(i), e.module(i)->label());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "classify", "ideals", "homogeneity",
                                              "localize", "factor",   "suite"};
  return names;
}

ReportDocument run_command(const std::string& command, const SpecDocument& spec, const Flags& flags) {
  ReportDocument rep;
  rep.command = command;
  describe_instance(rep, spec);
  const auto& cmds = command_names();
  try {
    if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
      throw UsageError("unknown command '" + command + "'");
    for (const auto& name : flags.checks) {
      const auto& own = own_names(command);
      if (!is_suite_check(name) && std::find(own.begin(), own.end(), base_name(name)) == own.end())
        throw UsageError("unknown check name '" + name + "'");
    }
    const NTrivialExtension& e = *spec.extension;
    const std::size_t max_order = flags.max_order.value_or(spec.caps.max_order);
    // validate works on the map tables only and never flattens the extension.
    if (command != "validate" && e.order() > max_order)
      throw CapExceeded("extension order " + std::to_string(e.order()) + " exceeds --max-order " +
                        std::to_string(max_order));
    Context cx{spec, flags, e, {}, {}};
    cx.options.max_ideals = spec.caps.max_ideals;
    cx.options.recorded = spec.recorded;
    cx.options.classes = spec.ideal_classes;
    for (const auto& text : flags.elements) {
      auto c = e.parse(text);
      if (!c) throw UsageError("--element: cannot read '" + text + "' as an element of " + e.label());
      cx.elements.push_back(*c);
    }
    if (command == "suite") {
      cx.options.only = flags.checks;
      if (flags.mult_set) {
        std::string label;
        cx.options.mult_set = resolve_mult_set(cx, *flags.mult_set, label);
        cx.options.mult_set_name = label;
      } else if (!spec.mult_sets.empty()) {
        cx.options.mult_set = spec.mult_sets.front().second;
        cx.options.mult_set_name = spec.mult_sets.front().first;
      }
    }

    if (command == "validate") {
      rep.checks = cmd_validate(cx);
    } else if (auto refusal = exploratory_refusal(e)) {
      rep.checks = {*refusal};
    } else if (command == "classify") {
      rep.checks = cmd_classify(cx);
    } else if (command == "ideals") {
      rep.checks = cmd_ideals(cx);
    } else if (command == "homogeneity") {
      rep.checks = cmd_homogeneity(cx);
    } else if (command == "localize") {
      rep.checks = cmd_localize(cx);
    } else if (command == "factor") {
      rep.checks = cmd_factor(cx);
    } else {
      rep.checks = cmd_suite(cx);
    }
    if (!flags.checks.empty() && command != "suite") {
      std::vector<CheckRecord> kept;
      for (auto& c : rep.checks)
        if (std::find(flags.checks.begin(), flags.checks.end(), base_name(c.name)) != flags.checks.end())
          kept.push_back(std::move(c));
      rep.checks = std::move(kept);
    }
    const bool failed =
        std::any_of(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& c) { return c.verdict == Verdict::fail; });
    rep.exit_status = failed ? exit_check_failed : exit_ok;
  } catch (const CapExceeded& err) {
    rep.error = std::string("cap exceeded: ") + err.what();
    rep.exit_status = exit_cap;
  } catch (const UsageError& err) {
    rep.error = err.what();
    rep.exit_status = exit_usage;
  } catch (const HypothesisError& err) {
    rep.error = err.what();
    rep.exit_status = exit_usage;
  }
  return rep;
}

std::string render_json(const ReportDocument& r, bool timings) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["command"] = r.command;
  json inst = json::object();
  for (const auto& [k, v] : r.instance) inst[k] = v;
  doc["instance"] = inst;
  json checks = json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"info", 0}};
  for (const auto& c : r.checks) {
    json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["hypotheses"] = c.hypotheses;
    j["verdict"] = to_string(c.verdict);
    j["witnesses"] = c.witnesses;
    j["facts"] = c.facts;
    if (timings) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(j);
    ++counts[to_string(c.verdict)];
  }
  doc["checks"] = checks;
  doc["summary"] = {{"pass", counts["pass"]},
                    {"fail", counts["fail"]},
                    {"skipped", counts["skipped"]},
                    {"info", counts["info"]}};
  doc["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
  doc["exit_status"] = r.exit_status;
  return doc.dump(2) + "\n";
}

std::string render_text(const ReportDocument& r, bool timings) {
  std::ostringstream out;
  std::string label, order;
  for (const auto& [k, v] : r.instance) {
    if (k == "label") label = v;
    if (k == "order") order = v;
  }
  out << r.command << ": " << label << " (order " << order << ")\n";
  std::map<Verdict, int> counts;
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.verdict);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    tag.resize(8, ' ');
    out << tag << c.name;
    if (timings) out << "  [" << std::fixed << c.runtime_ms << " ms]";
    out << "\n";
    if (c.verdict == Verdict::skipped || (c.hypotheses != "none" && !c.hypotheses.empty()))
      out << "        hypotheses: " << c.hypotheses << "\n";
    for (const auto& w : c.witnesses) out << "        witness: " << w << "\n";
    for (const auto& f : c.facts) out << "        " << f << "\n";
    ++counts[c.verdict];
  }
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  out << "summary: " << counts[Verdict::pass] << " pass, " << counts[Verdict::fail] << " fail, "
      << counts[Verdict::skipped] << " skipped, " << counts[Verdict::info] << " info\n";
  return out.str();
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Finite n-trivial extension laboratory"};
  std::string command, spec_path, format = "text", out_path, checks, mult_set;
  std::vector<std::string> elements;
  std::size_t max_order = 0, max_len = 0;
  Flags flags;
  app.add_option("command", command, "validate | classify | ideals | homogeneity | localize | factor | suite")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("spec", spec_path, "spec file")->required();
  auto* mo = app.add_option("--max-order", max_order, "largest extension order to accept");
  auto* ml = app.add_option("--max-len", max_len, "longest factorization length to enumerate");
  app.add_option("--checks", checks, "comma separated check names");
  app.add_option("--element", elements, "comma separated coordinates, repeatable");
  auto* ms = app.add_option("--mult-set", mult_set, "ring elements generating S, or a set named in the spec");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", flags.timings, "include per-check runtimes");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  if (*mo) flags.max_order = max_order;
  if (*ml) flags.max_len = max_len;
  if (*ms) flags.mult_set = mult_set;
  flags.checks = split_list(checks, ',');
  flags.elements = elements;

  SpecDocument spec;
  try {
    spec = parse_spec(spec_path);
  } catch (const SpecError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    std::cerr << spec_path << ": cap exceeded: " << e.what() << "\n";
    return exit_cap;
  }
  const ReportDocument rep = run_command(command, spec, flags);
  const std::string text = format == "json" ? render_json(rep, flags.timings) : render_text(rep, flags.timings);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return exit_usage;
    }
    out << text;
  }
  if (!rep.error.empty() && (format == "json" || !out_path.empty())) std::cerr << "error: " << rep.error << "\n";
  return rep.exit_status;
}

}  // namespace ntx::cli
