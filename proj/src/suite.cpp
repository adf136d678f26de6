#include "ntx/suite.hpp"

#include <algorithm>
#include <chrono>

namespace ntx {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string base_name(const std::string& name) { return name.substr(0, name.find(':')); }

CheckRecord record(std::string name, std::string anchor, std::string hypotheses = "none") {
  CheckRecord c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.hypotheses = std::move(hypotheses);
  c.verdict = Verdict::pass;
  return c;
}

void fail(CheckRecord& c, std::string witness) {
  c.verdict = Verdict::fail;
  c.witnesses.push_back(std::move(witness));
}

void skip(CheckRecord& c, std::string reason) {
  c.verdict = Verdict::skipped;
  c.hypotheses = std::move(reason);
}

/// Runs body and appends the timed record when the options want it.
class Collector {
 public:
  Collector(const SuiteOptions& o, std::vector<CheckRecord>& out) : o_(o), out_(out) {}
  template <class F>
  void run(CheckRecord c, F&& body) {
    if (!o_.wants(c.name)) return;
    Stopwatch w;
    body(c);
    c.runtime_ms = w.ms();
    out_.push_back(std::move(c));
  }

 private:
  const SuiteOptions& o_;
  std::vector<CheckRecord>& out_;
};

std::string describe_set(const NTrivialExtension& e, const ElementSet& s, std::size_t max_listed = 8) {
  std::vector<std::string> parts;
  for (Elem x : s.elements()) {
    if (parts.size() == max_listed) {
      parts.push_back("...");
      break;
    }
    parts.push_back(e.name(e.decode(x)));
  }
  return "{" + join(parts, ", ") + "} (" + std::to_string(s.size()) + " elements)";
}

}  // namespace

bool SuiteOptions::wants(const std::string& name) const {
  if (only.empty()) return true;
  return std::find(only.begin(), only.end(), base_name(name)) != only.end();
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = {
      "ring_axioms", "matrix_representation", "grading_n0", "grading_z_mod", "grading_gamma",
      "augmentation_nilpotent", "canonical_homs", "tilde_lemma", "polynomial_iso", "product_iso",
      "recorded_products", "localization",
      "classification", "spectrum_primes", "spectrum_maximals", "spectrum_radicals", "radical_closed_forms",
      "krull_dimension", "ideals_over_zero_module", "extended_ideals", "projection_kernels",
      "homogeneous_arithmetic", "homogeneity_class", "principal_homogeneity",
      "finite_generation", "pir_characterization", "zpi_characterization", "pi_ring_characterization",
      "chained_characterization", "arithmetical",
      "presimplifiable_lift", "presimplifiable_equivalence", "strongly_associate", "associate_lift",
      "primitive_irreducible_bridge", "idempotent_obstruction", "decomposable_reducible",
      "principal_chain_lemma", "accp", "atomic", "zero_prefix_products", "bfr", "u_bfr", "u_ffr", "u_atomic",
      "reduced_submodule_factorizations"};
  return names;
}

bool is_suite_check(const std::string& name) {
  const auto& names = suite_check_names();
  return std::find(names.begin(), names.end(), base_name(name)) != names.end();
}

std::optional<CheckRecord> exploratory_refusal(const NTrivialExtension& e) {
  if (e.strictness() == Strictness::strict) return std::nullopt;
  CheckRecord c = record("ring_axioms", "the maps form a commutative associative family, so the extension is a ring",
                         "exploratory extension: theorem checks refused");
  const ValidationReport& v = e.report();
  c.facts.push_back("bilinear: " + yes(v.bilinear_ok));
  c.facts.push_back("symmetric: " + yes(v.symmetric_ok));
  c.facts.push_back("associative: " + yes(v.associative_ok));
  if (auto t = e.nonassociative_witness())
    fail(c, "(" + e.name(t->a) + "*" + e.name(t->b) + ")*" + e.name(t->c) + " = " + e.name(t->lhs) + " but " +
                e.name(t->a) + "*(" + e.name(t->b) + "*" + e.name(t->c) + ") = " + e.name(t->rhs));
  if (auto p = e.noncommutative_witness())
    fail(c, e.name(p->first) + "*" + e.name(p->second) + " = " + e.name(e.mul(p->first, p->second)) + " but " +
                e.name(p->second) + "*" + e.name(p->first) + " = " + e.name(e.mul(p->second, p->first)));
  for (const auto& w : v.witnesses) c.witnesses.push_back(w.text);
  if (c.witnesses.empty()) c.verdict = Verdict::info;
  return c;
}

std::vector<CheckRecord> structure_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  Collector col(o, out);
  const int n = e.n();
  const FiniteRing& r = *e.ring();

  col.run(record("ring_axioms", "the maps form a commutative associative family, so the extension is a ring"),
          [&](CheckRecord& c) {
            const ValidationReport& v = e.report();
            c.facts.push_back("order: " + std::to_string(e.order()));
            c.facts.push_back("bilinear: " + yes(v.bilinear_ok));
            c.facts.push_back("symmetric: " + yes(v.symmetric_ok));
            c.facts.push_back("associative: " + yes(v.associative_ok));
            for (const auto& w : e.warnings()) c.facts.push_back("warning: " + w);
            if (!v.bilinear_ok || !v.symmetric_ok || !v.associative_ok)
              for (const auto& w : v.witnesses) fail(c, w.text);
          });

  col.run(record("matrix_representation",
                 "the extension is isomorphic to the ring of upper triangular Toeplitz matrices with diagonals r, "
                 "m_1, ..., m_n"),
          [&](CheckRecord& c) {
            const MatrixCheck m = matrix_check(e, std::size_t{1} << 20);
            c.facts.push_back("pairs checked: " + std::to_string(m.pairs_checked) + " of " +
                              std::to_string(e.order() * e.order()));
            if (!m.ok) fail(c, m.witness);
          });

  const std::pair<const char*, GradingKind> gradings[] = {{"grading_n0", GradingKind::n0_truncated},
                                                           {"grading_z_mod", GradingKind::z_mod},
                                                           {"grading_gamma", GradingKind::gamma}};
  for (const auto& [name, kind] : gradings)
    col.run(record(name, "the components R, M_1, ..., M_n grade the extension over " + to_string(kind) +
                             " and the homogeneous elements do not depend on the grading"),
            [&, kind = kind](CheckRecord& c) {
              const GradingReport g = grading_check(e, kind);
              c.facts.push_back("homogeneous elements (with 0): " + std::to_string(g.homogeneous_count));
              if (!g.products_ok) fail(c, g.witness);
              if (!g.monoid_ok) {
                // The truncated degree addition is not associative once n >= 2; products are still checked.
                c.facts.push_back("degree monoid: " + g.witness);
                if (c.verdict == Verdict::pass) c.verdict = Verdict::info;
              }
            });

  col.run(record("augmentation_nilpotent", "any product of n + 1 elements of 0 x M is zero"), [&](CheckRecord& c) {
    ElementSet aug(e.order());
    for (Elem x = 0; x < e.order(); ++x)
      if (e.decode(x)[0] == 0) aug.insert(x);
    const RingPtr& s = e.flat();
    ElementSet power = aug;
    for (int k = 2; k <= n + 1; ++k) {
      ElementSet next(e.order());
      power.for_each([&](Elem a) { aug.for_each([&](Elem b) { next.insert(s->mul(a, b)); }); });
      power = next;
      c.facts.push_back("products of " + std::to_string(k) + " factors: " + std::to_string(power.size()) +
                        " values");
    }
    if (power.size() != 1) fail(c, "a product of n + 1 factors is nonzero: " + describe_set(e, power));
  });

  col.run(record("canonical_homs",
                 "truncations pi_m are surjective ring homs, coordinate 0 is a ring hom, other coordinates are "
                 "module homs, and r -> (r,0,...,0) is an injective ring hom"),
          [&](CheckRecord& c) {
            std::vector<HomCheck> homs;
            for (int m = 0; m <= n; ++m) homs.push_back(check_pi(e, m));
            for (int i = 0; i <= n; ++i) homs.push_back(check_big_pi(e, i));
            homs.push_back(check_iota(e));
            for (const auto& h : homs) {
              c.facts.push_back(h.name + ": " + (h.ok ? "ok" : "fails") + ", kernel size " +
                                std::to_string(h.kernel_size));
              if (!h.ok) fail(c, h.name + ": " + h.witness);
            }
          });

  col.run(record("tilde_lemma",
                 "each element x has a partner built by successive negation with x * partner = (x_0^(2^n), 0, ..., 0)"),
          [&](CheckRecord& c) {
            const std::uint64_t exponent = std::uint64_t{1} << n;
            for (Elem x = 0; x < e.order(); ++x) {
              const Coords cx = e.decode(x);
              Coords expected = e.zero();
              expected[0] = r.pow(cx[0], exponent);
              const Coords got = e.mul(cx, tilde(e, cx));
              if (got != expected) {
                fail(c, e.name(cx) + " * " + e.name(tilde(e, cx)) + " = " + e.name(got) + ", expected " +
                            e.name(expected));
                return;
              }
            }
            c.facts.push_back("elements checked: " + std::to_string(e.order()));
          });

  col.run(record("polynomial_iso", "R x|_n R x| ... x| R with ring multiplication is isomorphic to R[X]/(X^(n+1))"),
          [&](CheckRecord& c) {
            try {
              const IsoCheck iso = poly_iso(e);
              c.hypotheses = "every M_i is R with ring multiplication";
              c.facts.push_back("table entries checked: " + std::to_string(iso.table_entries_checked));
              if (!iso.ok) fail(c, iso.witness);
            } catch (const HypothesisError& err) {
              skip(c, err.what());
            }
          });

  col.run(record("product_iso",
                 "over R = R_1 x ... x R_k the extension splits as the product of R_j x| e_j M_1 x| ... x| e_j M_n"),
          [&](CheckRecord& c) {
            try {
              const IsoCheck iso = product_iso(e);
              c.hypotheses = "R is built as a direct product";
              c.facts.push_back("table entries checked: " + std::to_string(iso.table_entries_checked));
              if (!iso.ok) fail(c, iso.witness);
            } catch (const HypothesisError& err) {
              skip(c, err.what());
            }
          });

  col.run(record("recorded_products", "squares and tilde products of the requested elements"), [&](CheckRecord& c) {
    c.verdict = Verdict::info;
    if (o.recorded.empty()) {
      c.facts.push_back("no elements requested");
      return;
    }
    for (const Coords& x : o.recorded) {
      c.facts.push_back(e.name(x) + "^2 = " + e.name(e.mul(x, x)));
      const Coords t = tilde(e, x);
      c.facts.push_back(e.name(x) + " * " + e.name(t) + " = " + e.name(e.mul(x, t)));
    }
  });
  return out;
}

std::vector<CheckRecord> localization_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  Collector col(o, out);
  col.run(record("localization",
                 "localizing the extension at S x| M gives R_S x| (M_1)_S x| ... x| (M_n)_S, both sides built "
                 "independently"),
          [&](CheckRecord& c) {
            MultiplicativeSet s = o.mult_set ? *o.mult_set : total_quotient_set(e);
            const std::string label = o.mult_set ? (o.mult_set_name.empty() ? "given set" : o.mult_set_name)
                                                 : "R minus the zero divisors of R and every M_i";
            if (s.contains_zero()) {
              skip(c, "S = " + label + " contains 0");
              return;
            }
            c.hypotheses = "S = " + label + ", " + std::to_string(s.elements.size()) + " elements";
            const ExtensionLocalization l = localize_extension(e, s);
            c.facts.push_back("|R_S| = " + std::to_string(l.base.ring->order()));
            c.facts.push_back("|(extension)_S| = " + std::to_string(l.pairs.ring->order()));
            c.facts.push_back("|R_S x| M_S| = " + std::to_string(l.model->order()));
            c.facts.push_back("explicit map an isomorphism: " + yes(l.explicit_iso));
            if (l.fallback_used) c.facts.push_back("isomorphism found by search: " + yes(l.fallback_iso));
            if (l.sampled) c.facts.push_back("pair checks sampled");
            if (!l.base_check.ok()) fail(c, "R_S: " + l.base_check.witness);
            if (!l.pairs_check.ok()) fail(c, "extension localization: " + l.pairs_check.witness);
            if (!l.tilde_ok) fail(c, "tilde contract fails on S x| M");
            if (!(l.explicit_iso || l.fallback_iso)) fail(c, l.witness.empty() ? "no isomorphism" : l.witness);
          });
  return out;
}

std::vector<CheckRecord> spectrum_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  Collector col(o, out);
  col.run(record("classification",
                 "units are U(R) x| M, zero divisors have first coordinate in Z(R) or some Z(M_i), idempotents are "
                 "Id(R) x| 0, nilradical is Nil(R) x| M, Jacobson radical is J(R) x| M"),
          [&](CheckRecord& c) {
            const ExtensionClassification cl = classify_extension(e);
            for (const auto& sc : cl.sets) {
              c.facts.push_back(sc.name + ": " + std::to_string(sc.brute_force.size()) + " elements, closed form " +
                                (sc.agree() ? "agrees" : "disagrees"));
              if (!sc.agree()) fail(c, sc.name + " differs at " + e.name(e.decode(*sc.offending())));
            }
          });

  static const char* names[] = {"spectrum_primes",  "spectrum_maximals",       "spectrum_radicals",
                                "radical_closed_forms", "krull_dimension", "ideals_over_zero_module",
                                "extended_ideals", "projection_kernels"};
  bool any = false;
  for (const char* nm : names) any = any || o.wants(nm);
  if (!any) return out;
  Stopwatch w;
  const std::vector<FormCheck> forms = extension_spectrum_checks(e, o.max_ideals);
  const double share = w.ms() / static_cast<double>(forms.size());
  for (std::size_t k = 0; k < forms.size() && k < std::size(names); ++k) {
    if (!o.wants(names[k])) continue;
    CheckRecord c = record(names[k], forms[k].name);
    for (const auto& [key, value] : forms[k].facts) c.facts.push_back(key + ": " + value);
    if (!forms[k].ok) {
      c.verdict = Verdict::fail;
      c.witnesses = forms[k].witnesses;
    }
    c.runtime_ms = share;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<std::string, ClassSelector>> default_classes(const NTrivialExtension& e) {
  using K = ClassSelector::Kind;
  std::vector<std::pair<std::string, ClassSelector>> out;
  out.emplace_back("regular", ClassSelector{K::regular, {}, 1});
  out.emplace_back("pi0_zero", ClassSelector{K::pi0_zero, {}, 1});
  for (int j = 1; j < e.n(); ++j) {
    ClassSelector s{K::pi_prefix_zero, {}, j};
    out.emplace_back(to_string(s), s);
  }
  if (ring_predicates(*e.ring()).is_field) out.emplace_back("all", ClassSelector{K::all, {}, 1});
  return out;
}

std::vector<CheckRecord> homogeneity_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  Collector col(o, out);
  col.run(record("homogeneous_arithmetic",
                 "sums, intersections, products and colons of homogeneous ideals are computed componentwise, and the "
                 "radical of any ideal J is the radical of Pi_0(J) times M"),
          [&](CheckRecord& c) {
            const ArithmeticReport a = homogeneous_arith_check(e, o.max_ideals);
            c.facts.push_back("homogeneous ideals: " + std::to_string(a.homogeneous_ideals));
            c.facts.push_back("pairs: " + std::to_string(a.pairs));
            c.facts.push_back("ideals for the radical: " + std::to_string(a.ideals_for_radical));
            if (!a.ok()) {
              c.verdict = Verdict::fail;
              c.witnesses = a.witnesses;
              if (c.witnesses.empty()) c.witnesses.push_back("componentwise formula disagrees");
            }
          });

  const auto classes = o.classes.empty() ? default_classes(e) : o.classes;
  for (const auto& [label, sel] : classes)
    col.run(record("homogeneity_class:" + label,
                   "for the ideals of class " + to_string(sel) +
                       ", all of them homogeneous, all principal ones homogeneous, and the module condition agree"),
            [&, sel = sel](CheckRecord& c) {
              const ClassCheck cc = homogeneity_class_check(e, sel, o.max_ideals);
              if (!cc.hypotheses_ok) {
                skip(c, cc.reason);
                return;
              }
              c.hypotheses = "hold";
              c.facts.push_back("ideals in class: " + std::to_string(cc.class_size));
              c.facts.push_back("all homogeneous: " + yes(cc.side_a));
              c.facts.push_back("principal ones homogeneous: " + yes(cc.side_a_principal));
              c.facts.push_back("module condition: " + yes(cc.side_b));
              if (cc.side_c) c.facts.push_back(cc.side_c_name + ": " + yes(*cc.side_c));
              for (const auto& [k, v] : cc.facts) c.facts.push_back(k + ": " + v);
              if (!cc.agree()) {
                c.verdict = Verdict::fail;
                c.witnesses = cc.witnesses;
                if (c.witnesses.empty()) c.witnesses.push_back("sides disagree");
              } else {
                // Witnesses of non-homogeneous ideals are evidence, not failures.
                for (const auto& w : cc.witnesses) c.facts.push_back("example: " + w);
              }
            });

  col.run(record("principal_homogeneity",
                 "a principal ideal <(a,m_1,...,m_n)> is homogeneous iff it equals aR x| (Rm_1 + aM_1) x| ... x| "
                 "(Rm_n + aM_n + sum of m_i M_j over i + j = n)"),
          [&](CheckRecord& c) {
            if (o.recorded.empty()) {
              skip(c, "no element requested");
              return;
            }
            for (const Coords& g : o.recorded) {
              const HomogeneityReport h = homogeneity_principal(e, g);
              c.facts.push_back("<" + e.name(g) + ">: " + (h.is_homogeneous ? "homogeneous" : "not homogeneous") +
                                ", size " + std::to_string(h.ideal_size) + ", hull " +
                                describe_data(e, h.hull) + " of size " + std::to_string(h.hull_size));
              if (!h.is_homogeneous && !h.witness.empty())
                c.facts.push_back("hull element outside <" + e.name(g) + ">: " + h.witness);
              if (!h.contained_in_hull) fail(c, "<" + e.name(g) + "> is not inside its hull");
              if (h.principal_form_equal) c.facts.push_back("<" + e.name(g) + "> equals the explicit form: " +
                                                            yes(*h.principal_form_equal));
              if (h.principal_form_consistent == false)
                fail(c, "<" + e.name(g) + ">: explicit form verdict disagrees with the hull verdict");
            }
          });
  return out;
}

std::vector<CheckRecord> property_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  static const char* names[] = {"finite_generation", "pir_characterization", "zpi_characterization",
                                "pi_ring_characterization", "chained_characterization", "arithmetical"};
  bool any = false;
  for (const char* nm : names) any = any || o.wants(nm);
  if (!any) return out;
  Stopwatch w;
  const ExtensionPropertyReport p = extension_property_checks(e, o.max_ideals);
  const double share = w.ms() / static_cast<double>(std::size(names));
  auto push = [&](CheckRecord c) {
    if (!o.wants(c.name)) return;
    c.runtime_ms = share;
    out.push_back(std::move(c));
  };
  auto verdict_text = [](const PropertyVerdict& v) {
    return yes(v.holds) + (v.holds ? (v.certificate.empty() ? "" : " (" + v.certificate + ")")
                                   : (v.witness.empty() ? "" : " (" + v.witness + ")"));
  };

  {
    CheckRecord c = record("finite_generation",
                           "0 x M is generated by the homogeneous images of generators of the M_i, so the extension "
                           "is Noetherian with R");
    c.facts.push_back(p.generation_certificate);
    c.facts.push_back("extension Noetherian: " + verdict_text(p.ring.noetherian));
    c.facts.push_back("extension Artinian: " + verdict_text(p.ring.artinian));
    if (!p.finitely_generated) fail(c, "homogeneous generators do not generate 0 x M");
    push(std::move(c));
  }
  auto characterization = [&](const char* name, const std::string& property, const PropertyVerdict& ext,
                              const PropertyVerdict& base, bool agree) {
    CheckRecord c = record(name, "the extension is a " + property + " iff R is one and every M_i is cyclic with "
                                     "annihilator a product of idempotent maximal ideals");
    c.facts.push_back("extension: " + verdict_text(ext));
    c.facts.push_back("R: " + verdict_text(base));
    c.facts.push_back("module condition: " + yes(p.modules_cyclic_idempotent) +
                      (p.module_condition_witness.empty() ? "" : " (" + p.module_condition_witness + ")"));
    if (!agree) fail(c, "extension verdict " + yes(ext.holds) + " against predicted " +
                            yes(base.holds && p.modules_cyclic_idempotent));
    push(std::move(c));
  };
  characterization("pir_characterization", "principal ideal ring", p.ring.pir, p.base.pir, p.pir_agree);
  characterization("zpi_characterization", "ZPI-ring", p.ring.zpi, p.base.zpi, p.zpi_agree);
  characterization("pi_ring_characterization", "pi-ring", p.ring.pi_ring, p.base.pi_ring, p.pi_agree);
  {
    CheckRecord c = record("chained_characterization",
                           "the extension is chained iff R is a valuation domain, each M_i is divisible with chained "
                           "submodules, and nonzero e in M_{j-i} gives e M_i = M_j");
    c.facts.push_back("extension chained: " + verdict_text(p.ring.chained));
    if (!p.chained_conditions) {
      skip(c, p.chained_skip);
    } else {
      c.hypotheses = "n >= 2 and some M_i nonzero";
      for (const auto& [k, v] : p.chained_parts) c.facts.push_back(k + ": " + yes(v));
      if (!p.chained_agree)
        fail(c, "extension chained " + yes(p.ring.chained.holds) + " against conditions " +
                    yes(*p.chained_conditions));
    }
    push(std::move(c));
  }
  {
    CheckRecord c = record("arithmetical", "arithmetical and chained verdicts of R and the extension");
    c.verdict = Verdict::info;
    c.facts.push_back("extension arithmetical: " + verdict_text(p.ring.arithmetical));
    c.facts.push_back("R arithmetical: " + verdict_text(p.base.arithmetical));
    c.facts.push_back("R chained: " + verdict_text(p.base.chained));
    c.facts.push_back("ideals of the extension: " + std::to_string(p.ring.ideal_count));
    push(std::move(c));
  }
  return out;
}

std::vector<CheckRecord> divisibility_checks(const NTrivialExtension& e, const SuiteOptions& o) {
  static const std::vector<std::string> names = {
      "presimplifiable_lift", "presimplifiable_equivalence", "strongly_associate", "associate_lift",
      "primitive_irreducible_bridge", "idempotent_obstruction", "decomposable_reducible", "principal_chain_lemma",
      "accp", "atomic", "zero_prefix_products", "bfr", "u_bfr", "u_ffr", "u_atomic",
      "reduced_submodule_factorizations"};
  if (std::none_of(names.begin(), names.end(), [&](const std::string& nm) { return o.wants(nm); })) return {};
  std::vector<CheckRecord> out;
  for (auto& c : divisibility_suite(e))
    if (o.wants(c.name)) out.push_back(std::move(c));
  return out;
}

std::vector<CheckRecord> run_suite(const NTrivialExtension& e, const SuiteOptions& o) {
  if (auto refusal = exploratory_refusal(e)) return {*refusal};
  std::vector<CheckRecord> out;
  for (auto* part : {&structure_checks, &localization_checks, &spectrum_checks, &homogeneity_checks,
                     &property_checks, &divisibility_checks}) {
    auto recs = (*part)(e, o);
    for (auto& c : recs) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ntx
