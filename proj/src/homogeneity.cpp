#include "ntx/homogeneity.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ntx {

namespace {

ElementSet coordinate_image(const NTrivialExtension& e, const ElementSet& s, int i) {
  ElementSet out(e.component_order(i));
  s.for_each([&](Elem x) { out.insert(e.decode(x)[static_cast<std::size_t>(i)]); });
  return out;
}

ElementSet singleton_zero(std::size_t order) {
  ElementSet s(order);
  s.insert(0);
  return s;
}

ElementSet nonzero(std::size_t order) {
  ElementSet s = ElementSet::full(order);
  s.erase(0);
  return s;
}

std::string set_name(const NTrivialExtension& e, int k, const ElementSet& s, std::size_t max_listed = 8) {
  if (s.size() == e.component_order(k)) return k == 0 ? "R" : "M_" + std::to_string(k);
  if (s.size() == 1) return "0";
  std::vector<std::string> names;
  s.for_each([&](Elem x) {
    if (names.size() < max_listed) names.push_back(k == 0 ? e.ring()->name(x) : e.module(k)->name(x));
  });
  std::string out = "{" + join(names, ", ");
  if (s.size() > max_listed) out += ", ...";
  return out + "}";
}

const ElementSet& part(const HomogeneousData& d, int k) { return k == 0 ? d.k : d.n[static_cast<std::size_t>(k - 1)]; }

std::string ideal_name(const NTrivialExtension& e, const Ideal& j) {
  std::vector<std::string> gens;
  for (Elem g : j.generators) gens.push_back(e.name(e.decode(g)));
  return "<" + join(gens, ", ") + ">";
}

// (N :_{M_k} N') = {x ∈ M_k : x N' ⊆ N} with N' ⊆ M_j and N ⊆ M_{k+j}.
ElementSet residual(const NTrivialExtension& e, int k, int j, const ElementSet& target, const ElementSet& by) {
  ElementSet out(e.component_order(k));
  const auto ys = by.elements();
  for (Elem x = 0; x < e.component_order(k); ++x) {
    bool in = true;
    for (Elem y : ys)
      if (!target.contains(e.comp_mul(k, x, j, y))) {
        in = false;
        break;
      }
    if (in) out.insert(x);
  }
  return out;
}

struct IdealCensus {
  std::vector<Ideal> ideals;
  std::vector<HomogeneousData> hulls;
  std::vector<bool> homogeneous;
};

IdealCensus census(const NTrivialExtension& e, std::size_t max_ideals) {
  IdealCensus c;
  c.ideals = enumerate_ideals(e.flat(), max_ideals);
  for (const auto& j : c.ideals) {
    c.hulls.push_back(hull(e, j.elements));
    c.homogeneous.push_back(box(e, c.hulls.back()).size() == j.size());
  }
  return c;
}

}  // namespace

std::string describe_data(const NTrivialExtension& e, const HomogeneousData& d) {
  std::vector<std::string> parts{set_name(e, 0, d.k)};
  for (int i = 1; i <= e.n(); ++i) parts.push_back(set_name(e, i, part(d, i)));
  return join(parts, " x| ");
}

ElementSet component_span(const NTrivialExtension& e, int k, const ElementSet& gens) {
  if (k == 0) return generate(e.ring(), gens.elements()).elements;
  return span(e.module(k), gens.elements()).elements;
}

ElementSet component_product(const NTrivialExtension& e, int i, const ElementSet& a, int j, const ElementSet& b) {
  ElementSet gens(e.component_order(i + j));
  const auto bs = b.elements();
  a.for_each([&](Elem x) {
    for (Elem y : bs) gens.insert(e.comp_mul(i, x, j, y));
  });
  gens.insert(0);
  return component_span(e, i + j, gens);
}

bool is_ideal_data(const NTrivialExtension& e, const HomogeneousData& d) {
  if (static_cast<int>(d.n.size()) != e.n() || !is_ideal(*e.ring(), d.k)) return false;
  for (int i = 1; i <= e.n(); ++i) {
    const ElementSet& ni = part(d, i);
    if (ni.universe() != e.component_order(i) || span(e.module(i), ni.elements()).elements != ni) return false;
  }
  for (int i = 0; i <= e.n(); ++i)
    for (int j = 1; i + j <= e.n(); ++j) {
      const ElementSet target = part(d, i + j);
      // K M_j ⊆ N_j when i = 0, N_i M_j ⊆ N_{i+j} otherwise.
      const ElementSet full = ElementSet::full(e.component_order(j));
      if (!component_product(e, i, part(d, i), j, full).subset_of(target)) return false;
    }
  return true;
}

ElementSet box(const NTrivialExtension& e, const HomogeneousData& d) { return ext_box(e, d.k, d.n); }

HomogeneousData hull(const NTrivialExtension& e, const ElementSet& j) {
  HomogeneousData d{coordinate_image(e, j, 0), {}};
  for (int i = 1; i <= e.n(); ++i) d.n.push_back(coordinate_image(e, j, i));
  return d;
}

ElementSet principal_explicit_form(const NTrivialExtension& e, const Coords& g) {
  const RingPtr& r = e.ring();
  HomogeneousData d{ElementSet(r->order()), {}};
  for (Elem x = 0; x < r->order(); ++x) d.k.insert(r->mul(g[0], x));
  for (int k = 1; k <= e.n(); ++k) {
    const ModulePtr& m = e.module(k);
    ElementSet gens(m->order());
    for (Elem x = 0; x < r->order(); ++x) gens.insert(m->act(x, g[static_cast<std::size_t>(k)]));
    for (Elem y = 0; y < m->order(); ++y) gens.insert(m->act(g[0], y));
    for (int i = 1; i < k; ++i)
      for (Elem y = 0; y < e.component_order(k - i); ++y)
        gens.insert(e.comp_mul(i, g[static_cast<std::size_t>(i)], k - i, y));
    d.n.push_back(span(m, gens.elements()).elements);
  }
  return box(e, d);
}

HomogeneityReport homogeneity(const NTrivialExtension& e, const Ideal& j) {
  HomogeneityReport rep;
  rep.hull = hull(e, j.elements);
  const ElementSet h = box(e, rep.hull);
  rep.ideal_size = j.size();
  rep.hull_size = h.size();
  rep.contained_in_hull = j.elements.subset_of(h);
  rep.is_homogeneous = rep.contained_in_hull && h.size() == j.size();
  if (!rep.is_homogeneous) {
    const ElementSet extra = h.intersect(j.elements.complement());
    if (!extra.empty()) rep.witness = e.name(e.decode(extra.elements().front()));
  }
  if (j.generators.size() == 1) {
    const ElementSet form = principal_explicit_form(e, e.decode(j.generators.front()));
    rep.principal_form_equal = form == j.elements;
    rep.principal_form_consistent = *rep.principal_form_equal == rep.is_homogeneous;
  }
  return rep;
}

HomogeneityReport homogeneity_principal(const NTrivialExtension& e, const Coords& generator) {
  return homogeneity(e, principal(e.flat(), e.encode(generator)));
}

ArithmeticReport homogeneous_arith_check(const NTrivialExtension& e, std::size_t max_ideals) {
  ArithmeticReport rep;
  const IdealCensus c = census(e, max_ideals);
  const int n = e.n();
  std::vector<std::size_t> homog;
  for (std::size_t i = 0; i < c.ideals.size(); ++i)
    if (c.homogeneous[i]) homog.push_back(i);
  rep.homogeneous_ideals = homog.size();

  auto fail = [&](bool& flag, const std::string& what, const Ideal& a, const Ideal& b) {
    if (flag && rep.witnesses.size() < 16)
      rep.witnesses.push_back(what + " of " + ideal_name(e, a) + " and " + ideal_name(e, b) + " differs from the componentwise formula");
    flag = false;
  };

  for (std::size_t x : homog)
    for (std::size_t y : homog) {
      const Ideal& a = c.ideals[x];
      const Ideal& b = c.ideals[y];
      const HomogeneousData& da = c.hulls[x];
      const HomogeneousData& db = c.hulls[y];
      ++rep.pairs;

      HomogeneousData s{component_span(e, 0, da.k.unite(db.k)), {}};
      HomogeneousData in{da.k.intersect(db.k), {}};
      HomogeneousData pr{component_product(e, 0, da.k, 0, db.k), {}};
      HomogeneousData co{ElementSet::full(e.component_order(0)), {}};
      for (int k = 1; k <= n; ++k) {
        s.n.push_back(component_span(e, k, part(da, k).unite(part(db, k))));
        in.n.push_back(part(da, k).intersect(part(db, k)));
        ElementSet p = singleton_zero(e.component_order(k));
        for (int i = 0; i <= k; ++i) p = p.unite(component_product(e, i, part(da, i), k - i, part(db, k - i)));
        pr.n.push_back(component_span(e, k, p));
      }
      for (int k = 0; k <= n; ++k) {
        ElementSet col = ElementSet::full(e.component_order(k));
        for (int j = 0; k + j <= n; ++j) col = col.intersect(residual(e, k, j, part(da, k + j), part(db, j)));
        if (k == 0) co.k = col;
        else co.n.push_back(col);
      }

      if (box(e, s) != ideal_sum(a, b).elements) fail(rep.sum_ok, "sum", a, b);
      if (box(e, in) != ideal_intersect(a, b).elements) fail(rep.intersection_ok, "intersection", a, b);
      if (box(e, pr) != ideal_product(a, b).elements) fail(rep.product_ok, "product", a, b);
      if (box(e, co) != ideal_colon(a, b).elements) fail(rep.colon_ok, "colon", a, b);
    }

  std::vector<ElementSet> full_parts;
  for (int k = 1; k <= n; ++k) full_parts.push_back(ElementSet::full(e.component_order(k)));
  for (std::size_t x = 0; x < c.ideals.size(); ++x) {
    ++rep.ideals_for_radical;
    const Ideal k = ideal_from_set(e.ring(), c.hulls[x].k);
    const ElementSet expected = ext_box(e, ideal_radical(k).elements, full_parts);
    if (ideal_radical(c.ideals[x]).elements != expected) {
      if (rep.radical_ok || rep.witnesses.size() < 16)
        rep.witnesses.push_back("radical of " + ideal_name(e, c.ideals[x]) + " is not sqrt(Pi_0(J)) x| M");
      rep.radical_ok = false;
    }
  }
  return rep;
}

std::optional<ClassSelector> parse_selector(const std::string& text, const FiniteRing& r) {
  auto parse_list = [&](const std::string& inner) -> std::optional<std::vector<Elem>> {
    std::vector<Elem> out;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(' '));
      tok.erase(tok.find_last_not_of(' ') + 1);
      auto x = r.parse(tok);
      if (!x) return std::nullopt;
      out.push_back(*x);
    }
    return out;
  };
  auto args = [&](const std::string& prefix) -> std::optional<std::string> {
    if (text.rfind(prefix + "(", 0) != 0 || text.back() != ')') return std::nullopt;
    return text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
  };
  using K = ClassSelector::Kind;
  if (text == "regular") return ClassSelector{K::regular, {}, 1};
  if (text == "pi0_zero") return ClassSelector{K::pi0_zero, {}, 1};
  if (text == "all") return ClassSelector{K::all, {}, 1};
  if (auto a = args("pi_prefix_zero")) {
    try {
      return ClassSelector{K::pi_prefix_zero, {}, std::stoi(*a)};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (auto a = args("pi0_meets_ann")) {
    auto s = parse_list(*a);
    if (!s) return std::nullopt;
    return ClassSelector{K::pi0_meets_ann, *s, 1};
  }
  if (auto a = args("pi0_meets")) {
    auto s = parse_list(*a);
    if (!s) return std::nullopt;
    return ClassSelector{K::pi0_meets, *s, 1};
  }
  return std::nullopt;
}

std::string to_string(const ClassSelector& c) {
  using K = ClassSelector::Kind;
  auto list = [&] {
    std::vector<std::string> v;
    for (Elem x : c.s) v.push_back(std::to_string(x));
    return join(v, ",");
  };
  switch (c.kind) {
    case K::pi0_meets: return "pi0_meets(" + list() + ")";
    case K::pi0_meets_ann: return "pi0_meets_ann(" + list() + ")";
    case K::regular: return "regular";
    case K::pi0_zero: return "pi0_zero";
    case K::pi_prefix_zero: return "pi_prefix_zero(" + std::to_string(c.j) + ")";
    case K::all: return "all";
  }
  return "?";
}

bool j_integral(const NTrivialExtension& e, int i, int j) {
  if (i < 1 || j < 2 || i * j > e.n()) throw UsageError("j-integrality needs i >= 1, j >= 2 and ij <= n");
  const ElementSet base = nonzero(e.component_order(i));
  const auto ys = base.elements();
  ElementSet products = base;
  for (int t = 2; t <= j; ++t) {
    ElementSet next(e.component_order(i * t));
    products.for_each([&](Elem p) {
      for (Elem y : ys) next.insert(e.comp_mul(i * (t - 1), p, i, y));
    });
    if (next.contains(0)) return false;
    products = std::move(next);
  }
  return true;
}

namespace {

// M_k = m M_{k-j} for every k in [j+1, n] and nonzero m ∈ M_j; witnesses name each failing m.
bool cyclic_fill(const NTrivialExtension& e, int j, std::vector<std::string>& witnesses) {
  bool ok = true;
  for (int k = j + 1; k <= e.n(); ++k)
    for (Elem m = 1; m < e.component_order(j); ++m) {
      ElementSet img(e.component_order(k));
      for (Elem y = 0; y < e.component_order(k - j); ++y) img.insert(e.comp_mul(j, m, k - j, y));
      if (img.size() != e.component_order(k)) {
        ok = false;
        if (witnesses.size() < 8)
          witnesses.push_back("e = " + e.module(j)->name(m) + " in M_" + std::to_string(j) + ": e M_" +
                              std::to_string(k - j) + " != M_" + std::to_string(k));
      }
    }
  return ok;
}

// sM_i = M_i for all s ∈ S and all i.
bool saturates(const NTrivialExtension& e, const std::vector<Elem>& s, std::vector<std::string>& witnesses) {
  bool ok = true;
  for (Elem x : s)
    for (int i = 1; i <= e.n(); ++i)
      if (scaled(e.module(i), x).size() != e.module(i)->order()) {
        ok = false;
        if (witnesses.size() < 8)
          witnesses.push_back("s = " + e.ring()->name(x) + ": s M_" + std::to_string(i) + " != M_" + std::to_string(i));
      }
  return ok;
}

}  // namespace

ClassCheck homogeneity_class_check(const NTrivialExtension& e, const ClassSelector& sel, std::size_t max_ideals) {
  using K = ClassSelector::Kind;
  ClassCheck out;
  out.selector = to_string(sel);
  const RingPtr& r = e.ring();
  const int n = e.n();
  const ElementSet regular = regular_elements(*r);
  auto refuse = [&](std::string why) {
    out.hypotheses_ok = false;
    out.reason = std::move(why);
    return out;
  };

  // S for the Pi_0 classes.
  std::vector<Elem> s = sel.s;
  if (sel.kind == K::regular) {
    ElementSet zd = regular.complement();
    for (int i = 1; i <= n; ++i) zd = zd.unite(zero_divisors_on(e.module(i)));
    s = zd.complement().elements();
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  switch (sel.kind) {
    case K::pi0_meets:
      if (s.empty()) return refuse("S is empty");
      for (Elem x : s)
        if (!regular.contains(x)) return refuse("S must avoid Z(R); " + r->name(x) + " is a zero divisor or 0");
      break;
    case K::pi0_meets_ann:
      if (s.empty()) return refuse("S is empty");
      for (Elem x : s) {
        if (x == 0) return refuse("S must avoid 0");
        ElementSet ann(r->order());
        for (Elem y = 0; y < r->order(); ++y)
          if (r->mul(x, y) == 0) ann.insert(y);
        for (int i = 1; i <= n; ++i)
          if (!ann.subset_of(annihilator(e.module(i))))
            return refuse("Ann(" + r->name(x) + ") is not inside Ann(M_" + std::to_string(i) + ")");
      }
      break;
    case K::regular:
      if (s.empty()) return refuse("no element of R avoids Z(R) and every Z(M_i)");
      break;
    case K::pi0_zero:
      if (n < 2) return refuse("needs n >= 2");
      for (int j = 1; j < n; ++j)
        if (!module_predicates(e.module(j)).is_presimplifiable)
          return refuse("M_" + std::to_string(j) + " is not presimplifiable");
      break;
    case K::pi_prefix_zero:
      if (n < 2 || sel.j < 1 || sel.j >= n) return refuse("needs n >= 2 and 1 <= j <= n - 1");
      if (!module_predicates(e.module(sel.j)).is_presimplifiable)
        return refuse("M_" + std::to_string(sel.j) + " is not presimplifiable");
      break;
    case K::all:
      if (n < 2) return refuse("needs n >= 2");
      if (!ring_predicates(*r).is_field) return refuse("R is not a field (a finite domain is a field)");
      for (int k = 2; k <= n - 1; ++k)
        if (!j_integral(e, 1, k)) return refuse("M_1 is not " + std::to_string(k) + "-integral");
      break;
  }

  auto in_class = [&](const HomogeneousData& d) {
    switch (sel.kind) {
      case K::pi0_meets:
      case K::pi0_meets_ann:
      case K::regular:
        return std::any_of(s.begin(), s.end(), [&](Elem x) { return d.k.contains(x); });
      case K::pi0_zero: return d.k.size() == 1;
      case K::pi_prefix_zero:
        if (d.k.size() != 1) return false;
        for (int i = 1; i < sel.j; ++i)
          if (part(d, i).size() != 1) return false;
        return part(d, sel.j).size() > 1;
      case K::all: return true;
    }
    return false;
  };

  const IdealCensus c = census(e, max_ideals);
  out.side_a = true;
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < c.ideals.size(); ++x) {
    if (!in_class(c.hulls[x])) continue;
    members.push_back(x);
    if (!c.homogeneous[x]) {
      if (out.side_a && out.witnesses.size() < 8)
        out.witnesses.push_back("not homogeneous: " + ideal_name(e, c.ideals[x]));
      out.side_a = false;
    }
  }
  out.class_size = members.size();

  // Principal members, each cyclic ideal once, first generator in carrier order.
  out.side_a_principal = true;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::size_t principal_count = 0;
    std::size_t listed = 0;
    for (Elem x = 0; x < e.order(); ++x) {
      Ideal p = principal(e.flat(), x);
      if (!seen.insert(p.elements).second) continue;
      const HomogeneousData d = hull(e, p.elements);
      if (!in_class(d)) continue;
      ++principal_count;
      if (box(e, d).size() != p.size()) {
        out.side_a_principal = false;
        if (listed++ < 4) out.witnesses.push_back("principal not homogeneous: " + ideal_name(e, p));
      }
    }
    out.facts.emplace_back("principal_in_class", std::to_string(principal_count));
  }

  std::vector<std::string> wb;
  bool clause = true;
  std::string clause_name;
  std::vector<ElementSet> full_parts;
  for (int k = 1; k <= n; ++k) full_parts.push_back(ElementSet::full(e.component_order(k)));

  switch (sel.kind) {
    case K::pi0_meets:
    case K::pi0_meets_ann:
    case K::regular: {
      out.side_b = saturates(e, s, wb);
      clause_name = "class ideals have the form I x| M";
      for (std::size_t x : members)
        if (c.ideals[x].elements != ext_box(e, c.hulls[x].k, full_parts)) clause = false;
      std::vector<std::string> names;
      for (Elem x : s) names.push_back(r->name(x));
      out.facts.emplace_back("S", "{" + join(names, ", ") + "}");
      if (sel.kind == K::regular) {
        // Regular ideals of the extension are exactly the class.
        const ElementSet reg = regular_elements(*e.flat());
        std::size_t regular_ideals = 0;
        bool same = true;
        for (std::size_t x = 0; x < c.ideals.size(); ++x) {
          const bool is_reg = !c.ideals[x].elements.intersect(reg).empty();
          regular_ideals += is_reg;
          same = same && is_reg == in_class(c.hulls[x]);
        }
        out.facts.emplace_back("regular_ideals", std::to_string(regular_ideals));
        out.facts.emplace_back("class_equals_regular_ideals", same ? "true" : "false");
        if (!same) out.witnesses.push_back("regular ideals differ from the ideals whose Pi_0 meets S");
      }
      break;
    }
    case K::pi0_zero: {
      out.side_b = true;
      for (int j = 1; j < n; ++j) out.side_b = cyclic_fill(e, j, wb) && out.side_b;
      if (n == 2) {
        clause_name = "class ideals are comparable to 0 x| 0 x| M_2";
        HomogeneousData d{singleton_zero(r->order()), {singleton_zero(e.component_order(1)), ElementSet::full(e.component_order(2))}};
        const ElementSet top = box(e, d);
        for (std::size_t x : members)
          if (!top.subset_of(c.ideals[x].elements) && !c.ideals[x].elements.subset_of(top)) clause = false;
      }
      break;
    }
    case K::pi_prefix_zero: {
      out.side_b = cyclic_fill(e, sel.j, wb);
      clause_name = "class ideals contain 0 x| ... x| 0 x| M_{j+1} x| ... x| M_n";
      HomogeneousData d{singleton_zero(r->order()), {}};
      for (int k = 1; k <= n; ++k)
        d.n.push_back(k <= sel.j ? singleton_zero(e.component_order(k)) : ElementSet::full(e.component_order(k)));
      const ElementSet tail = box(e, d);
      for (std::size_t x : members)
        if (!tail.subset_of(c.ideals[x].elements)) clause = false;
      break;
    }
    case K::all: {
      // Field tower form: E_k = e_j E_{k-j} for all k and j < k.
      out.side_b = true;
      for (int j = 1; j < n; ++j) out.side_b = cyclic_fill(e, j, wb) && out.side_b;
      // Global form: every M_i divisible and M_i = m_1 M_{i-1}.
      std::vector<std::string> scratch;
      bool global = true;
      for (int i = 1; i <= n; ++i) global = global && module_predicates(e.module(i)).divisible;
      for (int i = 2; i <= n; ++i)
        for (Elem m = 1; m < e.component_order(1) && global; ++m) {
          ElementSet img(e.component_order(i));
          for (Elem y = 0; y < e.component_order(i - 1); ++y) img.insert(e.comp_mul(1, m, i - 1, y));
          global = img.size() == e.component_order(i);
        }
      clause = global;
      clause_name = "every M_i divisible and M_i = m_1 M_{i-1}";
      break;
    }
  }
  if (!clause_name.empty()) {
    out.side_c = clause;
    out.side_c_name = clause_name;
  }
  out.witnesses.insert(out.witnesses.end(), wb.begin(), wb.end());
  out.facts.emplace_back("class_size", std::to_string(out.class_size));
  return out;
}

}  // namespace ntx
