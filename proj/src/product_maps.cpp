#include "ntx/product_maps.hpp"

namespace ntx {

std::string to_string(MapOrigin o) {
  switch (o) {
    case MapOrigin::explicit_tables: return "explicit";
    case MapOrigin::structure_constants: return "structure_constants";
    case MapOrigin::algebra: return "algebra";
    case MapOrigin::zero: return "zero";
    case MapOrigin::truncated: return "truncated";
  }
  return "unknown";
}

std::vector<std::pair<int, int>> admissible_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) out.emplace_back(i, j);
  return out;
}

ProductMapFamily::ProductMapFamily(RingPtr ring, std::vector<ModulePtr> modules,
                                   std::map<std::pair<int, int>, Table> tables, MapOrigin origin)
    : ring_(std::move(ring)), modules_(std::move(modules)), origin_(origin) {
  if (modules_.empty()) throw AxiomError("an n-trivial extension needs n >= 1 modules");
  for (const auto& m : modules_)
    if (m->ring() != ring_) throw AxiomError("module " + m->label() + " is over a different ring");
  const int nn = n();
  tables_.assign(static_cast<std::size_t>((nn + 1) * (nn + 1)), Table{});
  for (auto [i, j] : admissible_pairs(nn)) {
    auto it = tables.find({i, j});
    if (it == tables.end())
      throw AxiomError("missing product map phi_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    const std::size_t expect = module(i)->order() * module(j)->order();
    if (it->second.size() != expect)
      throw AxiomError("phi_{" + std::to_string(i) + "," + std::to_string(j) + "} table has wrong size");
    for (Elem v : it->second)
      if (v >= module(i + j)->order())
        throw AxiomError("phi_{" + std::to_string(i) + "," + std::to_string(j) + "} leaves M_" +
                         std::to_string(i + j));
    tables_[static_cast<std::size_t>(i * (nn + 1) + j)] = std::move(it->second);
  }
  for (const auto& [key, tbl] : tables) {
    (void)tbl;
    if (key.first < 1 || key.second < 1 || key.first + key.second > nn)
      throw AxiomError("product map phi_{" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       "} is not admissible for n = " + std::to_string(nn));
  }
  const ValidationReport rep = validate(1);
  if (!rep.bilinear_ok) throw AxiomError("product map is not bilinear: " + rep.witnesses.front().text);
}

ProductMapFamily ProductMapFamily::truncated(int boundary) const {
  ProductMapFamily out = *this;
  for (auto [i, j] : admissible_pairs(n()))
    if (i + j >= boundary) {
      auto& t = out.tables_[static_cast<std::size_t>(i * (n() + 1) + j)];
      std::fill(t.begin(), t.end(), 0);
    }
  out.origin_ = MapOrigin::truncated;
  out.constants_.clear();
  return out;
}

ValidationReport ProductMapFamily::validate(std::size_t max_witnesses) const {
  ValidationReport rep;
  const FiniteRing& r = *ring_;
  auto record = [&](MapWitness w) {
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(std::move(w));
  };
  auto phi = [](int i, int j) { return "phi_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
  for (auto [i, j] : admissible_pairs(n())) {
    const auto& mi = module(i);
    const auto& mj = module(j);
    const auto& mk = module(i + j);
    bool ok = true;
    for (Elem a = 0; a < mi->order() && ok; ++a)
      for (Elem b = 0; b < mj->order() && ok; ++b) {
        const Elem ab = apply(i, j, a, b);
        for (Elem a2 = 0; a2 < mi->order() && ok; ++a2) {
          const Elem lhs = apply(i, j, mi->add(a, a2), b);
          const Elem rhs = mk->add(ab, apply(i, j, a2, b));
          if (lhs != rhs) {
            ok = false;
            record({"additive-left", i, j, 0, a, a2, b, lhs, rhs,
                    phi(i, j) + " not additive in the first slot at (" + mi->name(a) + "+" + mi->name(a2) + ", " +
                        mj->name(b) + ")"});
          }
        }
        for (Elem b2 = 0; b2 < mj->order() && ok; ++b2) {
          const Elem lhs = apply(i, j, a, mj->add(b, b2));
          const Elem rhs = mk->add(ab, apply(i, j, a, b2));
          if (lhs != rhs) {
            ok = false;
            record({"additive-right", i, j, 0, a, b, b2, lhs, rhs,
                    phi(i, j) + " not additive in the second slot at (" + mi->name(a) + ", " + mj->name(b) + "+" +
                        mj->name(b2) + ")"});
          }
        }
        for (Elem s = 0; s < r.order() && ok; ++s) {
          const Elem scaled = mk->act(s, ab);
          const Elem left = apply(i, j, mi->act(s, a), b);
          const Elem right = apply(i, j, a, mj->act(s, b));
          if (left != scaled || right != scaled) {
            ok = false;
            record({"homogeneous", i, j, 0, a, b, s, left != scaled ? left : right, scaled,
                    phi(i, j) + " not R-homogeneous at r = " + r.name(s) + ", (" + mi->name(a) + ", " +
                        mj->name(b) + ")"});
          }
        }
      }
    if (!ok) rep.bilinear_ok = false;
  }
  for (auto [i, j] : admissible_pairs(n())) {
    if (j < i) continue;
    bool ok = true;
    for (Elem a = 0; a < module(i)->order() && ok; ++a)
      for (Elem b = 0; b < module(j)->order() && ok; ++b) {
        const Elem lhs = apply(i, j, a, b);
        const Elem rhs = apply(j, i, b, a);
        if (lhs != rhs) {
          ok = false;
          record({"symmetric", i, j, 0, a, b, 0, lhs, rhs,
                  phi(i, j) + "(" + module(i)->name(a) + "," + module(j)->name(b) + ") = " +
                      module(i + j)->name(lhs) + " but " + phi(j, i) + "(" + module(j)->name(b) + "," +
                      module(i)->name(a) + ") = " + module(i + j)->name(rhs)});
        }
      }
    if (!ok) rep.symmetric_ok = false;
  }
  for (int i = 1; i <= n(); ++i)
    for (int j = 1; i + j < n(); ++j)
      for (int k = 1; i + j + k <= n(); ++k) {
        bool ok = true;
        for (Elem a = 0; a < module(i)->order() && ok; ++a)
          for (Elem b = 0; b < module(j)->order() && ok; ++b) {
            const Elem ab = apply(i, j, a, b);
            for (Elem c = 0; c < module(k)->order() && ok; ++c) {
              const Elem lhs = apply(i + j, k, ab, c);
              const Elem rhs = apply(i, j + k, a, apply(j, k, b, c));
              if (lhs != rhs) {
                ok = false;
                const auto& out = module(i + j + k);
                record({"associative", i, j, k, a, b, c, lhs, rhs,
                        "(m_" + std::to_string(i) + " m_" + std::to_string(j) + ") m_" + std::to_string(k) +
                            " = " + out->name(lhs) + " but m_" + std::to_string(i) + " (m_" + std::to_string(j) +
                            " m_" + std::to_string(k) + ") = " + out->name(rhs) + " at (" + module(i)->name(a) +
                            ", " + module(j)->name(b) + ", " + module(k)->name(c) + ")"});
              }
            }
          }
        if (!ok) rep.associative_ok = false;
      }
  return rep;
}

ProductMapFamily family_explicit(const RingPtr& r, const std::vector<ModulePtr>& modules,
                                 std::map<std::pair<int, int>, ProductMapFamily::Table> tables) {
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::explicit_tables);
}

ProductMapFamily family_zero(const RingPtr& r, const std::vector<ModulePtr>& modules) {
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  const int n = static_cast<int>(modules.size());
  for (auto [i, j] : admissible_pairs(n))
    tables[{i, j}].assign(modules[i - 1]->order() * modules[j - 1]->order(), 0);
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::zero);
}

ProductMapFamily family_structure_constants(const RingPtr& r, const std::vector<ModulePtr>& modules,
                                            const std::map<std::pair<int, int>, Elem>& constants) {
  const int n = static_cast<int>(modules.size());
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (int i = 1; i <= n; ++i) {
    const auto& m = modules[i - 1];
    if (!m->generator()) throw AxiomError("structure constants need a declared generator of M_" + std::to_string(i));
    if (cyclic(m, *m->generator()).size() != m->order())
      throw AxiomError("M_" + std::to_string(i) + " is not generated by its declared generator");
  }
  for (auto [i, j] : admissible_pairs(n)) {
    auto it = constants.find({i, j});
    if (it == constants.end())
      throw AxiomError("structure constant r" + std::to_string(i) + std::to_string(j) + " missing");
    if (it->second >= r->order()) throw AxiomError("structure constant outside the ring");
    const auto& mi = modules[i - 1];
    const auto& mj = modules[j - 1];
    const auto& mk = modules[i + j - 1];
    const Elem gi = *mi->generator(), gj = *mj->generator(), gk = *mk->generator();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    ProductMapFamily::Table t(mi->order() * mj->order(), kUnset);
    for (Elem a = 0; a < r->order(); ++a)
      for (Elem b = 0; b < r->order(); ++b) {
        const Elem x = mi->act(a, gi), y = mj->act(b, gj);
        const Elem v = mk->act(r->mul(r->mul(a, b), it->second), gk);
        Elem& slot = t[x * mj->order() + y];
        if (slot == kUnset) {
          slot = v;
        } else if (slot != v) {
          throw AxiomError("structure constant r" + std::to_string(i) + std::to_string(j) +
                           " does not give a well-defined map (inconsistent origin) at (" + mi->name(x) + ", " +
                           mj->name(y) + ")");
        }
      }
    tables[{i, j}] = std::move(t);
  }
  ProductMapFamily f(r, modules, std::move(tables), MapOrigin::structure_constants);
  f.constants_ = constants;
  return f;
}

ProductMapFamily family_ring_multiplication(const RingPtr& r, int n) {
  std::vector<ModulePtr> modules;
  const ModulePtr reg = make_regular_module(r);
  for (int i = 0; i < n; ++i) modules.push_back(reg);
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto p : admissible_pairs(n)) tables[p] = r->mul_table();
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::algebra);
}

ProductMapFamily family_algebra(const RingPtr& r, const RingPtr& t, const std::vector<ModulePtr>& modules,
                                const std::vector<std::vector<Elem>>& embeddings) {
  const int n = static_cast<int>(modules.size());
  if (embeddings.size() != modules.size()) throw AxiomError("one embedding per module required");
  std::vector<std::vector<Elem>> back(modules.size());
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto& e = embeddings[i];
    if (e.size() != modules[i]->order()) throw AxiomError("embedding of M_" + std::to_string(i + 1) + " has wrong size");
    back[i].assign(t->order(), static_cast<Elem>(-1));
    for (Elem x = 0; x < e.size(); ++x) {
      if (e[x] >= t->order()) throw AxiomError("embedding leaves the algebra");
      if (back[i][e[x]] != static_cast<Elem>(-1))
        throw AxiomError("embedding of M_" + std::to_string(i + 1) + " is not injective");
      back[i][e[x]] = x;
    }
  }
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(n)) {
    const auto& ei = embeddings[i - 1];
    const auto& ej = embeddings[j - 1];
    const auto& bk = back[i + j - 1];
    ProductMapFamily::Table tbl(ei.size() * ej.size());
    for (Elem a = 0; a < ei.size(); ++a)
      for (Elem b = 0; b < ej.size(); ++b) {
        const Elem p = t->mul(ei[a], ej[b]);
        if (bk[p] == static_cast<Elem>(-1))
          throw AxiomError("N_" + std::to_string(i) + " N_" + std::to_string(j) + " is not inside N_" +
                           std::to_string(i + j) + ": product " + t->name(p) + " escapes");
        tbl[a * ej.size() + b] = bk[p];
      }
    tables[{i, j}] = std::move(tbl);
  }
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::algebra);
}

ProductMapFamily family_componentwise(const RingPtr& r, const std::vector<ModulePtr>& modules) {
  const int n = static_cast<int>(modules.size());
  const auto width = modules.front()->invariant_factors().size();
  for (const auto& m : modules) {
    const auto& f = m->invariant_factors();
    if (f.size() != width) throw AxiomError("componentwise maps need modules of equal rank");
    for (int d : f)
      if (static_cast<std::size_t>(d) != r->order() || r->modulus() != d)
        throw AxiomError("componentwise maps need modules (Z/m)^k over Z/m");
  }
  const std::size_t q = r->order();
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(n)) {
    const std::size_t oi = modules[i - 1]->order(), oj = modules[j - 1]->order();
    ProductMapFamily::Table tbl(oi * oj);
    for (std::size_t a = 0; a < oi; ++a)
      for (std::size_t b = 0; b < oj; ++b) {
        std::size_t x = a, y = b, out = 0, place = 1;
        for (std::size_t c = 0; c < width; ++c) {
          out += place * r->mul(static_cast<Elem>(x % q), static_cast<Elem>(y % q));
          x /= q;
          y /= q;
          place *= q;
        }
        tbl[a * oj + b] = static_cast<Elem>(out);
      }
    tables[{i, j}] = std::move(tbl);
  }
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::algebra);
}

ProductMapFamily family_polynomial_tail(const RingPtr& r, int n, const ModulePtr& m) {
  if (n < 1) throw AxiomError("n must be at least 1");
  if (m->ring() != r) throw AxiomError("tail module is over a different ring");
  std::vector<ModulePtr> modules;
  const ModulePtr reg = make_regular_module(r);
  for (int i = 1; i < n; ++i) modules.push_back(reg);
  modules.push_back(m);
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(n)) {
    if (i + j < n)
      tables[{i, j}] = r->mul_table();
    else
      tables[{i, j}].assign(modules[i - 1]->order() * modules[j - 1]->order(), 0);
  }
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::explicit_tables);
}

ProductMapFamily family_quotient_tower(const RingPtr& r, const RingPtr& t, const std::vector<Elem>& hom,
                                       const std::vector<ElementSet>& ideals) {
  const int n = static_cast<int>(ideals.size());
  for (int i = 1; i < n; ++i)
    if (!ideals[i - 1].subset_of(ideals[i])) throw AxiomError("quotient tower needs J_1 ⊆ ... ⊆ J_n");
  std::vector<ModulePtr> modules;
  std::vector<std::vector<Elem>> coset(ideals.size());
  std::vector<std::vector<Elem>> reps(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    RingPtr q = make_quotient(t, ideals[i]);
    coset[i].assign(t->order(), static_cast<Elem>(-1));
    for (Elem x = 0; x < t->order(); ++x) {
      if (coset[i][x] != static_cast<Elem>(-1)) continue;
      const auto id = static_cast<Elem>(reps[i].size());
      reps[i].push_back(x);
      ideals[i].for_each([&](Elem y) { coset[i][t->add(x, y)] = id; });
    }
    std::vector<Elem> h(r->order());
    for (Elem s = 0; s < r->order(); ++s) h[s] = coset[i][hom[s]];
    modules.push_back(make_algebra_module(r, q, h));
  }
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(n)) {
    const auto& ri = reps[i - 1];
    const auto& rj = reps[j - 1];
    ProductMapFamily::Table tbl(ri.size() * rj.size());
    for (std::size_t a = 0; a < ri.size(); ++a)
      for (std::size_t b = 0; b < rj.size(); ++b) tbl[a * rj.size() + b] = coset[i + j - 1][t->mul(ri[a], rj[b])];
    tables[{i, j}] = std::move(tbl);
  }
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::algebra);
}

ProductMapFamily family_ideal_chain(const RingPtr& r, const std::vector<ElementSet>& ideals, const ModulePtr& top) {
  const int n = static_cast<int>(ideals.size()) + 1;
  if (!top->generator()) throw AxiomError("the last module must be cyclic with a declared generator");
  const Elem a = *top->generator();
  const ModulePtr reg = make_regular_module(r);
  std::vector<ModulePtr> modules;
  std::vector<std::vector<Elem>> embed;
  std::vector<std::vector<Elem>> back;
  for (const auto& ideal : ideals) {
    Submodule s{reg, {}, ideal};
    auto sm = submodule_as_module(s);
    back.emplace_back(r->order(), static_cast<Elem>(-1));
    for (Elem k = 0; k < sm.embed.size(); ++k) back.back()[sm.embed[k]] = k;
    modules.push_back(sm.module);
    embed.push_back(sm.embed);
  }
  modules.push_back(top);
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(n)) {
    const auto& ei = embed[i - 1];
    const auto& ej = embed[j - 1];
    ProductMapFamily::Table tbl(ei.size() * ej.size());
    for (std::size_t x = 0; x < ei.size(); ++x)
      for (std::size_t y = 0; y < ej.size(); ++y) {
        const Elem p = r->mul(ei[x], ej[y]);
        Elem v;
        if (i + j < n) {
          v = back[i + j - 1][p];
          if (v == static_cast<Elem>(-1))
            throw AxiomError("N_" + std::to_string(i) + " N_" + std::to_string(j) + " is not inside N_" +
                             std::to_string(i + j));
        } else {
          v = top->act(p, a);
        }
        tbl[x * ej.size() + y] = v;
      }
    tables[{i, j}] = std::move(tbl);
  }
  return ProductMapFamily(r, modules, std::move(tables), MapOrigin::explicit_tables);
}

}  // namespace ntx
