#include "ntx/extension.hpp"

#include <algorithm>

namespace ntx {

NTrivialExtension::NTrivialExtension(ProductMapFamily family, Strictness strictness)
    : family_(std::move(family)), strictness_(strictness) {
  report_ = family_.validate();
  if (strictness_ == Strictness::strict && !(report_.symmetric_ok && report_.associative_ok)) {
    const std::string w = report_.witnesses.empty() ? "" : ": " + report_.witnesses.front().text;
    throw AxiomError(std::string("strict extension needs a ") +
                     (report_.symmetric_ok ? "associative" : "symmetric") + " product map family" + w);
  }
  sizes_.push_back(ring()->order());
  for (int i = 1; i <= n(); ++i) {
    sizes_.push_back(module(i)->order());
    if (module(i)->is_zero())
      warnings_.push_back("M_" + std::to_string(i) + " = 0; the standing convention assumes nonzero modules");
  }
  for (std::size_t s : sizes_) order_ *= s;
  if (strictness_ == Strictness::exploratory) {
    if (!report_.symmetric_ok) warnings_.push_back("exploratory: multiplication is not commutative");
    if (!report_.associative_ok) warnings_.push_back("exploratory: multiplication is not associative");
  }
}

std::string NTrivialExtension::label() const {
  std::string out = ring()->label() + " ⋉_" + std::to_string(n());
  for (int i = 1; i <= n(); ++i) out += (i == 1 ? " " : " ⋉ ") + module(i)->label();
  return out;
}

Elem NTrivialExtension::encode(const Coords& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) idx = idx * sizes_[i] + c[i];
  return static_cast<Elem>(idx);
}

Coords NTrivialExtension::decode(Elem e) const {
  Coords c(sizes_.size());
  std::size_t rest = e;
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    c[i] = static_cast<Elem>(rest % sizes_[i]);
    rest /= sizes_[i];
  }
  return c;
}

Elem NTrivialExtension::comp_add(int i, Elem a, Elem b) const {
  return i == 0 ? ring()->add(a, b) : module(i)->add(a, b);
}

Elem NTrivialExtension::comp_neg(int i, Elem a) const { return i == 0 ? ring()->neg(a) : module(i)->neg(a); }

Elem NTrivialExtension::comp_mul(int i, Elem a, int j, Elem b) const {
  if (i == 0 && j == 0) return ring()->mul(a, b);
  if (i == 0) return module(j)->act(a, b);
  if (j == 0) return module(i)->act(b, a);
  return family_.apply(i, j, a, b);
}

Coords NTrivialExtension::one() const {
  Coords c = zero();
  c[0] = ring()->one();
  return c;
}

Coords NTrivialExtension::add(const Coords& x, const Coords& y) const {
  Coords c(x.size());
  for (int i = 0; i <= n(); ++i) c[i] = comp_add(i, x[i], y[i]);
  return c;
}

Coords NTrivialExtension::neg(const Coords& x) const {
  Coords c(x.size());
  for (int i = 0; i <= n(); ++i) c[i] = comp_neg(i, x[i]);
  return c;
}

Coords NTrivialExtension::mul(const Coords& x, const Coords& y) const {
  Coords c = zero();
  for (int k = 0; k <= n(); ++k)
    for (int i = 0; i <= k; ++i) {
      if (x[i] == 0 || y[k - i] == 0) continue;
      c[k] = comp_add(k, c[k], comp_mul(i, x[i], k - i, y[k - i]));
    }
  return c;
}

Coords NTrivialExtension::homogeneous(int i, Elem m) const {
  Coords c = zero();
  c[i] = m;
  return c;
}

std::string NTrivialExtension::name(const Coords& c) const {
  std::vector<std::string> parts;
  parts.push_back(ring()->name(c[0]));
  for (int i = 1; i <= n(); ++i) parts.push_back(module(i)->name(c[i]));
  return "(" + join(parts, ",") + ")";
}

std::optional<Coords> NTrivialExtension::parse(const std::string& text) const {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  // Split on top-level commas so that names like "(1,0)" survive.
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != static_cast<std::size_t>(n() + 1)) return std::nullopt;
  Coords c(parts.size());
  for (int i = 0; i <= n(); ++i) {
    auto v = i == 0 ? ring()->parse(parts[i]) : module(i)->parse(parts[i]);
    if (!v) return std::nullopt;
    c[i] = *v;
  }
  return c;
}

void NTrivialExtension::require_strict(const char* what) const {
  if (strictness_ != Strictness::strict)
    throw HypothesisError(std::string(what) + " refuses an exploratory extension (not a commutative associative ring)");
}

const RingPtr& NTrivialExtension::flat() const {
  require_strict("the flattened ring");
  std::call_once(flat_once_, [this] {
    const std::size_t ord = order_;
    const std::size_t w = sizes_.size();
    std::vector<Elem> coords(ord * w);
    for (Elem e = 0; e < ord; ++e) {
      const Coords c = decode(e);
      std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(e * w));
    }
    RingTables t;
    t.order = ord;
    t.add.resize(ord * ord);
    t.mul.resize(ord * ord);
    Coords s(w), p(w);
    for (std::size_t a = 0; a < ord; ++a) {
      const Elem* x = &coords[a * w];
      for (std::size_t b = 0; b < ord; ++b) {
        const Elem* y = &coords[b * w];
        for (std::size_t k = 0; k < w; ++k) {
          s[k] = comp_add(static_cast<int>(k), x[k], y[k]);
          Elem acc = 0;
          for (std::size_t i = 0; i <= k; ++i) {
            if (x[i] == 0 || y[k - i] == 0) continue;
            acc = comp_add(static_cast<int>(k), acc,
                           comp_mul(static_cast<int>(i), x[i], static_cast<int>(k - i), y[k - i]));
          }
          p[k] = acc;
        }
        t.add[a * ord + b] = encode(s);
        t.mul[a * ord + b] = encode(p);
      }
    }
    t.one = encode(one());
    t.label = label();
    t.names.reserve(ord);
    for (Elem e = 0; e < ord; ++e) t.names.push_back(name(decode(e)));
    // Axioms follow from the validated family; see README (validation of flattened rings).
    ValidationOptions trusted;
    trusted.trusted = true;
    flat_ = std::make_shared<FiniteRing>(std::move(t), trusted);
  });
  return flat_;
}

namespace {

std::vector<Coords> homogeneous_list(const NTrivialExtension& e) {
  std::vector<Coords> out;
  for (int i = 0; i <= e.n(); ++i)
    for (Elem m = 1; m < e.component_order(i); ++m) out.push_back(e.homogeneous(i, m));
  return out;
}

}  // namespace

std::optional<NTrivialExtension::Triple> NTrivialExtension::nonassociative_witness() const {
  // Multiplication is additive in each argument, so homogeneous triples suffice.
  const auto hs = homogeneous_list(*this);
  for (const auto& a : hs)
    for (const auto& b : hs) {
      const Coords ab = mul(a, b);
      for (const auto& c : hs) {
        Coords lhs = mul(ab, c);
        Coords rhs = mul(a, mul(b, c));
        if (lhs != rhs) return Triple{a, b, c, std::move(lhs), std::move(rhs)};
      }
    }
  return std::nullopt;
}

std::optional<std::pair<Coords, Coords>> NTrivialExtension::noncommutative_witness() const {
  const auto hs = homogeneous_list(*this);
  for (const auto& a : hs)
    for (const auto& b : hs)
      if (mul(a, b) != mul(b, a)) return std::make_pair(a, b);
  return std::nullopt;
}

ExtensionPtr make_extension(ProductMapFamily family, Strictness strictness) {
  return std::make_shared<NTrivialExtension>(std::move(family), strictness);
}

ProductMapFamily restrict_family(const ProductMapFamily& f, int m) {
  if (m < 1 || m > f.n()) throw UsageError("restriction length out of range");
  std::vector<ModulePtr> modules(f.modules().begin(), f.modules().begin() + m);
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto p : admissible_pairs(m)) tables[p] = f.table(p.first, p.second);
  return ProductMapFamily(f.ring(), modules, std::move(tables), f.origin());
}

bool ToeplitzMatrix::is_toeplitz() const {
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      if (c < r) {
        if (entries[r][c]) return false;
        continue;
      }
      if (!entries[r][c] || entries[r][c] != entries[0][c - r]) return false;
    }
  return true;
}

ToeplitzMatrix matrix_view(const NTrivialExtension& e, const Coords& x) {
  ToeplitzMatrix m;
  m.size = e.n() + 1;
  m.entries.assign(static_cast<std::size_t>(m.size), std::vector<std::optional<Elem>>(static_cast<std::size_t>(m.size)));
  for (int r = 0; r < m.size; ++r)
    for (int c = r; c < m.size; ++c) m.entries[r][c] = x[static_cast<std::size_t>(c - r)];
  return m;
}

ToeplitzMatrix matrix_product(const NTrivialExtension& e, const ToeplitzMatrix& a, const ToeplitzMatrix& b) {
  ToeplitzMatrix m;
  m.size = a.size;
  m.entries.assign(static_cast<std::size_t>(m.size), std::vector<std::optional<Elem>>(static_cast<std::size_t>(m.size)));
  for (int r = 0; r < m.size; ++r)
    for (int c = r; c < m.size; ++c) {
      // Entry (r, k) of a has degree k - r, entry (k, c) of b has degree c - k.
      Elem acc = 0;
      for (int k = r; k <= c; ++k)
        acc = e.comp_add(c - r, acc, e.comp_mul(k - r, *a.entries[r][k], c - k, *b.entries[k][c]));
      m.entries[r][c] = acc;
    }
  return m;
}

MatrixCheck matrix_check(const NTrivialExtension& e, std::size_t max_pairs) {
  MatrixCheck res;
  const std::size_t ord = e.order();
  const std::size_t total = ord * ord;
  const std::size_t stride = total <= max_pairs ? 1 : total / max_pairs + 1;
  for (std::size_t p = 0; p < total; p += stride) {
    const Coords x = e.decode(static_cast<Elem>(p / ord));
    const Coords y = e.decode(static_cast<Elem>(p % ord));
    const ToeplitzMatrix prod = matrix_product(e, matrix_view(e, x), matrix_view(e, y));
    const ToeplitzMatrix direct = matrix_view(e, e.mul(x, y));
    ++res.pairs_checked;
    if (!prod.is_toeplitz() || prod.entries != direct.entries) {
      res.ok = false;
      res.witness = "matrix of " + e.name(x) + "*" + e.name(y) + " differs from the matrix product";
      return res;
    }
  }
  return res;
}

std::string to_string(GradingKind k) {
  switch (k) {
    case GradingKind::n0_truncated: return "N0";
    case GradingKind::z_mod: return "Z_{n+1}";
    case GradingKind::gamma: return "Gamma_{n+1}";
  }
  return "unknown";
}

std::optional<int> GradingMonoid::combine(int a, int b) const {
  switch (kind) {
    case GradingKind::n0_truncated: return a + b <= n ? std::optional<int>(a + b) : std::nullopt;
    case GradingKind::z_mod: return (a + b) % (n + 1);
    case GradingKind::gamma: return a + b <= n ? a + b : 0;
  }
  return std::nullopt;
}

ElementSet homogeneous_elements(const NTrivialExtension& e) {
  ElementSet out(e.order());
  out.insert(0);
  for (int i = 0; i <= e.n(); ++i)
    for (Elem m = 1; m < e.component_order(i); ++m) out.insert(e.encode(e.homogeneous(i, m)));
  return out;
}

GradingReport grading_check(const NTrivialExtension& e, GradingKind kind) {
  GradingReport rep;
  rep.kind = kind;
  const GradingMonoid g{kind, e.n()};
  const int n = e.n();
  if (kind != GradingKind::n0_truncated) {
    // The carrier {0..n} must be a commutative monoid with identity 0.
    for (int a = 0; a <= n && rep.monoid_ok; ++a) {
      if (g.combine(0, a) != a) {
        rep.monoid_ok = false;
        rep.witness = "0 is not an identity at " + std::to_string(a);
      }
      for (int b = 0; b <= n && rep.monoid_ok; ++b) {
        if (g.combine(a, b) != g.combine(b, a)) {
          rep.monoid_ok = false;
          rep.witness = "degree addition not commutative";
        }
        for (int c = 0; c <= n && rep.monoid_ok; ++c)
          if (g.combine(*g.combine(a, b), c) != g.combine(a, *g.combine(b, c))) {
            rep.monoid_ok = false;
            rep.witness = "degree addition not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")";
          }
      }
    }
  }
  for (int a = 0; a <= n && rep.products_ok; ++a)
    for (int b = 0; b <= n && rep.products_ok; ++b) {
      const auto target = g.combine(a, b);
      for (Elem x = 1; x < e.component_order(a) && rep.products_ok; ++x)
        for (Elem y = 1; y < e.component_order(b) && rep.products_ok; ++y) {
          const Coords p = e.mul(e.homogeneous(a, x), e.homogeneous(b, y));
          for (int k = 0; k <= n; ++k)
            if (p[k] != 0 && (!target || *target != k)) {
              rep.products_ok = false;
              rep.witness = "S_" + std::to_string(a) + " * S_" + std::to_string(b) + " leaves its component at " +
                            e.name(p);
              break;
            }
        }
    }
  rep.homogeneous_count = homogeneous_elements(e).size();
  return rep;
}

namespace {

void require_strict(const NTrivialExtension& e, const char* what) {
  if (e.strictness() != Strictness::strict)
    throw HypothesisError(std::string(what) + " refuses an exploratory extension");
}

std::size_t kernel_size(const std::vector<Elem>& f) {
  return static_cast<std::size_t>(std::count(f.begin(), f.end(), Elem{0}));
}

}  // namespace

HomCheck check_pi(const NTrivialExtension& e, int m) {
  require_strict(e, "pi");
  if (m < 0 || m > e.n()) throw UsageError("pi index out of range");
  HomCheck res;
  res.name = "pi_" + std::to_string(m);
  const FiniteRing& src = *e.flat();
  RingPtr target;
  std::optional<NTrivialExtension> trunc;
  if (m == 0) {
    target = e.ring();
  } else {
    trunc.emplace(restrict_family(e.family(), m));
    target = trunc->flat();
  }
  res.table.resize(e.order());
  for (Elem x = 0; x < e.order(); ++x) {
    const Coords c = e.decode(x);
    res.table[x] = m == 0 ? c[0] : trunc->encode(Coords(c.begin(), c.begin() + m + 1));
  }
  const MapCheck hom = check_ring_hom(src, *target, res.table, true);
  std::vector<char> hit(target->order(), 0);
  for (Elem v : res.table) hit[v] = 1;
  const bool onto = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  res.ok = hom.ok && onto;
  res.witness = !hom.ok ? hom.witness : (onto ? "" : "not surjective");
  res.kernel_size = kernel_size(res.table);
  return res;
}

HomCheck check_big_pi(const NTrivialExtension& e, int i) {
  require_strict(e, "Pi");
  if (i < 0 || i > e.n()) throw UsageError("Pi index out of range");
  HomCheck res;
  res.name = "Pi_" + std::to_string(i);
  res.table.resize(e.order());
  for (Elem x = 0; x < e.order(); ++x) res.table[x] = e.decode(x)[static_cast<std::size_t>(i)];
  if (i == 0) {
    const MapCheck hom = check_ring_hom(*e.flat(), *e.ring(), res.table, true);
    res.ok = hom.ok;
    res.witness = hom.witness;
  } else {
    const FiniteRing& s = *e.flat();
    const auto& mi = e.module(i);
    res.ok = true;
    for (Elem x = 0; x < e.order() && res.ok; ++x) {
      for (Elem y = 0; y < e.order() && res.ok; ++y)
        if (res.table[s.add(x, y)] != mi->add(res.table[x], res.table[y])) {
          res.ok = false;
          res.witness = "not additive at (" + s.name(x) + ", " + s.name(y) + ")";
        }
      for (Elem r = 0; r < e.ring()->order() && res.ok; ++r) {
        const Elem rx = e.encode(e.mul(e.homogeneous(0, r), e.decode(x)));
        if (res.table[rx] != mi->act(r, res.table[x])) {
          res.ok = false;
          res.witness = "not R-linear at r = " + e.ring()->name(r) + ", " + s.name(x);
        }
      }
    }
  }
  res.kernel_size = kernel_size(res.table);
  return res;
}

HomCheck check_iota(const NTrivialExtension& e) {
  require_strict(e, "iota");
  HomCheck res;
  res.name = "iota";
  res.table.resize(e.ring()->order());
  for (Elem r = 0; r < e.ring()->order(); ++r) res.table[r] = e.encode(e.homogeneous(0, r));
  const MapCheck hom = check_ring_hom(*e.ring(), *e.flat(), res.table, true);
  std::vector<Elem> sorted = res.table;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  res.ok = hom.ok && injective;
  res.witness = !hom.ok ? hom.witness : (injective ? "" : "not injective");
  res.kernel_size = kernel_size(res.table);
  return res;
}

Coords tilde(const NTrivialExtension& e, const Coords& x) {
  require_strict(e, "tilde");
  Coords c = x;
  Coords acc = e.one();
  for (int k = 1; k <= e.n(); ++k) {
    Coords f = e.zero();
    f[0] = c[0];
    f[static_cast<std::size_t>(k)] = e.comp_neg(k, c[static_cast<std::size_t>(k)]);
    c = e.mul(c, f);
    acc = e.mul(acc, f);
  }
  return acc;
}

std::optional<Elem> SetComparison::offending() const {
  std::optional<Elem> out;
  for (Elem x = 0; x < closed_form.universe() && !out; ++x)
    if (closed_form.contains(x) != brute_force.contains(x)) out = x;
  return out;
}

bool ExtensionClassification::all_agree() const {
  return std::all_of(sets.begin(), sets.end(), [](const SetComparison& s) { return s.agree(); });
}

ExtensionClassification classify_extension(const NTrivialExtension& e) {
  require_strict(e, "classify");
  const FiniteRing& r = *e.ring();
  const RingClassification base = classify(r);
  const ElementSet base_j = jacobson_by_units(r);
  ElementSet zd_base = base.zero_divisors;
  for (int i = 1; i <= e.n(); ++i) zd_base = zd_base.unite(zero_divisors_on(e.module(i)));

  const std::size_t ord = e.order();
  ElementSet units(ord), zd(ord), idem(ord), nil(ord), jac(ord);
  for (Elem x = 0; x < ord; ++x) {
    const Coords c = e.decode(x);
    const bool tail_zero = std::all_of(c.begin() + 1, c.end(), [](Elem v) { return v == 0; });
    if (base.units.contains(c[0])) units.insert(x);
    if (x != 0 && zd_base.contains(c[0])) zd.insert(x);
    if (tail_zero && base.idempotents.contains(c[0])) idem.insert(x);
    if (base.nilpotents.contains(c[0])) nil.insert(x);
    if (base_j.contains(c[0])) jac.insert(x);
  }
  const FiniteRing& s = *e.flat();
  const RingClassification brute = classify(s);
  ExtensionClassification out;
  out.sets.push_back({"units", units, brute.units});
  out.sets.push_back({"zero_divisors", zd, brute.zero_divisors});
  out.sets.push_back({"idempotents", idem, brute.idempotents});
  out.sets.push_back({"nilradical", nil, brute.nilpotents});
  out.sets.push_back({"jacobson", jac, jacobson_by_units(s)});
  return out;
}

IsoCheck poly_iso(const NTrivialExtension& e) {
  require_strict(e, "poly isomorphism");
  const RingPtr& r = e.ring();
  for (int i = 1; i <= e.n(); ++i) {
    const auto& m = e.module(i);
    if (m->order() != r->order() || m->add_table() != r->add_table() || m->act_table() != r->mul_table())
      throw HypothesisError("M_" + std::to_string(i) + " is not the regular module R");
  }
  for (auto [i, j] : admissible_pairs(e.n()))
    if (e.family().table(i, j) != r->mul_table())
      throw HypothesisError("phi_{" + std::to_string(i) + "," + std::to_string(j) + "} is not ring multiplication");
  ValidationOptions opts;
  opts.exhaustive_cap = 512;  // the table comparison below is exhaustive either way
  const RingPtr poly = make_truncated_poly(r, e.n() + 1, opts);
  IsoCheck res;
  const std::size_t q = r->order();
  res.map.resize(e.order());
  for (Elem x = 0; x < e.order(); ++x) {
    const Coords c = e.decode(x);
    std::size_t idx = 0;
    for (Elem a : c) idx = idx * q + a;  // coefficient of X^0 most significant in the polynomial encoding
    res.map[x] = static_cast<Elem>(idx);
  }
  const MapCheck hom = check_ring_hom(*e.flat(), *poly, res.map, true);
  res.ok = hom.ok && is_bijective(res.map, poly->order());
  res.witness = hom.ok ? (res.ok ? "" : "not bijective") : hom.witness;
  res.table_entries_checked = 2 * e.order() * e.order();
  return res;
}

std::vector<ExtensionPtr> product_components(const NTrivialExtension& e) {
  const RingPtr& r = e.ring();
  const auto& factors = r->factors();
  if (factors.empty()) throw HypothesisError("base ring is not built as a direct product");
  std::vector<ExtensionPtr> out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const RingPtr& rj = factors[j];
    std::vector<Elem> unit_coords(factors.size(), 0);
    unit_coords[j] = factors[j]->one();
    const Elem ej = r->from_factor_coords(unit_coords);
    std::vector<Elem> lift(rj->order());
    for (Elem x = 0; x < rj->order(); ++x) {
      std::vector<Elem> c(factors.size(), 0);
      c[j] = x;
      lift[x] = r->from_factor_coords(c);
    }
    std::vector<ModulePtr> mods;
    std::vector<std::vector<Elem>> embed, back;
    for (int i = 1; i <= e.n(); ++i) {
      const auto& m = e.module(i);
      mods.push_back(corner_module(m, ej, rj, lift));
      ElementSet image(m->order());
      for (Elem v = 0; v < m->order(); ++v) image.insert(m->act(ej, v));
      embed.push_back(image.elements());
      back.emplace_back(m->order(), static_cast<Elem>(-1));
      for (Elem k = 0; k < embed.back().size(); ++k) back.back()[embed.back()[k]] = k;
    }
    std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
    for (auto [a, b] : admissible_pairs(e.n())) {
      const auto& ea = embed[a - 1];
      const auto& eb = embed[b - 1];
      ProductMapFamily::Table t(ea.size() * eb.size());
      for (std::size_t x = 0; x < ea.size(); ++x)
        for (std::size_t y = 0; y < eb.size(); ++y) {
          const Elem v = back[a + b - 1][e.family().apply(a, b, ea[x], eb[y])];
          if (v == static_cast<Elem>(-1)) throw AxiomError("product map leaves the component e_j M");
          t[x * eb.size() + y] = v;
        }
      tables[{a, b}] = std::move(t);
    }
    out.push_back(make_extension(family_explicit(rj, mods, std::move(tables))));
  }
  return out;
}

IsoCheck product_iso(const NTrivialExtension& e) {
  require_strict(e, "product isomorphism");
  const auto comps = product_components(e);
  std::vector<RingPtr> flats;
  for (const auto& c : comps) flats.push_back(c->flat());
  const RingPtr target = make_product(flats, [] {
    ValidationOptions o;
    o.trusted = true;
    return o;
  }());
  const RingPtr& r = e.ring();
  IsoCheck res;
  res.map.resize(e.order());
  for (Elem x = 0; x < e.order(); ++x) {
    const Coords c = e.decode(x);
    const std::vector<Elem> rc = r->factor_coords(c[0]);
    std::vector<Elem> parts(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::vector<Elem> unit_coords(r->factors().size(), 0);
      unit_coords[j] = r->factors()[j]->one();
      const Elem ej = r->from_factor_coords(unit_coords);
      Coords cj(c.size());
      cj[0] = rc[j];
      for (int i = 1; i <= e.n(); ++i) {
        // index of e_j m_i inside the corner module: position among sorted image elements
        const auto& m = e.module(i);
        const Elem v = m->act(ej, c[static_cast<std::size_t>(i)]);
        Elem pos = 0;
        for (Elem w = 0; w < v; ++w)
          if (m->act(ej, w) == w) ++pos;
        cj[static_cast<std::size_t>(i)] = pos;
      }
      parts[j] = comps[j]->encode(cj);
    }
    res.map[x] = target->from_factor_coords(parts);
  }
  const MapCheck hom = check_ring_hom(*e.flat(), *target, res.map, true);
  res.ok = hom.ok && is_bijective(res.map, target->order());
  res.witness = hom.ok ? (res.ok ? "" : "not bijective") : hom.witness;
  res.table_entries_checked = 2 * e.order() * e.order();
  return res;
}

}  // namespace ntx
