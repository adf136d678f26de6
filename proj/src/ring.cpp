#include "ntx/ring.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

namespace ntx {

namespace {

std::string triple(const FiniteRing& r, Elem a, Elem b, Elem c) {
  return "(" + r.name(a) + ", " + r.name(b) + ", " + r.name(c) + ")";
}

}  // namespace

FiniteRing::FiniteRing(RingTables t, const ValidationOptions& opts)
    : order_(t.order),
      one_(t.one),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      label_(std::move(t.label)),
      names_(std::move(t.names)) {
  if (order_ < 2) throw AxiomError("trivial ring rejected: order must be at least 2");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
    throw AxiomError("operation tables must have order*order entries");
  for (Elem v : add_)
    if (v >= order_) throw AxiomError("addition table leaves the carrier");
  for (Elem v : mul_)
    if (v >= order_) throw AxiomError("multiplication table leaves the carrier");
  if (one_ >= order_) throw AxiomError("identity index outside the carrier");
  if (one_ == 0) throw AxiomError("one equals zero: trivial ring rejected");
  if (names_.size() != order_) {
    names_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) names_[i] = std::to_string(i);
  }
  neg_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    bool found = false;
    for (Elem b = 0; b < order_; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        found = true;
        break;
      }
    if (!found) throw AxiomError("additive inverse missing for " + names_[a]);
  }
  if (!opts.trusted) validate(opts);
}

void FiniteRing::validate(const ValidationOptions& opts) {
  const std::size_t n = order_;
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a) throw AxiomError("zero is not an additive identity at " + names_[a]);
    if (mul(one_, a) != a) throw AxiomError("one is not a multiplicative identity at " + names_[a]);
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a))
        throw AxiomError("addition not commutative at (" + names_[a] + ", " + names_[b] + ")");
      if (mul(a, b) != mul(b, a))
        throw AxiomError("multiplication not commutative at (" + names_[a] + ", " + names_[b] + ")");
    }
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (add(add(a, b), c) != add(a, add(b, c)))
      throw AxiomError("addition not associative at " + triple(*this, a, b, c));
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw AxiomError("multiplication not associative at " + triple(*this, a, b, c));
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      throw AxiomError("distributivity fails at " + triple(*this, a, b, c));
  };
  if (n <= opts.exhaustive_cap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t s = 0; s < opts.samples; ++s) check(pick(rng), pick(rng), pick(rng));
    warnings_.push_back("order " + std::to_string(n) + " exceeds exhaustive cap " +
                        std::to_string(opts.exhaustive_cap) + "; axioms spot-checked on " +
                        std::to_string(opts.samples) + " random triples");
  }
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::integer(std::uint64_t k) const {
  Elem result = 0;
  Elem base = one_;
  while (k) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteRing::additive_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != 0) {
    x = add(x, a);
    ++k;
  }
  return k;
}

std::optional<Elem> FiniteRing::parse(const std::string& text) const {
  for (Elem i = 0; i < order_; ++i)
    if (names_[i] == text) return i;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos);
    if (pos == text.size() && v < order_) return static_cast<Elem>(v);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

std::vector<Elem> FiniteRing::factor_coords(Elem a) const {
  std::vector<Elem> c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto q = static_cast<Elem>(factors_[i]->order());
    c[i] = a % q;
    a /= q;
  }
  return c;
}

Elem FiniteRing::from_factor_coords(const std::vector<Elem>& c) const {
  Elem idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<Elem>(factors_[i]->order()) + c[i];
  return idx;
}

RingPtr make_zm(int m, const ValidationOptions& opts) {
  if (m < 2) throw AxiomError("Z/m requires m >= 2");
  RingTables t;
  t.order = static_cast<std::size_t>(m);
  t.add.resize(t.order * t.order);
  t.mul.resize(t.order * t.order);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t.add[a * m + b] = static_cast<Elem>((a + b) % m);
      t.mul[a * m + b] = static_cast<Elem>((a * b) % m);
    }
  t.one = 1;
  t.label = "Z" + std::to_string(m);
  for (int a = 0; a < m; ++a) t.names.push_back(std::to_string(a));
  auto r = std::make_shared<FiniteRing>(std::move(t), opts);
  r->modulus_ = m;
  return r;
}

RingPtr make_product(const std::vector<RingPtr>& factors, const ValidationOptions& opts) {
  if (factors.empty()) throw AxiomError("product of zero rings requested");
  std::size_t order = 1;
  for (const auto& f : factors) order *= f->order();
  RingTables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<std::vector<Elem>> coords(order, std::vector<Elem>(factors.size()));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      coords[idx][i] = static_cast<Elem>(rest % factors[i]->order());
      rest /= factors[i]->order();
    }
  }
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i]->order() + c[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> s(factors.size()), p(factors.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s[i] = factors[i]->add(coords[a][i], coords[b][i]);
        p[i] = factors[i]->mul(coords[a][i], coords[b][i]);
      }
      t.add[a * order + b] = encode(s);
      t.mul[a * order + b] = encode(p);
    }
  std::vector<Elem> ones;
  std::vector<std::string> labels;
  for (const auto& f : factors) {
    ones.push_back(f->one());
    labels.push_back(f->label());
  }
  t.one = encode(ones);
  t.label = join(labels, "x");
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) parts.push_back(factors[i]->name(coords[idx][i]));
    t.names.push_back("(" + join(parts, ",") + ")");
  }
  auto r = std::make_shared<FiniteRing>(std::move(t), opts);
  r->factors_ = factors;
  return r;
}

RingPtr make_quotient(const RingPtr& r, const ElementSet& ideal, const ValidationOptions& opts) {
  const std::size_t n = r->order();
  if (ideal.universe() != n) throw AxiomError("ideal lives in a different carrier");
  if (!ideal.contains(0)) throw AxiomError("quotient: subset does not contain zero");
  if (ideal.contains(r->one())) throw AxiomError("quotient: ideal is improper (contains 1)");
  for (Elem a : ideal.elements()) {
    for (Elem b : ideal.elements())
      if (!ideal.contains(r->add(a, b)))
        throw AxiomError("quotient: subset not closed under addition at (" + r->name(a) + ", " + r->name(b) + ")");
    for (Elem x = 0; x < n; ++x)
      if (!ideal.contains(r->mul(x, a)))
        throw AxiomError("quotient: subset not an ideal, " + r->name(x) + "*" + r->name(a) + " escapes");
  }
  std::vector<Elem> coset(n, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != static_cast<Elem>(-1)) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    ideal.for_each([&](Elem i) { coset[r->add(x, i)] = id; });
  }
  const std::size_t q = reps.size();
  RingTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      t.add[a * q + b] = coset[r->add(reps[a], reps[b])];
      t.mul[a * q + b] = coset[r->mul(reps[a], reps[b])];
    }
  t.one = coset[r->one()];
  t.label = r->label() + "/I";
  for (Elem rep : reps) t.names.push_back("[" + r->name(rep) + "]");
  return std::make_shared<FiniteRing>(std::move(t), opts);
}

namespace {

std::string poly_name(const FiniteRing& base, const std::vector<Elem>& c) {
  std::string out;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    std::string term;
    const bool unit_coeff = c[e] == base.one();
    if (e == 0) {
      term = base.name(c[e]);
    } else {
      term = unit_coeff ? "" : base.name(c[e]);
      term += "x";
      if (e > 1) term += "^" + std::to_string(e);
    }
    out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

RingPtr make_poly_quotient(const RingPtr& base, const std::vector<Elem>& low, const ValidationOptions& opts) {
  const std::size_t d = low.size();
  if (d == 0) throw AxiomError("polynomial modulus must have positive degree");
  const std::size_t q = base->order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < d; ++i) order *= q;
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> c(d);
    for (std::size_t i = d; i-- > 0;) {
      c[i] = static_cast<Elem>(idx % q);
      idx /= q;
    }
    return c;
  };
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx = idx * q + c[i];
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<Elem>> coeffs(order);
  for (std::size_t i = 0; i < order; ++i) coeffs[i] = decode(i);
  RingTables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<Elem> prod(2 * d), sum(d);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto& ca = coeffs[a];
      const auto& cb = coeffs[b];
      for (std::size_t i = 0; i < d; ++i) sum[i] = base->add(ca[i], cb[i]);
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = base->add(prod[i + j], base->mul(ca[i], cb[j]));
      // X^e = X^(e-d) * X^d and X^d = -(c_0 + ... + c_{d-1} X^{d-1}).
      for (std::size_t e = 2 * d - 1; e-- > d;) {
        const Elem top = prod[e];
        if (top == 0) continue;
        prod[e] = 0;
        for (std::size_t i = 0; i < d; ++i)
          prod[e - d + i] = base->sub(prod[e - d + i], base->mul(top, low[i]));
      }
      t.add[a * order + b] = encode(sum);
      t.mul[a * order + b] = encode(std::vector<Elem>(prod.begin(), prod.begin() + d));
    }
  std::vector<Elem> one(d, 0);
  one[0] = base->one();
  t.one = encode(one);
  bool truncated = true;
  for (Elem c : low) truncated = truncated && c == 0;
  t.label = base->label() + "[x]/(" + (truncated ? "x^" + std::to_string(d) : "f") + ")";
  for (std::size_t i = 0; i < order; ++i) t.names.push_back(poly_name(*base, coeffs[i]));
  return std::make_shared<FiniteRing>(std::move(t), opts);
}

RingPtr make_truncated_poly(const RingPtr& base, int d, const ValidationOptions& opts) {
  if (d < 1) throw AxiomError("truncated polynomial ring needs degree bound >= 1");
  return make_poly_quotient(base, std::vector<Elem>(static_cast<std::size_t>(d), 0), opts);
}

RingPtr make_galois_field(int p, int k) {
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw AxiomError("GF(p^k) requires a prime p");
  if (k < 1) throw AxiomError("GF(p^k) requires k >= 1");
  if (k == 1) return make_zm(p);
  auto base = make_zm(p);
  std::vector<Elem> low(static_cast<std::size_t>(k), 0);
  while (true) {
    if (low[0] != 0) {
      auto r = make_poly_quotient(base, low);
      bool field = true;
      for (Elem x = 1; x < r->order() && field; ++x) {
        bool inv = false;
        for (Elem y = 1; y < r->order(); ++y)
          if (r->mul(x, y) == r->one()) {
            inv = true;
            break;
          }
        field = inv;
      }
      if (field) {
        RingTables t;
        t.order = r->order();
        t.add = r->add_table();
        t.mul = r->mul_table();
        t.one = r->one();
        t.label = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
        for (Elem i = 0; i < r->order(); ++i) t.names.push_back(r->name(i));
        return std::make_shared<FiniteRing>(std::move(t));
      }
    }
    std::size_t pos = 0;
    while (pos < low.size() && ++low[pos] == static_cast<Elem>(p)) low[pos++] = 0;
    if (pos == low.size()) break;
  }
  throw AxiomError("no irreducible polynomial found");
}

RingPtr make_table_ring(RingTables t, const ValidationOptions& opts) {
  return std::make_shared<FiniteRing>(std::move(t), opts);
}

RingClassification classify(const FiniteRing& r) {
  const std::size_t n = r.order();
  RingClassification c{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem p = r.mul(x, y);
      if (p == r.one()) c.units.insert(x);
      if (x != 0 && y != 0 && p == 0) c.zero_divisors.insert(x);
    }
    if (r.mul(x, x) == x) c.idempotents.insert(x);
    Elem p = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (p == 0) {
        c.nilpotents.insert(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return c;
}

ElementSet regular_elements(const FiniteRing& r) {
  const std::size_t n = r.order();
  ElementSet out(n);
  for (Elem x = 1; x < n; ++x) {
    bool regular = true;
    for (Elem y = 1; y < n && regular; ++y) regular = r.mul(x, y) != 0;
    if (regular) out.insert(x);
  }
  return out;
}

ElementSet jacobson_by_units(const FiniteRing& r) {
  const std::size_t n = r.order();
  ElementSet units(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (r.mul(x, y) == r.one()) {
        units.insert(x);
        break;
      }
  ElementSet out(n);
  for (Elem x = 0; x < n; ++x) {
    bool in = true;
    for (Elem y = 0; y < n && in; ++y) in = units.contains(r.sub(r.one(), r.mul(x, y)));
    if (in) out.insert(x);
  }
  return out;
}

MapCheck check_ring_hom(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& f, bool unital) {
  MapCheck res;
  if (f.size() != a.order()) return {false, "map has wrong domain size"};
  for (Elem v : f)
    if (v >= b.order()) return {false, "map leaves the codomain"};
  if (unital && f[a.one()] != b.one()) return {false, "f(1) = " + b.name(f[a.one()]) + " is not 1"};
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y]))
        return {false, "f(" + a.name(x) + "+" + a.name(y) + ") != f(" + a.name(x) + ")+f(" + a.name(y) + ")"};
      if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
        return {false, "f(" + a.name(x) + "*" + a.name(y) + ") != f(" + a.name(x) + ")*f(" + a.name(y) + ")"};
    }
  return res;
}

bool is_bijective(const std::vector<Elem>& f, std::size_t codomain) {
  if (f.size() != codomain) return false;
  std::vector<char> hit(codomain, 0);
  for (Elem v : f) {
    if (v >= codomain || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

namespace {

// Subring closure under + and *, extending a partial map consistently.
class PartialMap {
 public:
  PartialMap(const FiniteRing& a, const FiniteRing& b, bool injective)
      : a_(a), b_(b), injective_(injective), f_(a.order(), kUnset), used_(b.order(), 0) {}

  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> work{{x, y}};
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (f_[u] != kUnset) {
        if (f_[u] != v) return false;
        continue;
      }
      if (injective_ && used_[v]) return false;
      f_[u] = v;
      used_[v] = 1;
      domain_.push_back(u);
      const std::size_t count = domain_.size();
      for (std::size_t i = 0; i < count; ++i) {
        const Elem w = domain_[i];
        work.emplace_back(a_.add(u, w), b_.add(v, f_[w]));
        work.emplace_back(a_.mul(u, w), b_.mul(v, f_[w]));
      }
    }
    return true;
  }
  bool covers(Elem x) const { return f_[x] != kUnset; }
  bool complete() const { return domain_.size() == a_.order(); }
  const std::vector<Elem>& table() const { return f_; }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);
  const FiniteRing& a_;
  const FiniteRing& b_;
  bool injective_;
  std::vector<Elem> f_;
  std::vector<char> used_;
  std::vector<Elem> domain_;
};

std::vector<Elem> ring_generators(const FiniteRing& a) {
  PartialMap probe(a, a, false);
  probe.assign(0, 0);
  probe.assign(a.one(), a.one());
  std::vector<Elem> gens;
  for (Elem x = 0; x < a.order(); ++x) {
    if (probe.covers(x)) continue;
    gens.push_back(x);
    probe.assign(x, x);
  }
  return gens;
}

void search(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& gens, std::size_t k,
            const PartialMap& current, bool bijective, std::vector<std::vector<Elem>>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  if (k == gens.size()) {
    if (current.complete()) out.push_back(current.table());
    return;
  }
  const std::size_t ord = a.additive_order(gens[k]);
  for (Elem y = 0; y < b.order(); ++y) {
    if (bijective ? b.additive_order(y) != ord : ord % b.additive_order(y) != 0) continue;
    PartialMap next = current;
    if (!next.assign(gens[k], y)) continue;
    search(a, b, gens, k + 1, next, bijective, out, first_only);
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<Elem> additive_generators(const FiniteRing& r) {
  ElementSet span(r.order());
  span.insert(0);
  std::vector<Elem> gens;
  auto absorb = [&](Elem g) {
    // span <- span + <g>
    std::vector<Elem> base = span.elements();
    Elem mult = g;
    while (!span.contains(mult)) {
      for (Elem s : base) span.insert(r.add(s, mult));
      mult = r.add(mult, g);
    }
  };
  gens.push_back(r.one());
  absorb(r.one());
  for (Elem x = 0; x < r.order(); ++x)
    if (!span.contains(x)) {
      gens.push_back(x);
      absorb(x);
    }
  return gens;
}

std::vector<std::vector<Elem>> enumerate_homomorphisms(const FiniteRing& a, const FiniteRing& b) {
  PartialMap start(a, b, false);
  std::vector<std::vector<Elem>> out;
  if (!start.assign(0, 0) || !start.assign(a.one(), b.one())) return out;
  search(a, b, ring_generators(a), 0, start, false, out, false);
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b, std::size_t max_order) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > max_order)
    throw CapExceeded("isomorphism search limited to order " + std::to_string(max_order));
  PartialMap start(a, b, true);
  if (!start.assign(0, 0) || !start.assign(a.one(), b.one())) return std::nullopt;
  std::vector<std::vector<Elem>> out;
  search(a, b, ring_generators(a), 0, start, true, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

}  // namespace ntx
