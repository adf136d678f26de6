#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ntx/cli.hpp"

namespace ntx::cli {

SpecError::SpecError(const std::string& origin, int line, int column, const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Entry {
  std::string key, value;
  int line = 0, key_col = 0, value_col = 0;
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(trim(tok));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

class Parser {
 public:
  Parser(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void error(int line, int col, const std::string& msg) const { throw SpecError(origin_, line, col, msg); }
  [[noreturn]] void error(const Entry& e, const std::string& msg) const { error(e.line, e.value_col, msg); }

  std::vector<Section> lex(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw.substr(0, raw.find('#'));
      if (trim(line).empty()) continue;
      const int indent = static_cast<int>(line.find_first_not_of(" \t")) + 1;
      const std::string t = trim(line);
      if (t.front() == '[') {
        if (t.back() != ']') error(lineno, indent, "unterminated section header");
        const std::string name = trim(t.substr(1, t.size() - 2));
        static const std::set<std::string> known{"ring", "module", "maps", "options"};
        if (!known.count(name)) error(lineno, indent + 1, "unknown section [" + name + "]");
        sections.push_back({name, lineno, {}});
        continue;
      }
      if (sections.empty()) error(lineno, indent, "key outside any section");
      const auto eq = line.find('=');
      if (eq == std::string::npos) error(lineno, indent, "expected key = value");
      const bool several = line.find('=', eq + 1) != std::string::npos;
      if (!several) {
        Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno, indent, 0};
        const auto vpos = line.find_first_not_of(" \t", eq + 1);
        e.value_col = static_cast<int>(vpos == std::string::npos ? eq + 2 : vpos + 1);
        push(sections.back(), e);
        continue;
      }
      // Several key=value tokens on one line; tokens may not contain spaces.
      std::size_t pos = 0;
      while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string::npos) break;
        std::size_t end = line.find_first_of(" \t", pos);
        if (end == std::string::npos) end = line.size();
        const std::string tok = line.substr(pos, end - pos);
        const auto teq = tok.find('=');
        if (teq == std::string::npos || teq == 0 || teq + 1 == tok.size())
          error(lineno, static_cast<int>(pos + 1), "expected key=value, got '" + tok + "'");
        push(sections.back(), Entry{tok.substr(0, teq), tok.substr(teq + 1), lineno, static_cast<int>(pos + 1),
                                    static_cast<int>(pos + teq + 2)});
        pos = end;
      }
    }
    return sections;
  }

  void push(Section& s, const Entry& e) {
    if (e.key.empty()) error(e.line, e.key_col, "empty key");
    for (const auto& other : s.entries)
      if (other.key == e.key)
        error(e.line, e.key_col, "duplicate key '" + e.key + "' (first on line " + std::to_string(other.line) + ")");
    s.entries.push_back(e);
  }

  long long integer(const Entry& e, const std::string& text, long long lo, long long hi) const {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      error(e, "expected an integer, got '" + text + "'");
    }
    if (used != text.size()) error(e, "expected an integer, got '" + text + "'");
    if (v < lo || v > hi)
      error(e, "value " + text + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  std::vector<int> int_list(const Entry& e, long long lo, long long hi) const {
    std::vector<int> out;
    std::string v = e.value;
    for (char& ch : v)
      if (ch == ',') ch = ' ';
    for (const auto& w : words(v)) out.push_back(static_cast<int>(integer(e, w, lo, hi)));
    if (out.empty()) error(e, "expected a list of integers");
    return out;
  }

  /// zm:M or gf:P:K.
  RingPtr ring_token(const Entry& e, const std::string& tok) {
    if (auto it = ring_cache_.find(tok); it != ring_cache_.end()) return it->second;
    const auto parts = split(tok, ':');
    RingPtr r;
    if (parts.size() == 2 && parts[0] == "zm") {
      r = make_zm(static_cast<int>(integer(e, parts[1], 2, 1 << 16)));
    } else if (parts.size() == 3 && (parts[0] == "gf" || parts[0] == "galois")) {
      const int p = static_cast<int>(integer(e, parts[1], 2, 1 << 16));
      const int k = static_cast<int>(integer(e, parts[2], 1, 16));
      r = make_galois_field(p, k);
    } else {
      error(e, "expected a ring token zm:M or gf:P:K, got '" + tok + "'");
    }
    ring_cache_[tok] = r;
    return r;
  }

  const Entry* find(const Section& s, const std::string& key) const {
    for (const auto& e : s.entries)
      if (e.key == key) return &e;
    return nullptr;
  }
  const Entry& need(const Section& s, const std::string& key) const {
    if (const Entry* e = find(s, key)) return *e;
    error(s.line, 1, "[" + s.name + "] needs '" + key + "'");
  }
  void allow(const Section& s, const std::set<std::string>& keys, const std::regex* pattern = nullptr) const {
    for (const auto& e : s.entries)
      if (!keys.count(e.key) && !(pattern && std::regex_match(e.key, *pattern)))
        error(e.line, e.key_col, "unknown key '" + e.key + "' in [" + s.name + "]");
  }

  template <class F>
  auto semantic(int line, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const SpecError&) {
      throw;
    } catch (const AxiomError& err) {
      error(line, 1, err.what());
    } catch (const HypothesisError& err) {
      error(line, 1, err.what());
    } catch (const UsageError& err) {
      error(line, 1, err.what());
    }
  }

  RingPtr build_ring(const Section& s, SpecDocument& doc) {
    const Entry& kind = need(s, "kind");
    doc.ring_kind = kind.value;
    return semantic(s.line, [&]() -> RingPtr {
      if (kind.value == "zm") {
        allow(s, {"kind", "m"});
        return make_zm(static_cast<int>(integer(need(s, "m"), need(s, "m").value, 2, 1 << 16)));
      }
      if (kind.value == "galois" || kind.value == "gf") {
        allow(s, {"kind", "p", "k"});
        const Entry& p = need(s, "p");
        const Entry& k = need(s, "k");
        return make_galois_field(static_cast<int>(integer(p, p.value, 2, 1 << 16)),
                                 static_cast<int>(integer(k, k.value, 1, 16)));
      }
      if (kind.value == "product") {
        allow(s, {"kind", "factors"});
        const Entry& f = need(s, "factors");
        std::vector<RingPtr> factors;
        for (const auto& w : words(f.value)) factors.push_back(ring_token(f, w));
        if (factors.size() < 2) error(f, "a product needs at least two factors");
        return make_product(factors);
      }
      if (kind.value == "truncated") {
        allow(s, {"kind", "base", "degree"});
        const Entry& b = need(s, "base");
        const Entry& d = need(s, "degree");
        return make_truncated_poly(ring_token(b, b.value), static_cast<int>(integer(d, d.value, 1, 16)));
      }
      if (kind.value == "quotient") {
        allow(s, {"kind", "base", "ideal"});
        const Entry& b = need(s, "base");
        const Entry& i = need(s, "ideal");
        const RingPtr base = ring_token(b, b.value);
        std::vector<Elem> gens;
        for (const auto& w : split(i.value, ',')) {
          auto x = base->parse(w);
          if (!x) error(i, "unknown element '" + w + "' of " + base->label());
          gens.push_back(*x);
        }
        return make_quotient(base, generate(base, gens).elements);
      }
      error(kind, "unknown ring kind '" + kind.value + "' (zm, galois, product, truncated, quotient)");
    });
  }

  struct ModuleSpec {
    std::string kind;
    RingPtr over;  ///< algebra modules
  };

  ModulePtr build_module(const Section& s, const RingPtr& r, ModuleSpec& ms) {
    const Entry& kind = need(s, "kind");
    ms.kind = kind.value;
    return semantic(s.line, [&]() -> ModulePtr {
      ModulePtr m;
      if (kind.value == "regular") {
        allow(s, {"kind", "generator"});
        m = make_regular_module(r);
      } else if (kind.value == "zero") {
        allow(s, {"kind"});
        m = make_zero_module(r);
      } else if (kind.value == "scalar") {
        allow(s, {"kind", "factors", "generator"});
        m = make_scalar_module(r, int_list(need(s, "factors"), 1, 1 << 16));
      } else if (kind.value == "algebra") {
        allow(s, {"kind", "over", "generator"});
        const Entry& over = need(s, "over");
        ms.over = ring_token(over, over.value);
        m = make_algebra_module(r, ms.over, canonical_hom_from_zm(r, ms.over));
      } else if (kind.value == "explicit") {
        allow(s, {"kind", "factors", "action", "generator"});
        const std::vector<int> factors = int_list(need(s, "factors"), 1, 1 << 16);
        std::size_t order = 1;
        for (int d : factors) order *= static_cast<std::size_t>(d);
        const Entry& act = need(s, "action");
        const std::vector<int> table = int_list(act, 0, static_cast<long long>(order) - 1);
        if (table.size() != r->order() * order)
          error(act, "action table needs " + std::to_string(r->order() * order) + " entries, got " +
                         std::to_string(table.size()));
        m = make_explicit_module(r, factors, std::vector<Elem>(table.begin(), table.end()));
      } else {
        error(kind, "unknown module kind '" + kind.value + "' (regular, zero, scalar, algebra, explicit)");
      }
      if (const Entry* g = find(s, "generator")) {
        auto x = m->parse(g->value);
        if (!x) error(*g, "unknown element '" + g->value + "' of the module");
        ModuleTables t;
        t.order = m->order();
        t.add = m->add_table();
        t.act = m->act_table();
        t.invariant_factors = m->invariant_factors();
        t.label = m->label();
        for (Elem y = 0; y < m->order(); ++y) t.names.push_back(m->name(y));
        t.generator = *x;
        m = make_table_module(r, std::move(t));
      }
      return m;
    });
  }

  ProductMapFamily build_maps(const Section& s, SpecDocument& doc, const std::vector<ModuleSpec>& specs,
                              const std::vector<int>& module_lines) {
    const RingPtr& r = doc.ring;
    const int n = static_cast<int>(doc.modules.size());
    static const std::regex constant_key(R"(r(\d)(\d)|r(\d+)_(\d+))");
    static const std::regex table_key(R"(phi(\d)(\d)|phi(\d+)_(\d+))");
    auto indices = [](const std::smatch& m) {
      if (m[1].matched) return std::pair<int, int>{std::stoi(m[1]), std::stoi(m[2])};
      return std::pair<int, int>{std::stoi(m[3]), std::stoi(m[4])};
    };
    const Entry& kind = need(s, "kind");
    doc.maps_kind = kind.value;
    if (const Entry* ne = find(s, "n")) {
      const long long declared = integer(*ne, ne->value, 1, 64);
      if (declared != n)
        error(*ne, "n = " + ne->value + " but " + std::to_string(n) + " [module] section" + (n == 1 ? "" : "s") +
                       " declared");
    }
    auto check_pair = [&](const Entry& e, std::pair<int, int> ij) {
      if (ij.first < 1 || ij.second < 1 || ij.first + ij.second > n)
        error(e.line, e.key_col,
              "'" + e.key + "' needs i, j >= 1 and i + j <= n = " + std::to_string(n));
    };
    auto all_kind = [&](const std::string& k) {
      for (int i = 0; i < n; ++i)
        if (specs[static_cast<std::size_t>(i)].kind != k)
          error(module_lines[static_cast<std::size_t>(i)], 1,
                "maps kind '" + kind.value + "' needs every module to be " + k);
    };
    ProductMapFamily fam = semantic(s.line, [&]() -> ProductMapFamily {
      if (kind.value == "ring_multiplication") {
        allow(s, {"kind", "n", "truncate_at"});
        all_kind("regular");
        return family_ring_multiplication(r, n);
      }
      if (kind.value == "zero") {
        allow(s, {"kind", "n", "truncate_at"});
        return family_zero(r, doc.modules);
      }
      if (kind.value == "componentwise") {
        allow(s, {"kind", "n", "truncate_at"});
        return family_componentwise(r, doc.modules);
      }
      if (kind.value == "polynomial_tail") {
        allow(s, {"kind", "n", "truncate_at"});
        for (int i = 0; i + 1 < n; ++i)
          if (specs[static_cast<std::size_t>(i)].kind != "regular")
            error(module_lines[static_cast<std::size_t>(i)], 1, "polynomial_tail needs M_1..M_{n-1} regular");
        return family_polynomial_tail(r, n, doc.modules.back());
      }
      if (kind.value == "algebra") {
        allow(s, {"kind", "n", "truncate_at"});
        all_kind("algebra");
        const RingPtr t = specs.front().over;
        for (int i = 0; i < n; ++i)
          if (specs[static_cast<std::size_t>(i)].over != t)
            error(module_lines[static_cast<std::size_t>(i)], 1, "algebra maps need every module over the same ring");
        std::vector<Elem> id(t->order());
        for (Elem x = 0; x < t->order(); ++x) id[x] = x;
        return family_algebra(r, t, doc.modules, std::vector<std::vector<Elem>>(static_cast<std::size_t>(n), id));
      }
      if (kind.value == "structure_constants") {
        allow(s, {"kind", "n", "truncate_at"}, &constant_key);
        std::map<std::pair<int, int>, Elem> constants;
        for (const auto& e : s.entries) {
          std::smatch m;
          if (!std::regex_match(e.key, m, constant_key)) continue;
          const auto ij = indices(m);
          check_pair(e, ij);
          auto x = r->parse(e.value);
          if (!x) error(e, "unknown ring element '" + e.value + "'");
          constants[ij] = *x;
        }
        for (auto ij : admissible_pairs(n))
          if (!constants.count(ij))
            error(s.line, 1, "missing structure constant r" + std::to_string(ij.first) + std::to_string(ij.second));
        for (int i = 0; i < n; ++i)
          if (!doc.modules[static_cast<std::size_t>(i)]->generator())
            error(module_lines[static_cast<std::size_t>(i)], 1,
                  "structure constants need M_" + std::to_string(i + 1) + " cyclic with a declared generator");
        return family_structure_constants(r, doc.modules, constants);
      }
      if (kind.value == "explicit") {
        allow(s, {"kind", "n", "truncate_at"}, &table_key);
        std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
        for (const auto& e : s.entries) {
          std::smatch m;
          if (!std::regex_match(e.key, m, table_key)) continue;
          const auto ij = indices(m);
          check_pair(e, ij);
          const auto& a = doc.modules[static_cast<std::size_t>(ij.first - 1)];
          const auto& b = doc.modules[static_cast<std::size_t>(ij.second - 1)];
          const auto& c = doc.modules[static_cast<std::size_t>(ij.first + ij.second - 1)];
          const auto vals = int_list(e, 0, static_cast<long long>(c->order()) - 1);
          if (vals.size() != a->order() * b->order())
            error(e, "table needs " + std::to_string(a->order() * b->order()) + " entries, got " +
                         std::to_string(vals.size()));
          tables[ij] = ProductMapFamily::Table(vals.begin(), vals.end());
        }
        for (auto ij : admissible_pairs(n))
          if (!tables.count(ij))
            error(s.line, 1, "missing table phi" + std::to_string(ij.first) + std::to_string(ij.second));
        return family_explicit(r, doc.modules, tables);
      }
      error(kind, "unknown maps kind '" + kind.value +
                      "' (ring_multiplication, zero, componentwise, polynomial_tail, algebra, structure_constants, "
                      "explicit)");
    });
    if (const Entry* t = find(s, "truncate_at"))
      fam = fam.truncated(static_cast<int>(integer(*t, t->value, 2, n + 1)));
    return fam;
  }

  void read_options(const Section* s, SpecDocument& doc) {
    doc.strictness = Strictness::strict;
    if (!s) return;
    static const std::regex named(R"((mult_set|ideal_class)\.([A-Za-z_][A-Za-z0-9_]*))");
    allow(*s, {"strictness", "max_order", "max_ideals", "max_len", "max_results", "record"}, &named);
    if (const Entry* e = find(*s, "strictness")) {
      if (e->value == "strict") doc.strictness = Strictness::strict;
      else if (e->value == "exploratory") doc.strictness = Strictness::exploratory;
      else error(*e, "strictness is strict or exploratory");
    }
    auto cap = [&](const char* key, std::size_t& slot, long long lo) {
      if (const Entry* e = find(*s, key)) slot = static_cast<std::size_t>(integer(*e, e->value, lo, 1LL << 40));
    };
    cap("max_order", doc.caps.max_order, 1);
    cap("max_ideals", doc.caps.max_ideals, 1);
    cap("max_len", doc.caps.max_len, 0);
    cap("max_results", doc.caps.max_results, 1);
  }

  /// Options that mention elements need the finished extension.
  void read_element_options(const Section* s, SpecDocument& doc) {
    if (!s) return;
    const NTrivialExtension& e = *doc.extension;
    for (const auto& en : s->entries) {
      if (en.key == "record") {
        for (const auto& item : split(en.value, ';')) {
          auto c = e.parse(item);
          if (!c) error(en, "cannot read element '" + item + "' of " + e.label());
          doc.recorded.push_back(*c);
        }
      } else if (en.key.rfind("mult_set.", 0) == 0) {
        std::vector<Elem> seed;
        for (const auto& w : split(en.value, ',')) {
          auto x = doc.ring->parse(w);
          if (!x) error(en, "unknown ring element '" + w + "'");
          seed.push_back(*x);
        }
        const std::string name = en.key.substr(9);
        doc.mult_sets.emplace_back(name, semantic(en.line, [&] { return mult_closure(doc.ring, seed); }));
      } else if (en.key.rfind("ideal_class.", 0) == 0) {
        auto sel = parse_selector(en.value, *doc.ring);
        if (!sel)
          error(en, "unknown ideal class '" + en.value +
                        "' (regular, pi0_zero, all, pi_prefix_zero(j), pi0_meets(s,...), pi0_meets_ann(s,...))");
        if (sel->kind == ClassSelector::Kind::pi_prefix_zero && (sel->j < 1 || sel->j >= e.n()))
          error(en, "pi_prefix_zero(j) needs 1 <= j < n");
        doc.ideal_classes.emplace_back(en.key.substr(12), *sel);
      }
    }
  }

  SpecDocument parse(const std::string& text) {
    const auto sections = lex(text);
    SpecDocument doc;
    doc.origin = origin_;
    const Section* ring = nullptr;
    const Section* maps = nullptr;
    const Section* options = nullptr;
    std::vector<const Section*> modules;
    for (const auto& s : sections) {
      auto once = [&](const Section*& slot) {
        if (slot) error(s.line, 1, "second [" + s.name + "] section (first on line " + std::to_string(slot->line) + ")");
        slot = &s;
      };
      if (s.name == "ring") once(ring);
      else if (s.name == "maps") once(maps);
      else if (s.name == "options") once(options);
      else modules.push_back(&s);
    }
    const int last = sections.empty() ? 1 : sections.back().line;
    if (!ring) error(last, 1, "missing [ring] section");
    if (modules.empty()) error(last, 1, "missing [module] sections");
    if (!maps) error(last, 1, "missing [maps] section");

    doc.ring = build_ring(*ring, doc);
    std::vector<ModuleSpec> specs;
    std::vector<int> lines;
    for (const Section* m : modules) {
      specs.emplace_back();
      doc.modules.push_back(build_module(*m, doc.ring, specs.back()));
      lines.push_back(m->line);
    }
    read_options(options, doc);
    ProductMapFamily fam = build_maps(*maps, doc, specs, lines);
    doc.extension = semantic(maps->line, [&] { return make_extension(std::move(fam), doc.strictness); });
    read_element_options(options, doc);
    return doc;
  }

 private:
  std::string origin_;
  std::map<std::string, RingPtr> ring_cache_;
};

}  // namespace

SpecDocument parse_spec_text(const std::string& text, const std::string& origin) {
  return Parser(origin).parse(text);
}

SpecDocument parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, 0, 0, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

}  // namespace ntx::cli
