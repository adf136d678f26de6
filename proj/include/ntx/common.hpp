#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntx {

/// Carrier index. Index 0 is always the additive identity.
using Elem = std::uint32_t;

class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of a carrier {0..universe-1}, stored as a bitmap.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, const std::vector<Elem>& elems);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Elem e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  /// Returns true when the element was not present before.
  bool insert(Elem e) {
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }
  void erase(Elem e);

  std::vector<Elem> elements() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = __builtin_ctzll(w);
        f(static_cast<Elem>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet complement() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
};

/// Canonical order: by size, then lexicographically by sorted element list.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace ntx
