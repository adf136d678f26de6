#include "ntx/common.hpp"

#include <algorithm>

namespace ntx {

ElementSet::ElementSet(std::size_t universe)
    : words_((universe + 63) / 64, 0), universe_(universe) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
  return s;
}

ElementSet ElementSet::of(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.insert(e);
  return s;
}

void ElementSet::erase(Elem e) {
  std::uint64_t& w = words_[e >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] & other.words_[i];
    r.count_ += static_cast<std::size_t>(__builtin_popcountll(r.words_[i]));
  }
  return r;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] | other.words_[i];
    r.count_ += static_cast<std::size_t>(__builtin_popcountll(r.words_[i]));
  }
  return r;
}

ElementSet ElementSet::complement() const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < universe_; ++i)
    if (!contains(static_cast<Elem>(i))) r.insert(static_cast<Elem>(i));
  return r;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace ntx
