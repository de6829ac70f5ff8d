#include "oldset/vertex_set.hpp"

#include <algorithm>
#include <cassert>

#include "oldset/errors.hpp"

namespace oldset {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (auto v : members) {
    if (v >= universe) throw InputError("vertex index out of range");
    insert(v);
  }
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : VertexSet(universe) {
  for (auto v : members) {
    if (v >= universe) throw InputError("vertex index out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return universe_;
}

Vertex VertexSet::next(Vertex v) const {
  ++v;
  if (v >= universe_) return universe_;
  std::size_t i = v >> 6;
  auto w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return universe_;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  }
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  // The sorted lists agree up to the lowest element of a^b. Whichever set owns
  // it is smaller, unless the other list has already ended there.
  Vertex pa = a.first();
  Vertex pb = b.first();
  while (pa < a.universe() && pb < b.universe()) {
    if (pa != pb) return pa < pb;
    pa = a.next(pa);
    pb = b.next(pb);
  }
  return pa >= a.universe() && pb < b.universe();
}

}  // namespace oldset
