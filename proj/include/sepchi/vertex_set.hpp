#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sepchi {

// Subset of a fixed vertex universe 0..n-1 with bitset semantics. Universes
// of at most 64 vertices live in one inline word; larger ones fall back to
// heap-allocated words behind the same interface. Binary operations require
// both operands to share a universe.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    if (!small()) words_.assign(word_count(), 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.fill();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet single(int universe, int v) {
    VertexSet s(universe);
    s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (word(v >> 6) >> (v & 63)) & 1;
  }

  void add(int v) {
    check_member(v);
    mutable_word(v >> 6) |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    check_member(v);
    mutable_word(v >> 6) &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() {
    if (small()) {
      word_ = 0;
    } else {
      words_.assign(words_.size(), 0);
    }
  }

  void fill() {
    for (int w = 0; w < word_count(); ++w) mutable_word(w) = ~std::uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (int w = 0; w < word_count(); ++w) c += std::popcount(word(w));
    return c;
  }

  bool empty() const {
    for (int w = 0; w < word_count(); ++w)
      if (word(w) != 0) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const { return scan_from(0); }

  // Smallest member greater than v, or -1 when none.
  int next(int v) const { return scan_from(v + 1); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (int w = 0; w < word_count(); ++w) mutable_word(w) |= o.word(w);
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (int w = 0; w < word_count(); ++w) mutable_word(w) &= o.word(w);
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    for (int w = 0; w < word_count(); ++w) mutable_word(w) &= ~o.word(w);
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(*this);
    for (int w = 0; w < s.word_count(); ++w) s.mutable_word(w) = ~s.word(w);
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (int w = 0; w < word_count(); ++w)
      if (word(w) & o.word(w)) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (int w = 0; w < word_count(); ++w)
      if (word(w) & ~o.word(w)) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    if (n_ != o.n_) return false;
    for (int w = 0; w < word_count(); ++w)
      if (word(w) != o.word(w)) return false;
    return true;
  }

  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic order on the sorted member sequences: {0,2} < {0,3} < {1},
  // and a strict prefix sorts first. Used for deterministic enumeration.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.check_universe(b);
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

 private:
  bool small() const { return n_ <= 64; }
  int word_count() const { return n_ == 0 ? 0 : (n_ + 63) >> 6; }

  std::uint64_t word(int w) const { return small() ? word_ : words_[static_cast<std::size_t>(w)]; }
  std::uint64_t& mutable_word(int w) { return small() ? word_ : words_[static_cast<std::size_t>(w)]; }

  void check_member(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex outside universe");
  }

  void check_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vertex sets over different universes");
  }

  // Clear padding bits beyond n-1 in the last word.
  void trim() {
    if (n_ == 0) return;
    const int used = n_ & 63;
    if (used != 0) mutable_word(word_count() - 1) &= (~std::uint64_t{0}) >> (64 - used);
  }

  int scan_from(int v) const {
    if (v < 0) v = 0;
    if (v >= n_) return -1;
    int w = v >> 6;
    std::uint64_t bits = word(w) & ((~std::uint64_t{0}) << (v & 63));
    while (true) {
      if (bits != 0) return (w << 6) + std::countr_zero(bits);
      if (++w >= word_count()) return -1;
      bits = word(w);
    }
  }

  int n_ = 0;
  std::uint64_t word_ = 0;              // storage when n_ <= 64
  std::vector<std::uint64_t> words_;    // storage when n_ > 64
};

}  // namespace sepchi
