#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>

namespace posetops {

// Subset of a poset carrier, one bit per element index. Plain value type;
// rendering and name lookup live on the owning poset.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_mask(std::uint64_t m) {
    ElementSet s;
    s.bits_ = m;
    return s;
  }
  static constexpr ElementSet single(int i) { return from_mask(std::uint64_t{1} << i); }
  static ElementSet of(std::initializer_list<int> xs) {
    ElementSet s;
    for (int x : xs) s.add(x);
    return s;
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  int sole_member() const {
    assert(is_singleton());
    return std::countr_zero(bits_);
  }

  void add(int i) { bits_ |= std::uint64_t{1} << i; }
  void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ & ~b.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

  // Iterates set bits in ascending index order, so `for (int x : s)` works.
  class Iterator {
   public:
    int operator*() const { return std::countr_zero(bits_); }
    Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const Iterator& o) const { return bits_ != o.bits_; }

   private:
    friend class ElementSet;
    explicit Iterator(std::uint64_t b) : bits_(b) {}
    std::uint64_t bits_;
  };
  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace posetops
