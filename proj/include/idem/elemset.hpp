#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace idem {

using Elem = std::uint32_t;

/// Subset of a universe of at most 64 elements.
class ElemSet {
 public:
  static constexpr std::size_t kMaxUniverse = 64;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<Elem> elems) {
    for (Elem e : elems) insert(e);
  }
  static ElemSet from(const std::vector<Elem>& elems) {
    ElemSet s;
    for (Elem e : elems) s.insert(e);
    return s;
  }
  static constexpr ElemSet full(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr bool operator==(const ElemSet&) const = default;

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  /// Orders by cardinality, then lexicographically by sorted element list.
  friend bool operator<(ElemSet lhs, ElemSet rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs.elements() < rhs.elements();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace idem
