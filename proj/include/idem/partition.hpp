#pragma once

#include <compare>
#include <string>
#include <vector>

#include "idem/elemset.hpp"

namespace idem {

/// An equivalence relation on 0..n-1. Blocks are numbered by first
/// occurrence, so two equal relations have identical representations.
/// Whether it is compatible with some algebra is a separate question
/// (see `is_compatible` in congruence.hpp); the name reflects how every
/// caller uses it.
class Congruence {
 public:
  Congruence() = default;

  static Congruence equality(std::size_t n);
  static Congruence total(std::size_t n);
  /// Blocks must cover 0..n-1 exactly once.
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);
  /// Any labelling of elements by block; renumbered canonically.
  static Congruence from_labels(const std::vector<std::size_t>& labels);

  std::size_t universe() const { return block_of_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(Elem x) const { return block_of_[x]; }
  bool related(Elem x, Elem y) const { return block_of_[x] == block_of_[y]; }
  bool is_equality() const { return block_count_ == universe(); }
  bool is_total() const { return block_count_ <= 1; }

  /// Members of the block containing x.
  ElemSet block(Elem x) const;
  std::vector<std::vector<Elem>> blocks() const;
  /// Least element of each element's block.
  std::vector<Elem> leaders() const;

  /// this ⊆ other as relations.
  bool refines(const Congruence& other) const;
  Congruence join(const Congruence& other) const;
  Congruence meet(const Congruence& other) const;

  /// Sorted block partition, e.g. `{0,2|1,3}`.
  std::string to_string() const;

  bool operator==(const Congruence& other) const = default;
  /// Canonical order: lexicographic on the block-leader sequence.
  std::strong_ordering operator<=>(const Congruence& other) const;

 private:
  explicit Congruence(std::vector<std::size_t> canonical, std::size_t count)
      : block_of_(std::move(canonical)), block_count_(count) {}

  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

/// Union-find over 0..n-1 with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Elem find(Elem x);
  /// Returns true when x and y were in different classes.
  bool unite(Elem x, Elem y);
  Congruence to_partition();

 private:
  std::vector<Elem> parent_;
};

}  // namespace idem
