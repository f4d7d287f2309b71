#include "idem/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "idem/error.hpp"

namespace idem {

Congruence Congruence::equality(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence(std::move(labels), n);
}

Congruence Congruence::total(std::size_t n) {
  return Congruence(std::vector<std::size_t>(n, 0), n == 0 ? 0 : 1);
}

Congruence Congruence::from_labels(const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> canonical(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], seen.size());
      canonical[i] = seen.size() - 1;
    } else {
      canonical[i] = it->second;
    }
  }
  return Congruence(std::move(canonical), seen.size());
}

Congruence Congruence::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<std::size_t> labels(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Elem x : blocks[b]) {
      if (x >= n || labels[x] != n) {
        throw Error(ErrorKind::PreconditionViolated, "blocks do not partition the universe");
      }
      labels[x] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), n) != labels.end()) {
    throw Error(ErrorKind::PreconditionViolated, "blocks do not cover the universe");
  }
  return from_labels(labels);
}

ElemSet Congruence::block(Elem x) const {
  ElemSet out;
  for (std::size_t y = 0; y < universe(); ++y) {
    if (block_of_[y] == block_of_[x]) out.insert(static_cast<Elem>(y));
  }
  return out;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out(block_count_);
  for (std::size_t y = 0; y < universe(); ++y) out[block_of_[y]].push_back(static_cast<Elem>(y));
  return out;
}

std::vector<Elem> Congruence::leaders() const {
  std::vector<Elem> first(block_count_, 0);
  std::vector<bool> set(block_count_, false);
  std::vector<Elem> out(universe());
  for (std::size_t y = 0; y < universe(); ++y) {
    auto b = block_of_[y];
    if (!set[b]) {
      set[b] = true;
      first[b] = static_cast<Elem>(y);
    }
    out[y] = first[b];
  }
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  // Block ids are assigned by first occurrence, so x's block leader in this
  // partition must be related to x in the other one.
  auto lead = leaders();
  for (std::size_t y = 0; y < universe(); ++y) {
    if (!other.related(static_cast<Elem>(y), lead[y])) return false;
  }
  return true;
}

Congruence Congruence::join(const Congruence& other) const {
  UnionFind uf(universe());
  auto a = leaders();
  auto b = other.leaders();
  for (std::size_t y = 0; y < universe(); ++y) {
    uf.unite(static_cast<Elem>(y), a[y]);
    uf.unite(static_cast<Elem>(y), b[y]);
  }
  return uf.to_partition();
}

Congruence Congruence::meet(const Congruence& other) const {
  std::vector<std::size_t> labels(universe());
  for (std::size_t y = 0; y < universe(); ++y) {
    labels[y] = block_of_[y] * (other.block_count_ + 1) + other.block_of_[y];
  }
  return from_labels(labels);
}

std::string Congruence::to_string() const {
  std::ostringstream out;
  out << '{';
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) out << '|';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) out << ',';
      out << bs[b][i];
    }
  }
  out << '}';
  return out.str();
}

std::strong_ordering Congruence::operator<=>(const Congruence& other) const {
  if (auto c = universe() <=> other.universe(); c != 0) return c;
  auto a = leaders();
  auto b = other.leaders();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem UnionFind::find(Elem x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Elem x, Elem y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

Congruence UnionFind::to_partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(static_cast<Elem>(i));
  return Congruence::from_labels(labels);
}

}  // namespace idem
