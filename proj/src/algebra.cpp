#include "idem/algebra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace idem {

namespace {

std::string tuple_string(std::span<const Elem> t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

// Odometer over all tuples of the given arity, lexicographic order.
bool next_tuple(std::vector<Elem>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t checked_pow(std::size_t n, std::size_t k) {
  constexpr std::size_t kLimit = std::size_t{1} << 32;
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && out > kLimit / n) {
      throw Error(ErrorKind::TooLarge, std::to_string(n) + "^" + std::to_string(k) + " entries");
    }
    out *= n;
  }
  return out;
}

std::size_t tuple_index(std::span<const Elem> tuple, std::size_t n) {
  std::size_t idx = 0;
  for (Elem x : tuple) idx = idx * n + x;
  return idx;
}

std::vector<Elem> tuple_at(std::size_t index, std::size_t arity, std::size_t n) {
  std::vector<Elem> t(arity);
  for (std::size_t i = arity; i-- > 0;) {
    t[i] = static_cast<Elem>(index % n);
    index /= n;
  }
  return t;
}

OperationTable::OperationTable(std::string name, std::size_t arity, std::size_t universe,
                               std::vector<Elem> table)
    : name_(std::move(name)), arity_(arity), universe_(universe), table_(std::move(table)) {
  if (arity_ == 0) throw Error(ErrorKind::ArityMismatch, "operation '" + name_ + "' has arity 0");
  if (table_.size() != checked_pow(universe_, arity_)) {
    throw Error(ErrorKind::BadTableLength, "operation '" + name_ + "' has " + std::to_string(table_.size()) +
                                               " entries, expected " +
                                               std::to_string(checked_pow(universe_, arity_)));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= universe_) {
      auto t = tuple_at(i, arity_, universe_);
      throw Error(ErrorKind::EntryOutOfRange, "operation '" + name_ + "' maps " + tuple_string(t) + " to " +
                                                  std::to_string(table_[i]));
    }
  }
}

std::optional<std::size_t> OperationTable::projection_index() const {
  for (std::size_t i = 0; i < arity_; ++i) {
    bool ok = true;
    std::vector<Elem> t(arity_, 0);
    std::size_t idx = 0;
    do {
      if (table_[idx++] != t[i]) {
        ok = false;
        break;
      }
    } while (next_tuple(t, universe_));
    if (ok) return i;
  }
  return std::nullopt;
}

OperationTable OperationTable::renamed(std::string name) const {
  OperationTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size, std::vector<std::string> labels,
                             std::vector<OperationTable> operations)
    : name_(std::move(name)), size_(size), labels_(std::move(labels)), operations_(std::move(operations)) {
  if (size_ == 0) throw Error(ErrorKind::PreconditionViolated, "algebra '" + name_ + "' has an empty universe");
  if (size_ > ElemSet::kMaxUniverse) {
    throw Error(ErrorKind::TooLarge, "universe of " + std::to_string(size_) + " elements exceeds 64");
  }
  if (operations_.empty()) {
    throw Error(ErrorKind::PreconditionViolated, "algebra '" + name_ + "' has no operations");
  }
  if (!labels_.empty()) {
    if (labels_.size() != size_) throw Error(ErrorKind::ParseError, "label count differs from universe size");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size()) throw Error(ErrorKind::ParseError, "element labels are not distinct");
  }
  std::set<std::string> names;
  for (const auto& op : operations_) {
    if (!names.insert(op.name()).second) throw Error(ErrorKind::DuplicateOpName, op.name());
    if (op.universe() != size_) {
      throw Error(ErrorKind::BadTableLength, "operation '" + op.name() + "' built for a different universe");
    }
    for (std::size_t x = 0; x < size_; ++x) {
      std::vector<Elem> diag(op.arity(), static_cast<Elem>(x));
      if (op(diag) != x) {
        throw Error(ErrorKind::NonIdempotent,
                    "operation '" + op.name() + "' at " + std::to_string(x) + " gives " + std::to_string(op(diag)));
      }
    }
  }
}

std::string FiniteAlgebra::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

const OperationTable* FiniteAlgebra::find(const std::string& name) const {
  for (const auto& op : operations_) {
    if (op.name() == name) return &op;
  }
  return nullptr;
}

std::optional<std::size_t> FiniteAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    if (operations_[i].name() == name) return i;
  }
  return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

AlgebraDescription FiniteAlgebra::describe() const {
  AlgebraDescription d;
  d.name = name_;
  d.size = size_;
  d.labels = labels_;
  for (const auto& op : operations_) d.operations.push_back({op.name(), op.arity(), op.table()});
  return d;
}

FiniteAlgebra validate_algebra(const AlgebraDescription& description, const Limits& limits, bool force) {
  if (!force && description.size > limits.max_size) {
    throw Error(ErrorKind::TooLarge, "universe of " + std::to_string(description.size) +
                                         " elements exceeds the analysis bound " + std::to_string(limits.max_size));
  }
  std::set<std::string> names;
  std::vector<OperationTable> ops;
  for (const auto& op : description.operations) {
    if (!names.insert(op.name).second) throw Error(ErrorKind::DuplicateOpName, op.name);
    ops.emplace_back(op.name, op.arity, description.size, op.table);
  }
  return FiniteAlgebra(description.name, description.size, description.labels, std::move(ops));
}

SignatureMap SignatureMap::match(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.operations().size() != b.operations().size()) {
    throw Error(ErrorKind::SignatureMismatch, a.name() + " and " + b.name() + " differ in operation count");
  }
  SignatureMap map;
  for (const auto& op : a.operations()) {
    auto j = b.index_of(op.name());
    if (!j || b.operation(*j).arity() != op.arity()) {
      throw Error(ErrorKind::SignatureMismatch, "symbol '" + op.name() + "' has no counterpart in " + b.name());
    }
    map.to_second_.push_back(*j);
  }
  return map;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b, const SignatureMap& sig) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::vector<OperationTable> ops;
  for (std::size_t i = 0; i < a.operations().size(); ++i) {
    const auto& fa = a.operation(i);
    const auto& fb = b.operation(sig[i]);
    const std::size_t r = fa.arity();
    std::vector<Elem> table(checked_pow(n, r));
    std::vector<Elem> t(r, 0), left(r), right(r);
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < r; ++j) {
        left[j] = static_cast<Elem>(t[j] / nb);
        right[j] = static_cast<Elem>(t[j] % nb);
      }
      table[idx++] = pair_element(fa(left), fb(right), nb);
    } while (next_tuple(t, n));
    ops.emplace_back(fa.name(), r, n, std::move(table));
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (Elem x = 0; x < na; ++x) {
      for (Elem y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
  }
  return FiniteAlgebra(a.name() + "x" + b.name(), n, std::move(labels), std::move(ops));
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return product(a, b, SignatureMap::match(a, b));
}

Quotient quotient(const FiniteAlgebra& a, const Congruence& theta) {
  if (theta.universe() != a.size()) {
    throw Error(ErrorKind::NotACongruence, "partition universe differs from algebra size");
  }
  const std::size_t n = a.size();
  const std::size_t m = theta.block_count();
  std::vector<Elem> block_map(n);
  std::vector<Elem> representative(m);
  for (Elem x = n; x-- > 0;) {
    block_map[x] = static_cast<Elem>(theta.block_of(x));
    representative[block_map[x]] = x;
  }
  std::vector<OperationTable> ops;
  for (const auto& op : a.operations()) {
    const std::size_t r = op.arity();
    std::vector<Elem> table(checked_pow(m, r));
    std::vector<Elem> t(r, 0), reps(r);
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < r; ++j) reps[j] = representative[t[j]];
      table[idx++] = block_map[op(reps)];
    } while (next_tuple(t, m));
    // Well-definedness: every tuple must land in the block computed from representatives.
    std::vector<Elem> u(r, 0), blocks(r);
    do {
      for (std::size_t j = 0; j < r; ++j) blocks[j] = block_map[u[j]];
      Elem expected = table[tuple_index(blocks, m)];
      if (block_map[op(u)] != expected) {
        for (std::size_t j = 0; j < r; ++j) reps[j] = representative[blocks[j]];
        throw Error(ErrorKind::NotACongruence, "operation '" + op.name() + "' separates " + tuple_string(reps) +
                                                   " and " + tuple_string(u) + " in " + theta.to_string());
      }
    } while (next_tuple(u, n));
    ops.emplace_back(op.name(), r, m, std::move(table));
  }
  std::vector<std::string> labels;
  if (!a.labels().empty()) {
    for (const auto& block : theta.blocks()) {
      std::string l = "[";
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) l += ",";
        l += a.label(block[i]);
      }
      labels.push_back(l + "]");
    }
  }
  return Quotient{FiniteAlgebra(a.name() + "/" + theta.to_string(), m, std::move(labels), std::move(ops)),
                  std::move(block_map)};
}

Elem Subalgebra::local(Elem parent) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), parent);
  if (it == embedding.end() || *it != parent) {
    throw Error(ErrorKind::PreconditionViolated, "element " + std::to_string(parent) + " not in subalgebra");
  }
  return static_cast<Elem>(it - embedding.begin());
}

Subalgebra restrict(const FiniteAlgebra& a, ElemSet subset) {
  if (subset.empty()) throw Error(ErrorKind::PreconditionViolated, "cannot restrict to the empty set");
  std::vector<Elem> embedding = subset.elements();
  if (embedding.back() >= a.size()) throw Error(ErrorKind::PreconditionViolated, "subset exceeds universe");
  const std::size_t m = embedding.size();
  std::vector<Elem> local(a.size(), 0);
  for (std::size_t i = 0; i < m; ++i) local[embedding[i]] = static_cast<Elem>(i);
  std::vector<OperationTable> ops;
  for (const auto& op : a.operations()) {
    const std::size_t r = op.arity();
    std::vector<Elem> table(checked_pow(m, r));
    std::vector<Elem> t(r, 0), args(r);
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < r; ++j) args[j] = embedding[t[j]];
      Elem v = op(args);
      if (!subset.contains(v)) {
        throw Error(ErrorKind::NotClosed,
                    "operation '" + op.name() + "' maps " + tuple_string(args) + " to " + std::to_string(v));
      }
      table[idx++] = local[v];
    } while (next_tuple(t, m));
    ops.emplace_back(op.name(), r, m, std::move(table));
  }
  std::vector<std::string> labels;
  if (!a.labels().empty()) {
    for (Elem e : embedding) labels.push_back(a.label(e));
  }
  return Subalgebra{FiniteAlgebra(a.name(), m, std::move(labels), std::move(ops)), std::move(embedding)};
}

bool is_set(const FiniteAlgebra& a) {
  return std::all_of(a.operations().begin(), a.operations().end(),
                     [](const OperationTable& op) { return op.projection_index().has_value(); });
}

std::vector<FiniteAlgebra> make_similar(const std::vector<FiniteAlgebra>& algebras) {
  std::vector<std::pair<std::string, std::size_t>> signature;
  for (const auto& a : algebras) {
    for (const auto& op : a.operations()) {
      auto it = std::find_if(signature.begin(), signature.end(), [&](const auto& s) { return s.first == op.name(); });
      if (it == signature.end()) {
        signature.emplace_back(op.name(), op.arity());
      } else if (it->second != op.arity()) {
        throw Error(ErrorKind::SignatureMismatch, "symbol '" + op.name() + "' used with arities " +
                                                      std::to_string(it->second) + " and " +
                                                      std::to_string(op.arity()));
      }
    }
  }
  std::vector<FiniteAlgebra> out;
  for (const auto& a : algebras) {
    std::vector<OperationTable> ops;
    for (const auto& [name, arity] : signature) {
      if (const auto* op = a.find(name)) {
        ops.push_back(*op);
        continue;
      }
      const std::size_t n = a.size();
      std::vector<Elem> table(checked_pow(n, arity));
      const std::size_t stride = checked_pow(n, arity - 1);
      for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Elem>(i / stride);
      ops.emplace_back(name, arity, n, std::move(table));
    }
    out.emplace_back(a.name(), a.size(), a.labels(), std::move(ops));
  }
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() > 8 || b.size() > 8) throw Error(ErrorKind::TooLarge, "isomorphism search is limited to 8 elements");
  if (a.size() != b.size()) return std::nullopt;
  SignatureMap sig;
  try {
    sig = SignatureMap::match(a, b);
  } catch (const Error&) {
    return std::nullopt;
  }
  const std::size_t n = a.size();
  std::vector<Elem> map(n, 0);
  std::vector<bool> assigned(n, false), used(n, false);

  // Checks every tuple whose arguments and value are already mapped.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i < a.operations().size(); ++i) {
      const auto& fa = a.operation(i);
      const auto& fb = b.operation(sig[i]);
      std::vector<Elem> t(fa.arity(), 0), image(fa.arity());
      if (upto == 0) return true;
      do {
        for (std::size_t j = 0; j < t.size(); ++j) image[j] = map[t[j]];
        Elem v = fa(t);
        if (v < upto && fb(image) != map[v]) return false;
      } while (next_tuple(t, upto));
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x + 1) && search(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  (void)assigned;
  if (search(0)) return map;
  return std::nullopt;
}

}  // namespace idem
