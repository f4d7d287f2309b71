#include "idem/genclose.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

namespace idem {

namespace {

constexpr std::uint32_t kGenerator = std::numeric_limits<std::uint32_t>::max();

// Visits argument index tuples in [0, size)^r lexicographically, skipping
// those whose entries all lie below `fresh` (already combined in an earlier round).
template <typename F>
void for_each_fresh_tuple(std::size_t r, std::size_t size, std::size_t fresh, F&& visit) {
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    bool any_new = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= fresh; });
    if (any_new && !visit(idx)) return;
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < size) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

GenerationTrace generate_subalgebra(const FiniteAlgebra& a, const std::vector<Elem>& generators) {
  if (generators.empty()) throw Error(ErrorKind::PreconditionViolated, "generating set is empty");
  GenerationTrace trace;
  trace.steps.resize(a.size());
  for (Elem g : generators) {
    if (g >= a.size()) throw Error(ErrorKind::EntryOutOfRange, "generator " + std::to_string(g));
    if (trace.universe.contains(g)) continue;
    GenerationStep step;
    step.is_generator = true;
    step.generator = trace.generators.size();
    trace.steps[g] = step;
    trace.generators.push_back(g);
    trace.order.push_back(g);
    trace.universe.insert(g);
  }
  std::size_t fresh = 0;
  std::vector<Elem> args;
  while (fresh < trace.order.size()) {
    const std::size_t size = trace.order.size();
    for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
      const auto& op = a.operation(oi);
      args.resize(op.arity());
      for_each_fresh_tuple(op.arity(), size, fresh, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t j = 0; j < idx.size(); ++j) args[j] = trace.order[idx[j]];
        Elem v = op(args);
        if (!trace.universe.contains(v)) {
          trace.universe.insert(v);
          trace.order.push_back(v);
          trace.steps[v] = GenerationStep{false, 0, oi, args};
        }
        return true;
      });
    }
    fresh = size;
  }
  return trace;
}

GenerationTrace generate_subalgebra(const FiniteAlgebra& a, ElemSet generators) {
  return generate_subalgebra(a, generators.elements());
}

Term witness_term(const GenerationTrace& trace, const FiniteAlgebra& a, Elem e) {
  if (e >= a.size() || !trace.universe.contains(e)) {
    throw Error(ErrorKind::ElementNotGenerated, "element " + std::to_string(e) + " is not in the generated subuniverse");
  }
  const std::size_t m = trace.generators.size();
  std::unordered_map<Elem, Term> memo;
  auto go = [&](auto&& self, Elem x) -> Term {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const GenerationStep& s = trace.steps[x];
    Term t;
    if (s.is_generator) {
      t = proj(s.generator, m);
    } else {
      std::vector<Term> cs;
      for (Elem y : s.args) cs.push_back(self(self, y));
      t = apply(a.operation(s.op).name(), std::move(cs));
    }
    memo.emplace(x, t);
    return t;
  };
  return go(go, e);
}

ElemSet sg(const FiniteAlgebra& a, ElemSet s) {
  std::vector<Elem> elems = s.elements();
  std::size_t fresh = 0;
  std::vector<Elem> args;
  while (fresh < elems.size()) {
    const std::size_t size = elems.size();
    for (const auto& op : a.operations()) {
      args.resize(op.arity());
      for_each_fresh_tuple(op.arity(), size, fresh, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t j = 0; j < idx.size(); ++j) args[j] = elems[idx[j]];
        Elem v = op(args);
        if (!s.contains(v)) {
          s.insert(v);
          elems.push_back(v);
        }
        return true;
      });
    }
    fresh = size;
  }
  return s;
}

bool is_subuniverse(const FiniteAlgebra& a, ElemSet s) { return !s.empty() && sg(a, s) == s; }

std::vector<ElemSet> all_subalgebras(const FiniteAlgebra& a, const Limits& limits) {
  if (a.size() > limits.max_size) {
    throw Error(ErrorKind::TooLarge, "subalgebra enumeration limited to " + std::to_string(limits.max_size) + " elements");
  }
  std::set<std::uint64_t> seen;
  std::vector<ElemSet> queue;
  for (Elem x = 0; x < a.size(); ++x) {
    ElemSet s{x};
    if (seen.insert(s.bits()).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElemSet s = queue[i];
    for (Elem x = 0; x < a.size(); ++x) {
      if (s.contains(x)) continue;
      ElemSet bigger = s;
      bigger.insert(x);
      bigger = sg(a, bigger);
      if (seen.insert(bigger.bits()).second) queue.push_back(bigger);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

TupleClosure::TupleClosure(const FiniteAlgebra& a, std::size_t k, const std::vector<std::vector<Elem>>& generators,
                           std::size_t cap)
    : a_(a), k_(k), cap_(cap), generator_count_(generators.size()) {
  if (k_ == 0) throw Error(ErrorKind::PreconditionViolated, "tuples need at least one coordinate");
  if (a.size() > 255) throw Error(ErrorKind::TooLarge, "tuple packing supports at most 255 elements");
  if (cap_ == 0) throw Error(ErrorKind::PreconditionViolated, "node cap must be positive");
  if (generators.empty()) throw Error(ErrorKind::PreconditionViolated, "no generators");
  slots_.assign(1024, 0);
  std::vector<std::uint8_t> buf(k_);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != k_) throw Error(ErrorKind::ArityMismatch, "generator length differs from k");
    for (std::size_t c = 0; c < k_; ++c) {
      if (generators[g][c] >= a.size()) throw Error(ErrorKind::EntryOutOfRange, "generator entry");
      buf[c] = static_cast<std::uint8_t>(generators[g][c]);
    }
    std::uint32_t gi = static_cast<std::uint32_t>(g);
    insert(buf.data(), kGenerator, &gi, 0);
  }
}

std::size_t TupleClosure::hash(const std::uint8_t* t) const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t c = 0; c < k_; ++c) {
    h ^= t[c];
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

std::optional<std::size_t> TupleClosure::find(const std::vector<Elem>& t) const {
  if (t.size() != k_) return std::nullopt;
  std::vector<std::uint8_t> buf(k_);
  for (std::size_t c = 0; c < k_; ++c) {
    if (t[c] >= a_.size()) return std::nullopt;
    buf[c] = static_cast<std::uint8_t>(t[c]);
  }
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(buf.data()) & mask;; s = (s + 1) & mask) {
    if (slots_[s] == 0) return std::nullopt;
    std::size_t i = slots_[s] - 1;
    if (std::equal(buf.begin(), buf.end(), data(i))) return i;
  }
}

// Returns true when the tuple was new. For generators `args` points to the
// generator index and `arity` is 0.
bool TupleClosure::insert(const std::uint8_t* t, std::uint32_t op, const std::uint32_t* args, std::size_t arity) {
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(t) & mask;
  for (; slots_[s] != 0; s = (s + 1) & mask) {
    if (std::equal(t, t + k_, data(slots_[s] - 1))) return false;
  }
  tuples_.insert(tuples_.end(), t, t + k_);
  prov_op_.push_back(op);
  if (op == kGenerator) {
    prov_start_.push_back(args[0]);
  } else {
    prov_start_.push_back(static_cast<std::uint32_t>(prov_args_.size()));
    prov_args_.insert(prov_args_.end(), args, args + arity);
  }
  slots_[s] = static_cast<std::uint32_t>(++count_);
  if (2 * count_ > slots_.size()) {
    std::vector<std::uint32_t> bigger(slots_.size() * 2, 0);
    mask = bigger.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t p = hash(data(i)) & mask;
      while (bigger[p] != 0) p = (p + 1) & mask;
      bigger[p] = static_cast<std::uint32_t>(i + 1);
    }
    slots_.swap(bigger);
  }
  return true;
}

TupleClosure::Status TupleClosure::run(const std::vector<std::vector<Elem>>& targets) {
  found_target_.reset();
  found_index_.reset();
  targets_.clear();
  for (const auto& t : targets) {
    if (t.size() != k_) throw Error(ErrorKind::ArityMismatch, "target length differs from k");
    targets_.emplace_back(t.begin(), t.end());
  }
  auto match = [&](std::size_t i) {
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (std::equal(targets_[j].begin(), targets_[j].end(), data(i))) {
        found_target_ = j;
        found_index_ = i;
        return true;
      }
    }
    return false;
  };
  // Earlier tuples in generation order win, so a target already present is reported first.
  for (std::size_t i = 0; i < count_; ++i) {
    if (match(i)) return Status::TargetFound;
  }
  if (count_ > cap_) return Status::CapExceeded;

  const std::size_t n = a_.size();
  std::vector<std::uint8_t> out(k_);
  std::vector<std::size_t> base(k_);
  std::vector<std::uint32_t> args;
  while (level_start_ < count_) {
    const std::size_t size = count_;
    const std::size_t fresh = level_start_;
    ++rounds_;
    for (std::size_t oi = 0; oi < a_.operations().size(); ++oi) {
      const auto& op = a_.operation(oi);
      const std::size_t r = op.arity();
      const Elem* table = op.table().data();
      args.assign(r, 0);
      // Odometer over the first r-1 arguments; the last one runs in the inner loop.
      std::vector<std::size_t> prefix(r - 1, 0);
      while (true) {
        bool any_new = std::any_of(prefix.begin(), prefix.end(), [&](std::size_t i) { return i >= fresh; });
        std::fill(base.begin(), base.end(), 0);
        for (std::size_t p = 0; p + 1 < r; ++p) {
          const std::uint8_t* tp = data(prefix[p]);
          for (std::size_t c = 0; c < k_; ++c) base[c] = base[c] * n + tp[c];
          args[p] = static_cast<std::uint32_t>(prefix[p]);
        }
        for (std::size_t c = 0; c < k_; ++c) base[c] *= n;
        work_ += size - (any_new ? 0 : fresh);
        if (work_exceeded()) return Status::CapExceeded;
        for (std::size_t j = any_new ? 0 : fresh; j < size; ++j) {
          const std::uint8_t* tj = data(j);
          for (std::size_t c = 0; c < k_; ++c) out[c] = static_cast<std::uint8_t>(table[base[c] + tj[c]]);
          args[r - 1] = static_cast<std::uint32_t>(j);
          if (!insert(out.data(), static_cast<std::uint32_t>(oi), args.data(), r)) continue;
          if (match(count_ - 1)) return Status::TargetFound;
          if (count_ >= cap_) return Status::CapExceeded;
        }
        std::size_t pos = prefix.size();
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++prefix[pos] < size) {
            done = false;
            break;
          }
          prefix[pos] = 0;
        }
        if (done) break;
      }
    }
    level_start_ = size;
  }
  return Status::Complete;
}

std::vector<Elem> TupleClosure::tuple(std::size_t i) const {
  return std::vector<Elem>(data(i), data(i) + k_);
}

Term TupleClosure::witness(std::size_t i) {
  if (witness_memo_.size() < count_) witness_memo_.resize(count_);
  auto go = [&](auto&& self, std::size_t x) -> Term {
    if (witness_memo_[x].valid()) return witness_memo_[x];
    Term t;
    if (prov_op_[x] == kGenerator) {
      t = proj(prov_start_[x], generator_count_);
    } else {
      const auto& op = a_.operation(prov_op_[x]);
      std::vector<Term> cs;
      for (std::size_t p = 0; p < op.arity(); ++p) cs.push_back(self(self, prov_args_[prov_start_[x] + p]));
      t = apply(op.name(), std::move(cs));
    }
    witness_memo_[x] = t;
    return t;
  };
  return go(go, i);
}

namespace {

void assert_witness(const FiniteAlgebra& a, const Term& w, const std::vector<std::vector<Elem>>& generators,
                    const std::vector<Elem>& target) {
  const OperationTable table = realize_table(w, a);
  std::vector<Elem> column(generators.size());
  for (std::size_t c = 0; c < target.size(); ++c) {
    for (std::size_t g = 0; g < generators.size(); ++g) column[g] = generators[g][c];
    if (table(column) != target[c]) {
      throw Error(ErrorKind::PostconditionFailed, "witness " + w.to_string() + " misses coordinate " + std::to_string(c));
    }
  }
}

}  // namespace

SubpowerAnswer subpower_membership(const SubpowerQuery& q) {
  if (q.algebra == nullptr) throw Error(ErrorKind::PreconditionViolated, "query without algebra");
  TupleClosure closure(*q.algebra, q.k, q.generators, q.cap);
  SubpowerAnswer answer;
  answer.cap = q.cap;
  switch (closure.run({q.target})) {
    case TupleClosure::Status::TargetFound: {
      answer.status = SubpowerAnswer::Status::Found;
      answer.witness = closure.witness(*closure.found_index());
      assert_witness(*q.algebra, *answer.witness, q.generators, q.target);
      break;
    }
    case TupleClosure::Status::Complete:
      answer.status = SubpowerAnswer::Status::Absent;
      break;
    case TupleClosure::Status::CapExceeded:
      answer.status = SubpowerAnswer::Status::CapExceeded;
      break;
  }
  answer.closure_size = closure.size();
  return answer;
}

PairWitness find_pair_witness(const FiniteAlgebra& d, WitnessKind kind, Elem a, Elem b, std::size_t cap) {
  std::vector<std::vector<Elem>> generators;
  std::vector<std::vector<Elem>> targets;
  if (kind != WitnessKind::Maltsev) {
    if (a == b) throw Error(ErrorKind::PreconditionViolated, "pair witness needs distinct elements");
    if (a >= d.size() || b >= d.size()) throw Error(ErrorKind::EntryOutOfRange, "pair element");
  }
  switch (kind) {
    case WitnessKind::Semilattice:
      generators = {{a, b}, {b, a}};
      targets = {{b, b}, {a, a}};
      break;
    case WitnessKind::Majority: {
      // Six non-constant triples over {a, b} in lexicographic order (a before b).
      const std::vector<std::vector<Elem>> triples = {{a, a, b}, {a, b, a}, {a, b, b},
                                                      {b, a, a}, {b, a, b}, {b, b, a}};
      generators.assign(3, {});
      std::vector<Elem> target;
      for (const auto& t : triples) {
        for (std::size_t r = 0; r < 3; ++r) generators[r].push_back(t[r]);
        target.push_back(t[0] == t[1] || t[0] == t[2] ? t[0] : t[1]);
      }
      targets = {target};
      break;
    }
    case WitnessKind::Maltsev: {
      generators.assign(3, {});
      std::vector<Elem> target;
      for (Elem x = 0; x < d.size(); ++x) {
        for (Elem y = 0; y < d.size(); ++y) {
          if (x == y) continue;
          for (const std::vector<Elem>& t : {std::vector<Elem>{x, x, y}, std::vector<Elem>{y, x, x}}) {
            for (std::size_t r = 0; r < 3; ++r) generators[r].push_back(t[r]);
            target.push_back(y);
          }
        }
      }
      if (target.empty()) {
        // One-element algebra: every operation is Mal'tsev.
        PairWitness w;
        w.status = SubpowerAnswer::Status::Found;
        w.witness = proj(0, 3);
        w.closure_size = 1;
        return w;
      }
      targets = {target};
      break;
    }
  }
  const std::size_t k = generators.front().size();
  TupleClosure closure(d, k, generators, cap);
  PairWitness out;
  const auto status = closure.run(targets);
  out.closure_size = closure.size();
  if (status == TupleClosure::Status::Complete) {
    out.status = SubpowerAnswer::Status::Absent;
  } else if (status == TupleClosure::Status::CapExceeded) {
    out.status = SubpowerAnswer::Status::CapExceeded;
  } else {
    out.status = SubpowerAnswer::Status::Found;
    out.witness = closure.witness(*closure.found_index());
    assert_witness(d, *out.witness, generators, targets[*closure.found_target()]);
    if (kind == WitnessKind::Semilattice) out.absorber = *closure.found_target() == 0 ? b : a;
  }
  return out;
}

}  // namespace idem
