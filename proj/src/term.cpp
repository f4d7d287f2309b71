#include "idem/term.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace idem {

struct TermNode {
  TermKind kind;
  std::size_t arity;
  std::size_t index;
  std::string op;
  std::vector<Term> children;  // Iterate: k steps followed by k inputs
  std::uint64_t times;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct NodeHash {
  std::size_t operator()(const TermNode* n) const { return n->hash; }
};

struct NodeEq {
  bool operator()(const TermNode* x, const TermNode* y) const {
    return x->kind == y->kind && x->arity == y->arity && x->index == y->index && x->times == y->times &&
           x->op == y->op && x->children == y->children;
  }
};

struct Pool {
  std::mutex mutex;
  std::deque<TermNode> storage;
  std::unordered_set<const TermNode*, NodeHash, NodeEq> index;
};

Pool& pool() {
  static Pool* p = new Pool();
  return *p;
}

}  // namespace

Term make_node(TermNode&& node) {
  std::size_t h = mix(static_cast<std::size_t>(node.kind), node.arity);
  h = mix(h, node.index);
  h = mix(h, node.times);
  h = mix(h, std::hash<std::string>{}(node.op));
  for (const Term& c : node.children) h = mix(h, std::hash<const TermNode*>{}(c.node()));
  node.hash = h;
  Pool& p = pool();
  std::lock_guard lock(p.mutex);
  if (auto it = p.index.find(&node); it != p.index.end()) return Term(*it);
  p.storage.push_back(std::move(node));
  const TermNode* stored = &p.storage.back();
  p.index.insert(stored);
  return Term(stored);
}

TermKind Term::kind() const { return node_->kind; }
std::size_t Term::arity() const { return node_->arity; }
std::size_t Term::index() const { return node_->index; }
const std::string& Term::op() const { return node_->op; }
std::uint64_t Term::times() const { return node_->times; }

std::span<const Term> Term::children() const { return node_->children; }

std::span<const Term> Term::steps() const {
  std::span<const Term> all = node_->children;
  return all.first(all.size() / 2);
}

std::span<const Term> Term::inputs() const {
  std::span<const Term> all = node_->children;
  return all.subspan(all.size() / 2);
}

std::size_t Term::dag_size() const {
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> stack{node_};
  while (!stack.empty()) {
    const TermNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const Term& c : n->children) stack.push_back(c.node());
  }
  return seen.size();
}

namespace {

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Projection:
      out += 'p';
      out += std::to_string(t.index());
      return;
    case TermKind::Apply: {
      out += t.op();
      out += '(';
      bool first = true;
      for (const Term& c : t.children()) {
        if (!first) out += ", ";
        first = false;
        print(c, out);
      }
      out += ')';
      return;
    }
    case TermKind::Iterate: {
      out += "iter[" + std::to_string(t.times()) + "," + std::to_string(t.index()) + "](";
      bool first = true;
      for (const Term& c : t.steps()) {
        if (!first) out += ", ";
        first = false;
        print(c, out);
      }
      out += "; ";
      first = true;
      for (const Term& c : t.inputs()) {
        if (!first) out += ", ";
        first = false;
        print(c, out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string Term::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

Term proj(std::size_t index, std::size_t arity) {
  if (index >= arity) {
    throw Error(ErrorKind::ArityMismatch,
                "projection p" + std::to_string(index) + " in arity " + std::to_string(arity));
  }
  return make_node(TermNode{TermKind::Projection, arity, index, {}, {}, 0, 0});
}

Term apply(const std::string& op, std::vector<Term> children) {
  if (children.empty()) throw Error(ErrorKind::ArityMismatch, "operation '" + op + "' applied to nothing");
  const std::size_t arity = children.front().arity();
  for (const Term& c : children) {
    if (c.arity() != arity) throw Error(ErrorKind::ArityMismatch, "arguments of '" + op + "' differ in arity");
  }
  return make_node(TermNode{TermKind::Apply, arity, 0, op, std::move(children), 0, 0});
}

Term iterate(std::vector<Term> steps, std::vector<Term> inputs, std::uint64_t times, std::size_t index) {
  const std::size_t k = steps.size();
  if (k == 0 || inputs.size() != k || index >= k) {
    throw Error(ErrorKind::ArityMismatch, "iterate needs k steps, k inputs and an index below k");
  }
  for (const Term& s : steps) {
    if (s.arity() != k) throw Error(ErrorKind::ArityMismatch, "iterate step of arity " + std::to_string(s.arity()));
  }
  const std::size_t arity = inputs.front().arity();
  for (const Term& in : inputs) {
    if (in.arity() != arity) throw Error(ErrorKind::ArityMismatch, "iterate inputs differ in arity");
  }
  if (times == 0) return inputs[index];
  std::vector<Term> children = std::move(steps);
  children.insert(children.end(), inputs.begin(), inputs.end());
  return make_node(TermNode{TermKind::Iterate, arity, index, {}, std::move(children), times, 0});
}

Term compose(const Term& t, const std::vector<Term>& args) {
  if (args.size() != t.arity()) {
    throw Error(ErrorKind::ArityMismatch, "substituting " + std::to_string(args.size()) + " terms into arity " +
                                              std::to_string(t.arity()));
  }
  std::unordered_map<const TermNode*, Term> memo;
  std::function<Term(const Term&)> go = [&](const Term& s) -> Term {
    if (auto it = memo.find(s.node()); it != memo.end()) return it->second;
    Term out;
    switch (s.kind()) {
      case TermKind::Projection:
        out = args[s.index()];
        break;
      case TermKind::Apply: {
        std::vector<Term> cs;
        for (const Term& c : s.children()) cs.push_back(go(c));
        out = apply(s.op(), std::move(cs));
        break;
      }
      case TermKind::Iterate: {
        std::vector<Term> steps(s.steps().begin(), s.steps().end());
        std::vector<Term> ins;
        for (const Term& c : s.inputs()) ins.push_back(go(c));
        out = iterate(std::move(steps), std::move(ins), s.times(), s.index());
        break;
      }
    }
    memo.emplace(s.node(), out);
    return out;
  };
  return go(t);
}

Term swap_binary(const Term& t) { return compose(t, {proj(1, 2), proj(0, 2)}); }

Term permute(const Term& t, const std::vector<std::size_t>& perm) {
  std::vector<Term> args;
  for (std::size_t i : perm) args.push_back(proj(i, t.arity()));
  return compose(t, args);
}

namespace {

struct RawTerm {
  enum Kind { Var, Call, Iter } kind = Var;
  std::string name;
  std::size_t index = 0;
  std::uint64_t times = 0;
  std::vector<RawTerm> args;
  std::vector<RawTerm> inputs;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawTerm parse_all() {
    RawTerm t = parse();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }
  std::vector<RawTerm> list(char stop) {
    std::vector<RawTerm> out{parse()};
    while (!peek(stop)) {
      expect(',');
      out.push_back(parse());
    }
    return out;
  }

  RawTerm parse() {
    std::string name = ident();
    RawTerm t;
    if (name == "iter" && peek('[')) {
      expect('[');
      t.kind = RawTerm::Iter;
      t.times = number();
      expect(',');
      t.index = static_cast<std::size_t>(number());
      expect(']');
      expect('(');
      t.args = list(';');
      expect(';');
      t.inputs = list(')');
      expect(')');
      return t;
    }
    if (peek('(')) {
      expect('(');
      t.kind = RawTerm::Call;
      t.name = name;
      t.args = list(')');
      expect(')');
      return t;
    }
    if (name.size() >= 2 && name[0] == 'p' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      t.kind = RawTerm::Var;
      t.index = std::stoull(name.substr(1));
      return t;
    }
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Term build(const RawTerm& raw, std::size_t arity) {
  switch (raw.kind) {
    case RawTerm::Var:
      if (raw.index >= arity) {
        throw Error(ErrorKind::ParseError, "variable p" + std::to_string(raw.index) + " exceeds arity");
      }
      return proj(raw.index, arity);
    case RawTerm::Call: {
      std::vector<Term> cs;
      for (const auto& a : raw.args) cs.push_back(build(a, arity));
      return apply(raw.name, std::move(cs));
    }
    case RawTerm::Iter: {
      const std::size_t k = raw.args.size();
      std::vector<Term> steps, ins;
      for (const auto& s : raw.args) steps.push_back(build(s, k));
      for (const auto& in : raw.inputs) ins.push_back(build(in, arity));
      if (raw.times == 0) throw Error(ErrorKind::ParseError, "iterate with zero repetitions");
      return iterate(std::move(steps), std::move(ins), raw.times, raw.index);
    }
  }
  throw Error(ErrorKind::ParseError, "malformed term");
}

const OperationTable& resolve(const FiniteAlgebra& a, const Term& t) {
  const OperationTable* op = a.find(t.op());
  if (op == nullptr) throw Error(ErrorKind::UnknownSymbol, "'" + t.op() + "' is not an operation of " + a.name());
  if (op->arity() != t.children().size()) {
    throw Error(ErrorKind::ArityMismatch, "'" + t.op() + "' has arity " + std::to_string(op->arity()) + ", applied to " +
                                              std::to_string(t.children().size()));
  }
  return *op;
}

class Evaluator {
 public:
  explicit Evaluator(const FiniteAlgebra& a) : a_(a) {}

  Elem run(const Term& t, std::span<const Elem> args) {
    std::unordered_map<const TermNode*, Elem> memo;
    return go(t, args, memo);
  }

 private:
  Elem go(const Term& t, std::span<const Elem> args, std::unordered_map<const TermNode*, Elem>& memo) {
    if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
    Elem v = 0;
    switch (t.kind()) {
      case TermKind::Projection:
        v = args[t.index()];
        break;
      case TermKind::Apply: {
        const OperationTable& op = resolve(a_, t);
        std::vector<Elem> vals;
        for (const Term& c : t.children()) vals.push_back(go(c, args, memo));
        v = op(vals);
        break;
      }
      case TermKind::Iterate: {
        std::vector<Elem> state;
        for (const Term& in : t.inputs()) state.push_back(go(in, args, memo));
        v = iterate_state(t, std::move(state))[t.index()];
        break;
      }
    }
    memo.emplace(t.node(), v);
    return v;
  }

  std::vector<Elem> step(const Term& t, const std::vector<Elem>& state) {
    std::unordered_map<const TermNode*, Elem> memo;
    std::vector<Elem> next;
    for (const Term& s : t.steps()) next.push_back(go(s, state, memo));
    return next;
  }

  // Applies the step map `times` times, jumping over cycles once one is seen.
  std::vector<Elem> iterate_state(const Term& t, std::vector<Elem> state) {
    std::map<std::vector<Elem>, std::uint64_t> seen;
    std::uint64_t done = 0;
    const std::uint64_t total = t.times();
    while (done < total) {
      auto [it, fresh] = seen.emplace(state, done);
      if (!fresh) {
        std::uint64_t period = done - it->second;
        std::uint64_t rest = (total - done) % period;
        for (std::uint64_t i = 0; i < rest; ++i) state = step(t, state);
        return state;
      }
      state = step(t, state);
      ++done;
    }
    return state;
  }

  const FiniteAlgebra& a_;
};

class Realizer {
 public:
  explicit Realizer(const FiniteAlgebra& a) : a_(a), n_(a.size()) {}

  const std::vector<Elem>& table(const Term& t) {
    if (auto it = memo_.find(t.node()); it != memo_.end()) return it->second;
    const std::size_t size = checked_pow(n_, t.arity());
    std::vector<Elem> out(size);
    switch (t.kind()) {
      case TermKind::Projection: {
        const std::size_t stride = checked_pow(n_, t.arity() - 1 - t.index());
        for (std::size_t i = 0; i < size; ++i) out[i] = static_cast<Elem>((i / stride) % n_);
        break;
      }
      case TermKind::Apply: {
        const OperationTable& op = resolve(a_, t);
        std::vector<const std::vector<Elem>*> cs;
        for (const Term& c : t.children()) cs.push_back(&table(c));
        for (std::size_t i = 0; i < size; ++i) {
          std::size_t idx = 0;
          for (const auto* c : cs) idx = idx * n_ + (*c)[i];
          out[i] = op.at(idx);
        }
        break;
      }
      case TermKind::Iterate: {
        const std::size_t k = t.steps().size();
        const std::size_t states = checked_pow(n_, k);
        std::vector<const std::vector<Elem>*> ss, ins;
        for (const Term& s : t.steps()) ss.push_back(&table(s));
        for (const Term& in : t.inputs()) ins.push_back(&table(in));
        std::vector<std::size_t> map(states);
        for (std::size_t s = 0; s < states; ++s) {
          std::size_t idx = 0;
          for (const auto* c : ss) idx = idx * n_ + (*c)[s];
          map[s] = idx;
        }
        std::vector<std::size_t> power = power_of(map, t.times());
        const std::size_t stride = checked_pow(n_, k - 1 - t.index());
        for (std::size_t i = 0; i < size; ++i) {
          std::size_t idx = 0;
          for (const auto* c : ins) idx = idx * n_ + (*c)[i];
          out[i] = static_cast<Elem>((power[idx] / stride) % n_);
        }
        break;
      }
    }
    return memo_.emplace(t.node(), std::move(out)).first->second;
  }

 private:
  static std::vector<std::size_t> power_of(const std::vector<std::size_t>& map, std::uint64_t m) {
    std::vector<std::size_t> result(map.size()), base = map, tmp(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) result[i] = i;
    while (m > 0) {
      if (m & 1U) {
        for (std::size_t i = 0; i < map.size(); ++i) tmp[i] = base[result[i]];
        result.swap(tmp);
      }
      m >>= 1U;
      if (m > 0) {
        for (std::size_t i = 0; i < map.size(); ++i) tmp[i] = base[base[i]];
        base.swap(tmp);
      }
    }
    return result;
  }

  const FiniteAlgebra& a_;
  std::size_t n_;
  std::unordered_map<const TermNode*, std::vector<Elem>> memo_;
};

}  // namespace

Term parse_term(std::string_view text, std::size_t arity) {
  if (arity == 0) throw Error(ErrorKind::ParseError, "terms need at least one variable");
  return build(Parser(text).parse_all(), arity);
}

Elem eval(const Term& t, const FiniteAlgebra& a, std::span<const Elem> args) {
  if (args.size() != t.arity()) {
    throw Error(ErrorKind::ArityMismatch, "term of arity " + std::to_string(t.arity()) + " given " +
                                              std::to_string(args.size()) + " arguments");
  }
  for (Elem x : args) {
    if (x >= a.size()) throw Error(ErrorKind::EntryOutOfRange, "argument " + std::to_string(x));
  }
  return Evaluator(a).run(t, args);
}

OperationTable realize_table(const Term& t, const FiniteAlgebra& a, const std::string& name) {
  Realizer r(a);
  return OperationTable(name, t.arity(), a.size(), r.table(t));
}

std::optional<std::vector<Elem>> check_identity(const FiniteAlgebra& a, const Identity& id) {
  if (id.left.arity() != id.right.arity()) throw Error(ErrorKind::ArityMismatch, "identity sides differ in arity");
  Realizer r(a);
  const auto& lhs = r.table(id.left);
  const auto& rhs = r.table(id.right);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return tuple_at(i, id.left.arity(), a.size());
  }
  return std::nullopt;
}

}  // namespace idem
