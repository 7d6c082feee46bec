#pragma once

// Type D, type A, and type DA structures over the torus algebra, as
// decorated labeled digraphs / sparse action tables, together with their
// validity predicates and the type-D-to-type-A dualization.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfo/algebra.hpp"
#include "hfo/errors.hpp"

namespace hfo {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
  std::string to_string() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v;
    }
    return s;
  }
};

namespace detail {

template <typename EdgeSet, typename FromOf, typename ToOf>
bool digraph_has_cycle(int n, const EdgeSet& edges, FromOf from_of, ToOf to_of,
                       std::vector<int>* cycle_out = nullptr) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) adj[from_of(e)].push_back(to_of(e));
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<int> state(n, 0), stack;
  std::vector<int> parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w : adj[v]) {
          if (state[w] == 1) {
            if (cycle_out) {
              cycle_out->clear();
              cycle_out->push_back(w);
              for (int u = v; u != w && u != -1; u = parent[u])
                cycle_out->push_back(u);
              std::reverse(cycle_out->begin(), cycle_out->end());
            }
            return true;
          }
          if (state[w] == 0) {
            parent[w] = v;
            stack.push_back(w);
          }
        }
      } else {
        if (state[v] == 1) state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Type D structures
// ---------------------------------------------------------------------------

struct TypeDGenerator {
  std::string name;
  Idem idem;
};

struct TypeDEdge {
  int from;
  ReebLabel label;
  int to;
  auto operator<=>(const TypeDEdge&) const = default;
};

// Edge multiset is normalized mod 2: toggling an existing edge removes it.
class TypeDStructure {
 public:
  int add_generator(const std::string& name, Idem idem) {
    if (index_.count(name))
      throw SchemaError("type D structure: duplicate generator name '" + name + "'");
    gens_.push_back({name, idem});
    index_[name] = static_cast<int>(gens_.size()) - 1;
    return static_cast<int>(gens_.size()) - 1;
  }

  void toggle_edge(int from, ReebLabel label, int to) {
    check_index(from);
    check_index(to);
    TypeDEdge e{from, label, to};
    auto it = edges_.find(e);
    if (it == edges_.end())
      edges_.insert(e);
    else
      edges_.erase(it);
  }
  void toggle_edge(const std::string& from, ReebLabel label, const std::string& to) {
    toggle_edge(index_of(from), label, index_of(to));
  }

  bool has_edge(int from, ReebLabel label, int to) const {
    return edges_.count({from, label, to}) > 0;
  }
  bool has_edge(const std::string& from, ReebLabel label, const std::string& to) const {
    return has_edge(index_of(from), label, index_of(to));
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw SchemaError("type D structure: unknown generator '" + name + "'");
    return it->second;
  }
  bool has_generator(const std::string& name) const { return index_.count(name) > 0; }

  const std::vector<TypeDGenerator>& generators() const { return gens_; }
  const std::set<TypeDEdge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::string& name_of(int i) const { return gens_[i].name; }
  Idem idem_of(int i) const { return gens_[i].idem; }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size()) throw SchemaError("type D structure: generator index out of range");
  }
  std::vector<TypeDGenerator> gens_;
  std::set<TypeDEdge> edges_;
  std::unordered_map<std::string, int> index_;
};

// Checks edge/idempotent compatibility and the d^2 relation (for every
// ordered generator pair, the label products over length-2 paths cancel).
inline ValidationReport validate_type_d(const TypeDStructure& d) {
  ValidationReport report;
  for (const auto& e : d.edges()) {
    const auto& src = d.generators()[e.from];
    const auto& dst = d.generators()[e.to];
    if (e.label == ReebLabel::One) {
      if (src.idem != dst.idem)
        report.fail("identity edge " + src.name + " -> " + dst.name +
                    " joins generators with different idempotents");
    } else {
      if (src.idem != *label_left_idem(e.label) || dst.idem != *label_right_idem(e.label))
        report.fail("edge " + src.name + " -" + std::string(label_name(e.label)) + "-> " +
                    dst.name + " violates idempotent compatibility");
    }
  }
  // d^2: sum of label products over all length-2 paths v -> u -> w.
  std::map<std::pair<int, int>, AlgebraElement> sums;
  for (const auto& e1 : d.edges())
    for (const auto& e2 : d.edges()) {
      if (e1.to != e2.from) continue;
      auto& acc = sums[{e1.from, e2.to}];
      acc = acc + label_algebra(e1.label) * label_algebra(e2.label);
    }
  for (const auto& [vw, sum] : sums) {
    if (!sum.is_zero())
      report.fail("d^2 != 0 at (" + d.name_of(vw.first) + ", " + d.name_of(vw.second) +
                  "): sum " + sum.to_string());
  }
  return report;
}

inline void require_valid(const TypeDStructure& d, const std::string& context) {
  const auto report = validate_type_d(d);
  if (!report.ok) throw InvariantError(context + ": " + report.to_string());
}

// Bounded <=> the edge digraph (identity edges included) is acyclic.
inline bool is_bounded(const TypeDStructure& d, std::vector<int>* cycle_out = nullptr) {
  return !detail::digraph_has_cycle(
      d.size(), d.edges(), [](const TypeDEdge& e) { return e.from; },
      [](const TypeDEdge& e) { return e.to; }, cycle_out);
}

inline bool is_reduced(const TypeDStructure& d) {
  return std::none_of(d.edges().begin(), d.edges().end(),
                      [](const TypeDEdge& e) { return e.label == ReebLabel::One; });
}

// ---------------------------------------------------------------------------
// Type A structures (chain-graph form, plus an optional explicit table)
// ---------------------------------------------------------------------------

struct TypeAGenerator {
  std::string name;
  Idem idem;
};

struct TypeAEdge {
  int from;
  std::string digits;  // nonempty string over {1,2,3}
  int to;
  auto operator<=>(const TypeAEdge&) const = default;
};

inline Idem digit_left_idem(char c) {
  switch (c) {
    case '1': case '3': return Idem::I1;
    case '2': return Idem::I2;
  }
  throw SchemaError(std::string("invalid index digit '") + c + "'");
}

inline Idem digit_right_idem(char c) {
  switch (c) {
    case '1': case '3': return Idem::I2;
    case '2': return Idem::I1;
  }
  throw SchemaError(std::string("invalid index digit '") + c + "'");
}

// Multiplications are read off lazily from directed paths: the digit string
// of a path is decomposed into increasing runs and matched against the
// query. The optional table stores explicit operations (gen, inputs) -> gens
// for structures given directly rather than by a chain graph.
class TypeAStructure {
 public:
  using TableKey = std::pair<int, std::vector<ReebLabel>>;

  int add_generator(const std::string& name, Idem idem) {
    if (index_.count(name))
      throw SchemaError("type A structure: duplicate generator name '" + name + "'");
    gens_.push_back({name, idem});
    index_[name] = static_cast<int>(gens_.size()) - 1;
    return static_cast<int>(gens_.size()) - 1;
  }

  void add_edge(int from, const std::string& digits, int to) {
    check_index(from);
    check_index(to);
    if (digits.empty()) throw SchemaError("type A edge with empty index string");
    for (std::size_t i = 0; i + 1 < digits.size(); ++i)
      if (digit_right_idem(digits[i]) != digit_left_idem(digits[i + 1]))
        throw SchemaError("type A edge label '" + digits + "' is not a quiver path");
    if (gens_[from].idem != digit_left_idem(digits.front()) ||
        gens_[to].idem != digit_right_idem(digits.back()))
      throw SchemaError("type A edge " + gens_[from].name + " -" + digits + "-> " +
                        gens_[to].name + " violates idempotent compatibility");
    TypeAEdge e{from, digits, to};
    auto it = edges_.find(e);
    if (it == edges_.end())
      edges_.insert(e);
    else
      edges_.erase(it);
  }
  void add_edge(const std::string& from, const std::string& digits, const std::string& to) {
    add_edge(index_of(from), digits, index_of(to));
  }

  // Explicit operation m_{k+1}(gen, inputs...) = output (xor semantics).
  void add_operation(int gen, std::vector<ReebLabel> inputs, int output) {
    check_index(gen);
    check_index(output);
    for (ReebLabel l : inputs)
      if (l == ReebLabel::One)
        throw SchemaError("explicit type A operations may not take the identity label");
    auto& outs = table_[{gen, std::move(inputs)}];
    auto it = outs.find(output);
    if (it == outs.end())
      outs.insert(output);
    else
      outs.erase(it);
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw SchemaError("type A structure: unknown generator '" + name + "'");
    return it->second;
  }
  bool has_generator(const std::string& name) const { return index_.count(name) > 0; }

  const std::vector<TypeAGenerator>& generators() const { return gens_; }
  const std::set<TypeAEdge>& edges() const { return edges_; }
  const std::map<TableKey, std::set<int>>& table() const { return table_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::string& name_of(int i) const { return gens_[i].name; }
  Idem idem_of(int i) const { return gens_[i].idem; }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size()) throw SchemaError("type A structure: generator index out of range");
  }
  std::vector<TypeAGenerator> gens_;
  std::set<TypeAEdge> edges_;
  std::map<TableKey, std::set<int>> table_;
  std::unordered_map<std::string, int> index_;
};

inline bool is_bounded_type_a(const TypeAStructure& a, std::vector<int>* cycle_out = nullptr) {
  return !detail::digraph_has_cycle(
      a.size(), a.edges(), [](const TypeAEdge& e) { return e.from; },
      [](const TypeAEdge& e) { return e.to; }, cycle_out);
}

// Greedy left-to-right decomposition into maximal increasing runs. The
// decomposition into increasing runs with last(I_j) > first(I_{j+1}) is
// unique when it exists, and it is this one; strings with equal adjacent
// digits admit none (they cannot occur along valid chain-graph paths).
inline std::vector<std::string> increasing_runs(const std::string& digits) {
  std::vector<std::string> runs;
  for (char c : digits) {
    if (runs.empty() || runs.back().back() >= c)
      runs.emplace_back(1, c);
    else
      runs.back() += c;
  }
  return runs;
}

namespace detail {

inline void toggle(std::set<int>& s, int v) {
  auto it = s.find(v);
  if (it == s.end())
    s.insert(v);
  else
    s.erase(it);
}

// Endpoints (mod 2) of directed paths from x spelling exactly `target`.
inline void paths_spelling(const TypeAStructure& a, int x, const std::string& target,
                           std::set<int>& acc) {
  std::vector<std::vector<const TypeAEdge*>> out(a.size());
  for (const auto& e : a.edges()) out[e.from].push_back(&e);
  // DFS with explicit stack of (vertex, consumed length).
  std::vector<std::pair<int, std::size_t>> stack{{x, 0}};
  while (!stack.empty()) {
    auto [v, used] = stack.back();
    stack.pop_back();
    if (used == target.size()) {
      toggle(acc, v);
      continue;
    }
    for (const TypeAEdge* e : out[v]) {
      const std::string& d = e->digits;
      if (used + d.size() > target.size()) continue;
      if (target.compare(used, d.size(), d) != 0) continue;
      stack.emplace_back(e->to, used + d.size());
    }
  }
}

}  // namespace detail

// m_{k}(x, seq...) as a Z2-sum of generators, k = |seq| + 1. Handles the
// unital rules: m_2(x, 1) = x, and any longer sequence containing the
// identity vanishes. The empty sequence queries m_1 (table entries only).
inline std::set<int> eval_mk(const TypeAStructure& a, int x, const std::vector<ReebLabel>& seq) {
  std::set<int> acc;
  const bool has_one =
      std::any_of(seq.begin(), seq.end(), [](ReebLabel l) { return l == ReebLabel::One; });
  if (has_one) {
    if (seq.size() == 1) acc.insert(x);  // m_2(x, 1) = x
    return acc;
  }
  std::string target;
  std::vector<std::string> query_runs;
  for (ReebLabel l : seq) {
    target += label_digits(l);
    query_runs.emplace_back(label_digits(l));
  }
  if (!seq.empty() && increasing_runs(target) == query_runs)
    detail::paths_spelling(a, x, target, acc);
  auto it = a.table().find({x, seq});
  if (it != a.table().end())
    for (int y : it->second) detail::toggle(acc, y);
  return acc;
}

inline std::set<int> eval_mk(const TypeAStructure& a, const std::string& gen,
                             const std::vector<ReebLabel>& seq) {
  return eval_mk(a, a.index_of(gen), seq);
}

// Total digit length of the longest directed path (explicit table arities
// included); bounds the operation arity of a bounded structure. Rejects
// cyclic chain graphs.
inline int max_operation_inputs(const TypeAStructure& a) {
  if (!is_bounded_type_a(a))
    throw InvariantError("max_operation_inputs: chain graph has a directed cycle");
  std::vector<std::vector<const TypeAEdge*>> out(a.size());
  for (const auto& e : a.edges()) out[e.from].push_back(&e);
  std::vector<int> longest(a.size(), -1);
  // DAG longest path by digit count, memoized.
  auto dfs = [&](auto&& self, int v) -> int {
    if (longest[v] >= 0) return longest[v];
    int best = 0;
    for (const TypeAEdge* e : out[v])
      best = std::max(best, static_cast<int>(e->digits.size()) + self(self, e->to));
    return longest[v] = best;
  };
  int best = 0;
  for (int v = 0; v < a.size(); ++v) best = std::max(best, dfs(dfs, v));
  for (const auto& [key, outs] : a.table())
    if (!outs.empty()) best = std::max(best, static_cast<int>(key.second.size()));
  return best;
}

// A-infinity relation on all generators and all Reeb-basis input tuples of
// total index length <= max_digits. Returns the offending tuples.
inline ValidationReport validate_a_infinity(const TypeAStructure& a, int max_digits) {
  ValidationReport report;
  std::vector<std::vector<ReebLabel>> tuples;
  std::vector<ReebLabel> current;
  auto extend = [&](auto&& self, int budget) -> void {
    if (!current.empty()) tuples.push_back(current);
    for (ReebLabel l : kReebLabels) {
      const int cost = static_cast<int>(label_digits(l).size());
      if (cost > budget) continue;
      current.push_back(l);
      self(self, budget - cost);
      current.pop_back();
    }
  };
  extend(extend, max_digits);

  for (int x = 0; x < a.size(); ++x) {
    for (const auto& tuple : tuples) {
      const int k = static_cast<int>(tuple.size()) + 1;
      std::set<int> sum;
      // sum_j m_{k-j+1}(m_j(x, a_1..a_{j-1}), a_j..a_{k-1})
      for (int j = 1; j <= k; ++j) {
        const std::vector<ReebLabel> inner(tuple.begin(), tuple.begin() + (j - 1));
        const std::vector<ReebLabel> outer(tuple.begin() + (j - 1), tuple.end());
        for (int y : eval_mk(a, x, inner))
          for (int z : eval_mk(a, y, outer)) detail::toggle(sum, z);
      }
      // sum_j m_{k-1}(x, ..., a_j a_{j+1}, ...)
      for (int j = 0; j + 1 < static_cast<int>(tuple.size()); ++j) {
        const AlgebraElement prod = label_algebra(tuple[j]) * label_algebra(tuple[j + 1]);
        if (prod.is_zero()) continue;
        std::vector<ReebLabel> merged(tuple.begin(), tuple.begin() + j);
        merged.push_back(*label_from_basis(*prod.single_basis_index()));
        merged.insert(merged.end(), tuple.begin() + j + 2, tuple.end());
        for (int z : eval_mk(a, x, merged)) detail::toggle(sum, z);
      }
      if (!sum.empty()) {
        std::string t;
        for (ReebLabel l : tuple) t += std::string(label_name(l)) + " ";
        report.fail("A-infinity relation fails at " + a.name_of(x) + " with inputs " + t);
        if (report.violations.size() > 20) return report;
      }
    }
  }
  return report;
}

// Dualization from a reduced type D structure to a type A structure: keep
// the generators, rewrite each edge label by swapping indices 1 and 3.
inline TypeAStructure dualize_d_to_a(const TypeDStructure& d) {
  if (!is_reduced(d))
    throw InvariantError("dualize_d_to_a: input must be reduced (no identity-labeled edges)");
  TypeAStructure a;
  for (const auto& g : d.generators()) a.add_generator(g.name, g.idem);
  for (const auto& e : d.edges()) {
    std::string digits(label_digits(e.label));
    for (char& c : digits) {
      if (c == '1') c = '3';
      else if (c == '3') c = '1';
    }
    a.add_edge(e.from, digits, e.to);
  }
  return a;
}

// Undirected connected components of the chain graph (table operations
// also connect their participants).
inline std::vector<TypeAStructure> connected_components(const TypeAStructure& a) {
  std::vector<int> comp(a.size(), -1);
  std::vector<std::vector<int>> adj(a.size());
  for (const auto& e : a.edges()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  for (const auto& [key, outs] : a.table())
    for (int y : outs) {
      adj[key.first].push_back(y);
      adj[y].push_back(key.first);
    }
  int ncomp = 0;
  for (int s = 0; s < a.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<TypeAStructure> parts(ncomp);
  for (int i = 0; i < a.size(); ++i)
    parts[comp[i]].add_generator(a.name_of(i), a.idem_of(i));
  for (const auto& e : a.edges())
    parts[comp[e.from]].add_edge(a.name_of(e.from), e.digits, a.name_of(e.to));
  for (const auto& [key, outs] : a.table())
    for (int y : outs) {
      std::vector<ReebLabel> inputs = key.second;
      auto& part = parts[comp[key.first]];
      part.add_operation(part.index_of(a.name_of(key.first)), std::move(inputs),
                         part.index_of(a.name_of(y)));
    }
  return parts;
}

// ---------------------------------------------------------------------------
// Type DA structures
// ---------------------------------------------------------------------------

struct TypeDAGenerator {
  std::string name;
  Idem left;
  Idem right;
};

class TypeDAStructure {
 public:
  using ActionKey = std::pair<int, std::vector<ReebLabel>>;
  using ActionValue = std::pair<ReebLabel, int>;  // (output label, output gen)

  int add_generator(const std::string& name, Idem left, Idem right) {
    if (index_.count(name))
      throw SchemaError("type DA structure: duplicate generator name '" + name + "'");
    gens_.push_back({name, left, right});
    index_[name] = static_cast<int>(gens_.size()) - 1;
    return static_cast<int>(gens_.size()) - 1;
  }

  void add_action(int gen, std::vector<ReebLabel> inputs, ReebLabel out_label, int out_gen) {
    for (ReebLabel l : inputs)
      if (l == ReebLabel::One)
        throw SchemaError("type DA actions are stored on Reeb inputs only");
    auto& vals = actions_[{gen, std::move(inputs)}];
    ActionValue v{out_label, out_gen};
    auto it = vals.find(v);
    if (it == vals.end())
      vals.insert(v);
    else
      vals.erase(it);
  }
  void add_action(const std::string& gen, std::vector<ReebLabel> inputs, ReebLabel out_label,
                  const std::string& out_gen) {
    add_action(index_of(gen), std::move(inputs), out_label, index_of(out_gen));
  }

  // Action lookup with the unital rules applied: a single identity input
  // returns (1, gen); longer sequences containing the identity vanish.
  std::set<ActionValue> query(int gen, const std::vector<ReebLabel>& inputs) const {
    const bool has_one = std::any_of(inputs.begin(), inputs.end(),
                                     [](ReebLabel l) { return l == ReebLabel::One; });
    if (has_one) {
      if (inputs.size() == 1) return {{ReebLabel::One, gen}};
      return {};
    }
    auto it = actions_.find({gen, inputs});
    if (it == actions_.end()) return {};
    return it->second;
  }

  ValidationReport validate() const {
    ValidationReport report;
    for (const auto& [key, vals] : actions_) {
      const auto& s = gens_[key.first];
      Idem right = s.right;
      bool chain_ok = true;
      for (ReebLabel l : key.second) {
        if (*label_left_idem(l) != right) chain_ok = false;
        right = *label_right_idem(l);
      }
      for (const auto& [out_label, out_gen] : vals) {
        const auto& t = gens_[out_gen];
        bool ok = chain_ok && right == t.right;
        if (out_label == ReebLabel::One)
          ok = ok && s.left == t.left;
        else
          ok = ok && *label_left_idem(out_label) == s.left &&
               *label_right_idem(out_label) == t.left;
        if (!ok)
          report.fail("action on " + s.name + " -> " + t.name +
                      " violates idempotent compatibility");
      }
    }
    return report;
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw SchemaError("type DA structure: unknown generator '" + name + "'");
    return it->second;
  }
  const std::vector<TypeDAGenerator>& generators() const { return gens_; }
  const std::map<ActionKey, std::set<ActionValue>>& actions() const { return actions_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::string& name_of(int i) const { return gens_[i].name; }

 private:
  std::vector<TypeDAGenerator> gens_;
  std::map<ActionKey, std::set<ActionValue>> actions_;
  std::unordered_map<std::string, int> index_;
};

// The bimodule of the Dehn twist along the second handle curve, with
// generators p, q, r and the nine nontrivial actions. The input-free action
// on r is stored at arity one.
inline TypeDAStructure cfda_dehn_twist() {
  TypeDAStructure b;
  b.add_generator("p", Idem::I1, Idem::I1);
  b.add_generator("q", Idem::I2, Idem::I2);
  b.add_generator("r", Idem::I2, Idem::I1);
  using L = ReebLabel;
  b.add_action("p", {L::R1}, L::R1, "q");
  b.add_action("p", {L::R12}, L::R123, "r");
  b.add_action("p", {L::R123}, L::R123, "q");
  b.add_action("p", {L::R3, L::R2}, L::R3, "r");
  b.add_action("p", {L::R3, L::R23}, L::R3, "q");
  b.add_action("q", {L::R2}, L::R23, "r");
  b.add_action("q", {L::R23}, L::R23, "q");
  b.add_action("r", {}, L::R2, "p");
  b.add_action("r", {L::R3}, L::One, "q");
  const auto report = b.validate();
  if (!report.ok) throw InvariantError("cfda_dehn_twist: " + report.to_string());
  return b;
}

}  // namespace hfo
