#pragma once

// Box tensor products: (type A) x (type D) -> F2 chain complex, and
// (type DA) x (type D) -> type D.

#include <cstdlib>
#include <string>
#include <vector>

#include "hfo/algebra.hpp"
#include "hfo/errors.hpp"
#include "hfo/homology.hpp"
#include "hfo/structures.hpp"

namespace hfo {

// Generator-count cap, overridable through HFO_MAX_GENERATORS.
inline long max_generator_cap() {
  if (const char* env = std::getenv("HFO_MAX_GENERATORS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

inline std::string tensor_name(const std::string& a, const std::string& d) {
  return a + "⊗" + d;
}

// Pairs (a_gen, d_gen) with matching idempotents, A-major order.
inline std::vector<std::pair<int, int>> box_generator_pairs(const TypeAStructure& a,
                                                            const TypeDStructure& d) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < d.size(); ++y)
      if (a.idem_of(x) == d.idem_of(y)) pairs.emplace_back(x, y);
  return pairs;
}

namespace detail {

struct DPath {
  std::vector<ReebLabel> labels;
  int endpoint;
};

// All directed paths out of `start`, including the empty one; max_len < 0
// means unrestricted (valid only on bounded structures).
inline std::vector<DPath> d_paths_from(const TypeDStructure& d, int start, long max_len) {
  std::vector<std::vector<const TypeDEdge*>> out(d.size());
  for (const auto& e : d.edges()) out[e.from].push_back(&e);
  std::vector<DPath> result;
  std::vector<ReebLabel> labels;
  auto dfs = [&](auto&& self, int v) -> void {
    result.push_back({labels, v});
    if (max_len >= 0 && static_cast<long>(labels.size()) >= max_len) return;
    for (const TypeDEdge* e : out[v]) {
      labels.push_back(e->label);
      self(self, e->to);
      labels.pop_back();
    }
  };
  dfs(dfs, start);
  return result;
}

inline std::string cycle_names(const TypeDStructure& d, const std::vector<int>& cycle) {
  std::string s;
  for (int v : cycle) s += d.name_of(v) + " -> ";
  if (!cycle.empty()) s += d.name_of(cycle.front());
  return s;
}

inline std::string cycle_names(const TypeAStructure& a, const std::vector<int>& cycle) {
  std::string s;
  for (int v : cycle) s += a.name_of(v) + " -> ";
  if (!cycle.empty()) s += a.name_of(cycle.front());
  return s;
}

}  // namespace detail

// Box tensor product of a type A structure with a type D structure. At
// least one factor must be bounded; when only A is bounded, path
// enumeration in D is truncated at A's maximal operation arity.
inline ChainComplexF2 box_a_d(const TypeAStructure& a, const TypeDStructure& d) {
  std::vector<int> a_cycle, d_cycle;
  const bool a_bounded = is_bounded_type_a(a, &a_cycle);
  const bool d_bounded = is_bounded(d, &d_cycle);
  if (!a_bounded && !d_bounded)
    throw InvariantError("box_a_d: both factors unbounded; type A cycle: " +
                         detail::cycle_names(a, a_cycle) +
                         "; type D cycle: " + detail::cycle_names(d, d_cycle));

  const auto pairs = box_generator_pairs(a, d);
  if (static_cast<long>(pairs.size()) > max_generator_cap())
    throw InvariantError("box_a_d: generator count exceeds HFO_MAX_GENERATORS");

  ChainComplexF2 c;
  std::map<std::pair<int, int>, int> pair_index;
  for (const auto& [x, y] : pairs)
    pair_index[{x, y}] = c.add_generator(tensor_name(a.name_of(x), d.name_of(y)));

  const long max_len = d_bounded ? -1 : max_operation_inputs(a);
  std::vector<std::vector<detail::DPath>> paths(d.size());
  for (int y = 0; y < d.size(); ++y) paths[y] = detail::d_paths_from(d, y, max_len);

  for (const auto& [x, y] : pairs) {
    const int from = pair_index.at({x, y});
    for (const auto& path : paths[y]) {
      for (int v : eval_mk(a, x, path.labels)) {
        auto it = pair_index.find({v, path.endpoint});
        if (it == pair_index.end())
          throw InvariantError("box_a_d: differential left the idempotent-matched generators");
        c.toggle_boundary(from, it->second);
      }
    }
  }
  if (!c.d_squared_is_zero()) throw InvariantError("box_a_d: output has d^2 != 0");
  return c;
}

// Box tensor product of a type DA structure with a bounded type D
// structure; the result is a type D structure.
inline TypeDStructure box_da_d(const TypeDAStructure& b, const TypeDStructure& d) {
  std::vector<int> d_cycle;
  if (!is_bounded(d, &d_cycle))
    throw InvariantError("box_da_d: type D factor has a cycle: " +
                         detail::cycle_names(d, d_cycle));

  TypeDStructure out;
  std::map<std::pair<int, int>, int> pair_index;
  long count = 0;
  for (int s = 0; s < b.size(); ++s)
    for (int x = 0; x < d.size(); ++x) {
      if (b.generators()[s].right != d.idem_of(x)) continue;
      if (++count > max_generator_cap())
        throw InvariantError("box_da_d: generator count exceeds HFO_MAX_GENERATORS");
      pair_index[{s, x}] =
          out.add_generator(tensor_name(b.name_of(s), d.name_of(x)), b.generators()[s].left);
    }

  for (const auto& [key, from] : pair_index) {
    const auto [s, x] = key;
    for (const auto& path : detail::d_paths_from(d, x, -1)) {
      for (const auto& [label, t] : b.query(s, path.labels)) {
        auto it = pair_index.find({t, path.endpoint});
        if (it == pair_index.end())
          throw InvariantError("box_da_d: action output violates idempotent pairing");
        out.toggle_edge(from, label, it->second);
      }
    }
  }
  require_valid(out, "box_da_d output");
  return out;
}

}  // namespace hfo
