#pragma once

// Edge reduction (the cancellation lemma) on type D structures, full
// reduction, and isomorphism testing of reduced structures.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfo/algebra.hpp"
#include "hfo/errors.hpp"
#include "hfo/structures.hpp"

namespace hfo {

// Cancels an identity-labeled edge w -> u: both endpoints are removed and
// every in-edge z ->a u composes with every out-edge w ->b t into z ->ab t
// (xor-toggled). The result is homotopy equivalent to the input.
inline TypeDStructure cancel_edge(const TypeDStructure& d, const TypeDEdge& e) {
  if (e.label != ReebLabel::One)
    throw InvariantError("cancel_edge: edge label must be the identity");
  if (e.from == e.to) throw InvariantError("cancel_edge: cannot cancel a self-loop");
  if (!d.edges().count(e)) throw InvariantError("cancel_edge: edge not present");

  const int w = e.from, u = e.to;
  TypeDStructure out;
  std::vector<int> remap(d.size(), -1);
  for (int i = 0; i < d.size(); ++i)
    if (i != w && i != u) remap[i] = out.add_generator(d.name_of(i), d.idem_of(i));

  for (const auto& edge : d.edges()) {
    if (edge.from == w || edge.from == u || edge.to == w || edge.to == u) continue;
    out.toggle_edge(remap[edge.from], edge.label, remap[edge.to]);
  }
  for (const auto& in : d.edges()) {
    if (in.to != u || in.from == w || in.from == u) continue;
    for (const auto& outE : d.edges()) {
      if (outE.from != w || outE.to == w || outE.to == u) continue;
      if (in == e || outE == e) continue;
      if (const auto label = compose_labels(in.label, outE.label))
        out.toggle_edge(remap[in.from], *label, remap[outE.to]);
    }
  }
  require_valid(out, "cancel_edge output");
  return out;
}

inline TypeDStructure cancel_edge(const TypeDStructure& d, const std::string& from,
                                  const std::string& to) {
  return cancel_edge(d, TypeDEdge{d.index_of(from), ReebLabel::One, d.index_of(to)});
}

// Iterates cancel_edge until no identity-labeled edges remain.
inline TypeDStructure reduce(const TypeDStructure& d) {
  TypeDStructure current = d;
  for (;;) {
    std::optional<TypeDEdge> pick;
    bool saw_identity_loop = false;
    for (const auto& e : current.edges()) {
      if (e.label != ReebLabel::One) continue;
      if (e.from == e.to) {
        saw_identity_loop = true;
        continue;
      }
      pick = e;
      break;
    }
    if (!pick) {
      if (saw_identity_loop)
        throw InvariantError("reduce: identity-labeled self-loop cannot be cancelled");
      return current;
    }
    current = cancel_edge(current, *pick);
  }
}

namespace detail {

struct GenSignature {
  Idem idem;
  std::vector<int> out_by_label;  // counts per label value
  std::vector<int> in_by_label;
  auto operator<=>(const GenSignature&) const = default;
};

inline std::vector<GenSignature> signatures(const TypeDStructure& d) {
  std::vector<GenSignature> sig(d.size());
  for (int i = 0; i < d.size(); ++i) {
    sig[i].idem = d.idem_of(i);
    sig[i].out_by_label.assign(7, 0);
    sig[i].in_by_label.assign(7, 0);
  }
  for (const auto& e : d.edges()) {
    sig[e.from].out_by_label[static_cast<int>(e.label)]++;
    sig[e.to].in_by_label[static_cast<int>(e.label)]++;
  }
  return sig;
}

}  // namespace detail

// Searches for a bijection of generators preserving idempotents and the
// labeled edge set; backtracking with degree/idempotent pruning. Returns
// the mapping d1 index -> d2 index, or nullopt.
inline std::optional<std::vector<int>> isomorphic(const TypeDStructure& d1,
                                                  const TypeDStructure& d2) {
  if (!is_reduced(d1) || !is_reduced(d2))
    throw InvariantError("isomorphic: inputs must be reduced");
  if (d1.size() != d2.size() || d1.edges().size() != d2.edges().size()) return std::nullopt;

  const auto sig1 = detail::signatures(d1);
  const auto sig2 = detail::signatures(d2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  const int n = d1.size();
  std::vector<int> map(n, -1), used(n, 0);

  // Adjacency for consistency checks.
  std::vector<std::vector<std::pair<int, ReebLabel>>> out1(n), in1(n);
  for (const auto& e : d1.edges()) {
    out1[e.from].emplace_back(e.to, e.label);
    in1[e.to].emplace_back(e.from, e.label);
  }

  auto consistent = [&](int v, int w) -> bool {
    if (sig1[v] != sig2[w]) return false;
    for (const auto& [t, label] : out1[v])
      if (map[t] >= 0 && !d2.edges().count({w, label, map[t]})) return false;
    for (const auto& [s, label] : in1[v])
      if (map[s] >= 0 && !d2.edges().count({map[s], label, w})) return false;
    return true;
  };

  auto search = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace hfo
