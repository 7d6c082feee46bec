#pragma once

// F2 chain complexes, homology ranks by Gaussian elimination, relative Z2
// gradings, Euler characteristics, and the combinatorial sign functions of
// bordered partial permutations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hfo/errors.hpp"

namespace hfo {

// ---------------------------------------------------------------------------
// Dense F2 vectors / elimination
// ---------------------------------------------------------------------------

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int lowest_set() const {
    for (std::size_t b = 0; b < w_.size(); ++b)
      if (w_[b]) {
        std::uint64_t w = w_[b];
        int off = 0;
        while (!(w & 1u)) {
          w >>= 1;
          ++off;
        }
        return static_cast<int>(b * 64) + off;
      }
    return -1;
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Incremental row reduction: keeps an echelon basis of the span.
class F2Span {
 public:
  explicit F2Span(std::size_t dim) : dim_(dim) {}

  // Reduces v against the basis; returns the residue.
  BitVec reduce(BitVec v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v.test(static_cast<std::size_t>(pivot))) v ^= row;
    }
    return v;
  }
  // Adds v to the span; returns true when the rank grew.
  bool add(BitVec v) {
    v = reduce(std::move(v));
    const int p = v.lowest_set();
    if (p < 0) return false;
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  bool contains(const BitVec& v) const { return !reduce(v).any(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::pair<int, BitVec>> rows_;
};

// Kernel basis of the linear map sending domain basis vector i to cols[i].
inline std::vector<BitVec> kernel_basis(const std::vector<BitVec>& cols) {
  const std::size_t n = cols.size();
  std::vector<std::pair<int, std::pair<BitVec, BitVec>>> pivots;  // (pivot, (img, tag))
  std::vector<BitVec> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    BitVec img = cols[i];
    BitVec tag(n);
    tag.set(i);
    for (auto& [p, ic] : pivots) {
      if (img.test(static_cast<std::size_t>(p))) {
        img ^= ic.first;
        tag ^= ic.second;
      }
    }
    const int p = img.lowest_set();
    if (p < 0)
      kernel.push_back(std::move(tag));
    else
      pivots.emplace_back(p, std::make_pair(std::move(img), std::move(tag)));
  }
  return kernel;
}

// ---------------------------------------------------------------------------
// Chain complexes over F2
// ---------------------------------------------------------------------------

struct ComplexGenerator {
  std::string name;
  std::optional<int> grading;  // Z2 grading bit
};

class ChainComplexF2 {
 public:
  int add_generator(const std::string& name, std::optional<int> grading = std::nullopt) {
    if (index_.count(name))
      throw SchemaError("chain complex: duplicate generator name '" + name + "'");
    if (grading && *grading != 0 && *grading != 1)
      throw SchemaError("chain complex: grading bits must be 0 or 1");
    gens_.push_back({name, grading});
    index_[name] = static_cast<int>(gens_.size()) - 1;
    return static_cast<int>(gens_.size()) - 1;
  }

  void toggle_boundary(int from, int to) {
    check_index(from);
    check_index(to);
    const std::pair<int, int> e{from, to};
    auto it = boundary_.find(e);
    if (it == boundary_.end())
      boundary_.insert(e);
    else
      boundary_.erase(it);
  }
  void toggle_boundary(const std::string& from, const std::string& to) {
    toggle_boundary(index_of(from), index_of(to));
  }

  void set_grading(int i, int bit) {
    check_index(i);
    if (bit != 0 && bit != 1) throw SchemaError("grading bits must be 0 or 1");
    gens_[i].grading = bit;
  }
  void clear_gradings() {
    for (auto& g : gens_) g.grading.reset();
  }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw SchemaError("chain complex: unknown generator '" + name + "'");
    return it->second;
  }
  const std::vector<ComplexGenerator>& generators() const { return gens_; }
  const std::set<std::pair<int, int>>& boundary() const { return boundary_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::string& name_of(int i) const { return gens_[i].name; }

  bool d_squared_is_zero() const {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& [a, b] : boundary_)
      for (const auto& [c, d] : boundary_)
        if (b == c) counts[{a, d}] ^= 1;
    for (const auto& [_, parity] : counts)
      if (parity) return false;
    return true;
  }

  bool fully_graded() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const ComplexGenerator& g) { return g.grading.has_value(); });
  }
  // Every boundary entry connects opposite grading bits.
  bool differential_is_odd() const {
    if (!fully_graded()) return false;
    for (const auto& [a, b] : boundary_)
      if (*gens_[a].grading == *gens_[b].grading) return false;
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size()) throw SchemaError("chain complex: generator index out of range");
  }
  std::vector<ComplexGenerator> gens_;
  std::set<std::pair<int, int>> boundary_;
  std::map<std::string, int> index_;
};

inline int boundary_rank(const ChainComplexF2& c) {
  const std::size_t n = static_cast<std::size_t>(c.size());
  std::vector<BitVec> cols(n, BitVec(n));
  for (const auto& [from, to] : c.boundary()) cols[from].flip(static_cast<std::size_t>(to));
  F2Span span(n);
  for (auto& col : cols) span.add(std::move(col));
  return span.rank();
}

inline int homology_rank(const ChainComplexF2& c) {
  if (!c.d_squared_is_zero()) throw InvariantError("homology_rank: d^2 != 0");
  return c.size() - 2 * boundary_rank(c);
}

inline int kernel_rank(const ChainComplexF2& c) {
  if (!c.d_squared_is_zero()) throw InvariantError("kernel_rank: d^2 != 0");
  return c.size() - boundary_rank(c);
}

inline int euler_characteristic(const ChainComplexF2& c) {
  if (!c.fully_graded())
    throw InvariantError("euler_characteristic: gradings missing");
  if (!c.differential_is_odd())
    throw InvariantError("euler_characteristic: differential is not odd");
  int chi = 0;
  for (const auto& g : c.generators()) chi += (*g.grading == 0) ? 1 : -1;
  return chi;
}

// Ranks of homology in gradings 0 and 1; requires an odd differential.
inline std::pair<int, int> graded_homology_ranks(const ChainComplexF2& c) {
  if (!c.d_squared_is_zero()) throw InvariantError("graded_homology_ranks: d^2 != 0");
  if (!c.differential_is_odd())
    throw InvariantError("graded_homology_ranks: differential is not odd");
  const std::size_t n = static_cast<std::size_t>(c.size());
  int dim0 = 0, dim1 = 0;
  for (const auto& g : c.generators()) (*g.grading == 0 ? dim0 : dim1)++;
  // rank of d restricted to sources of each grading
  F2Span from0(n), from1(n);
  std::vector<BitVec> cols(n, BitVec(n));
  for (const auto& [from, to] : c.boundary()) cols[from].flip(static_cast<std::size_t>(to));
  for (int i = 0; i < c.size(); ++i) {
    if (!cols[i].any()) continue;
    (*c.generators()[i].grading == 0 ? from0 : from1).add(std::move(cols[i]));
  }
  const int h0 = dim0 - from0.rank() - from1.rank();
  const int h1 = dim1 - from1.rank() - from0.rank();
  return {h0, h1};
}

// Searches for a grading making the differential odd with |chi| equal to
// the target: 2-color each component of the differential graph, then pick
// component polarities by subset sum over the signed component weights.
inline std::optional<std::vector<int>> solve_grading(const ChainComplexF2& c, int target_abs_chi) {
  if (!c.d_squared_is_zero()) throw InvariantError("solve_grading: d^2 != 0");
  if (target_abs_chi < 0) target_abs_chi = -target_abs_chi;
  const int n = c.size();
  if (n == 0) return target_abs_chi == 0 ? std::make_optional(std::vector<int>{}) : std::nullopt;

  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : c.boundary()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(n, -1), comp(n, -1);
  std::vector<int> weights;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(weights.size());
    int w = 0;
    std::vector<int> stack{s};
    comp[s] = id;
    color[s] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      w += color[v] == 0 ? 1 : -1;
      for (int u : adj[v]) {
        if (comp[u] < 0) {
          comp[u] = id;
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;  // odd cycle: no odd grading exists
        }
      }
    }
    weights.push_back(w);
  }

  // Subset sum over signs: reach +target (reachable sums are symmetric).
  int total = 0;
  for (int w : weights) total += std::abs(w);
  if (target_abs_chi > total) return std::nullopt;
  const int m = static_cast<int>(weights.size());
  const int width = 2 * total + 1;
  std::vector<std::vector<std::int8_t>> reach(m + 1, std::vector<std::int8_t>(width, 0));
  reach[0][total] = 1;  // offset encoding: sum s stored at s + total
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < width; ++s) {
      if (!reach[i][s]) continue;
      for (int sign : {+1, -1}) {
        const int t = s + sign * weights[i];
        if (t >= 0 && t < width && !reach[i + 1][t]) reach[i + 1][t] = static_cast<std::int8_t>(sign);
      }
    }
  if (!reach[m][total + target_abs_chi]) return std::nullopt;
  std::vector<int> sign(m, +1);
  int s = total + target_abs_chi;
  for (int i = m; i > 0; --i) {
    const int sg = reach[i][s];
    sign[i - 1] = sg;
    s -= sg * weights[i - 1];
  }
  std::vector<int> grading(n);
  for (int v = 0; v < n; ++v)
    grading[v] = sign[comp[v]] > 0 ? color[v] : 1 - color[v];
  return grading;
}

// ---------------------------------------------------------------------------
// Bordered partial permutations and their signs
// ---------------------------------------------------------------------------

// An injection [g] -> [g+1] whose image contains the complement of the
// 2-element set B; type A when B = {g, g+1}, type D when B = {1, 2}.
struct BorderedPartialPermutation {
  int g = 0;
  std::vector<int> sigma;  // sigma[i-1] = image of i, values in [1, g+1]
  std::pair<int, int> B{0, 0};

  void validate() const {
    if (g < 1 || static_cast<int>(sigma.size()) != g)
      throw SchemaError("bordered partial permutation: sigma must have g entries");
    std::set<int> image;
    for (int v : sigma) {
      if (v < 1 || v > g + 1) throw SchemaError("bordered partial permutation: value out of range");
      if (!image.insert(v).second) throw SchemaError("bordered partial permutation: not injective");
    }
    if (B.first == B.second || B.first < 1 || B.second < 1 || B.first > g + 1 || B.second > g + 1)
      throw SchemaError("bordered partial permutation: B must be a 2-element subset of [g+1]");
    for (int j = 1; j <= g + 1; ++j)
      if (j != B.first && j != B.second && !image.count(j))
        throw SchemaError("bordered partial permutation: complement of B must lie in the image");
  }

  bool is_type_a() const {
    return std::min(B.first, B.second) == g && std::max(B.first, B.second) == g + 1;
  }
  bool is_type_d() const {
    return std::min(B.first, B.second) == 1 && std::max(B.first, B.second) == 2;
  }
};

inline int inv(const BorderedPartialPermutation& s) {
  int count = 0;
  for (int i = 0; i < s.g; ++i)
    for (int j = i + 1; j < s.g; ++j)
      if (s.sigma[i] > s.sigma[j]) ++count;
  return count;
}

inline int sgn_a(const BorderedPartialPermutation& s) {
  s.validate();
  if (!s.is_type_a()) throw SchemaError("sgn_a: B must be {g, g+1}");
  return inv(s) % 2;
}

inline int sgn_d(const BorderedPartialPermutation& s) {
  s.validate();
  if (!s.is_type_d()) throw SchemaError("sgn_d: B must be {1, 2}");
  std::set<int> image(s.sigma.begin(), s.sigma.end());
  int correction = 0;
  for (int i : image)
    for (int j = i + 1; j <= s.g + 1; ++j)
      if (!image.count(j)) ++correction;
  return (inv(s) + correction) % 2;
}

inline int grading_from_signs(int sgn, const std::vector<int>& orientation_bits) {
  int total = sgn;
  for (int b : orientation_bits) total += b;
  return ((total % 2) + 2) % 2;
}

}  // namespace hfo
