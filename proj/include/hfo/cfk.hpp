#pragma once

// Knot Floer input data, the tau / nu / nu' / epsilon invariants computed
// from region complexes of the full U-localized complex, and the
// construction of the framed knot exterior's type A structure from a
// simultaneously vertically and horizontally simplified basis.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfo/algebra.hpp"
#include "hfo/errors.hpp"
#include "hfo/homology.hpp"
#include "hfo/structures.hpp"

namespace hfo {

struct CFKGenerator {
  std::string name;
  int alexander = 0;
  std::optional<int> maslov_mod2;
};

struct CFKArrow {
  std::string from;
  std::string to;
  int length = 1;
};

// d(from) contains U^{u_power} * to.
struct CFKInfinityArrow {
  std::string from;
  std::string to;
  int u_power = 0;
};

struct CFKMinusData {
  std::vector<CFKGenerator> generators;
  std::vector<CFKArrow> vertical_arrows;
  std::vector<CFKArrow> horizontal_arrows;
  std::optional<int> tau;
  std::optional<int> epsilon;
  std::string w0;
  std::string w0prime;
  // Optional full complex; when present, tau/epsilon are computed from it
  // and cross-checked against the stored values.
  std::optional<std::vector<CFKInfinityArrow>> infinity_differentials;
};

// The U-localized complex restricted to a finite window of U-powers; the
// window replicates under U-shifts, so arrows are stored on the basis.
struct CFKInfinityWindow {
  std::vector<CFKGenerator> generators;
  std::vector<CFKInfinityArrow> arrows;
};

namespace detail {

inline int cfk_index(const std::vector<CFKGenerator>& gens, const std::string& name,
                     const std::string& what) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  throw SchemaError(what + ": unknown generator '" + name + "'");
}

}  // namespace detail

inline void validate_window(const CFKInfinityWindow& w) {
  std::set<std::string> names;
  for (const auto& g : w.generators)
    if (!names.insert(g.name).second)
      throw SchemaError("cfk window: duplicate generator '" + g.name + "'");
  for (const auto& a : w.arrows) {
    const int src = detail::cfk_index(w.generators, a.from, "cfk window");
    const int dst = detail::cfk_index(w.generators, a.to, "cfk window");
    if (a.u_power < 0) throw SchemaError("cfk window: negative U power");
    // Both filtrations weakly decrease along the differential.
    if (w.generators[dst].alexander - a.u_power > w.generators[src].alexander)
      throw SchemaError("cfk window: arrow " + a.from + " -> " + a.to +
                        " increases the Alexander filtration");
  }
  // d^2 = 0 over Z2[U, U^-1].
  std::map<std::pair<std::pair<int, int>, int>, int> squares;  // ((src,dst), u) -> parity
  for (const auto& a : w.arrows)
    for (const auto& b : w.arrows) {
      if (a.to != b.from) continue;
      const int src = detail::cfk_index(w.generators, a.from, "cfk window");
      const int dst = detail::cfk_index(w.generators, b.to, "cfk window");
      squares[{{src, dst}, a.u_power + b.u_power}] ^= 1;
    }
  for (const auto& [key, parity] : squares)
    if (parity)
      throw InvariantError("cfk window: d^2 != 0 at " + w.generators[key.first.first].name +
                           " -> " + w.generators[key.first.second].name);
}

inline void validate_cfk(const CFKMinusData& cfk) {
  if (cfk.generators.empty() || cfk.generators.size() % 2 == 0)
    throw SchemaError("cfk: generator count must be odd (2s+1)");
  std::set<std::string> names;
  for (const auto& g : cfk.generators)
    if (!names.insert(g.name).second)
      throw SchemaError("cfk: duplicate generator '" + g.name + "'");
  if (!names.count(cfk.w0)) throw SchemaError("cfk: w0 names an unknown generator");
  if (!names.count(cfk.w0prime)) throw SchemaError("cfk: w0prime names an unknown generator");

  auto alexander = [&](const std::string& name) {
    return cfk.generators[detail::cfk_index(cfk.generators, name, "cfk")].alexander;
  };
  auto check_arrows = [&](const std::vector<CFKArrow>& arrows, bool vertical) {
    std::set<std::string> sources, targets;
    const std::string kind = vertical ? "vertical" : "horizontal";
    for (const auto& a : arrows) {
      if (!names.count(a.from) || !names.count(a.to))
        throw SchemaError("cfk: " + kind + " arrow names an unknown generator");
      if (a.length < 1) throw SchemaError("cfk: " + kind + " arrow length must be >= 1");
      const int expected =
          vertical ? alexander(a.from) - alexander(a.to) : alexander(a.to) - alexander(a.from);
      if (expected != a.length)
        throw SchemaError("cfk: " + kind + " arrow " + a.from + " -> " + a.to +
                          " has length " + std::to_string(a.length) + ", expected " +
                          std::to_string(expected));
      if (!sources.insert(a.from).second)
        throw SchemaError("cfk: generator '" + a.from + "' sources two " + kind + " arrows");
      if (!targets.insert(a.to).second)
        throw SchemaError("cfk: generator '" + a.to + "' receives two " + kind + " arrows");
    }
    return std::pair{sources, targets};
  };
  const auto [vsrc, vdst] = check_arrows(cfk.vertical_arrows, true);
  const auto [hsrc, hdst] = check_arrows(cfk.horizontal_arrows, false);
  if (vsrc.count(cfk.w0) || vdst.count(cfk.w0))
    throw SchemaError("cfk: w0 must touch no vertical arrow");
  if (hsrc.count(cfk.w0prime) || hdst.count(cfk.w0prime))
    throw SchemaError("cfk: w0prime must touch no horizontal arrow");
  if (!cfk.tau && !cfk.infinity_differentials)
    throw SchemaError("cfk: tau must be given when no full complex is provided");
}

// Reconstructs the full complex from the simplified arrows: a vertical
// arrow contributes d(src) += dst, a horizontal arrow of length l
// contributes d(src) += U^l * dst. Exact for bases without diagonal
// differentials, which is what the simultaneous-simplification schema
// admits. An explicitly supplied window takes precedence.
inline CFKInfinityWindow window_from_cfk(const CFKMinusData& cfk) {
  CFKInfinityWindow w;
  w.generators = cfk.generators;
  if (cfk.infinity_differentials) {
    w.arrows = *cfk.infinity_differentials;
  } else {
    for (const auto& a : cfk.vertical_arrows) w.arrows.push_back({a.from, a.to, 0});
    for (const auto& a : cfk.horizontal_arrows) w.arrows.push_back({a.from, a.to, a.length});
  }
  validate_window(w);
  return w;
}

// The mirror knot's complex: reverse every arrow and negate the Alexander
// gradings (the dual complex); negates tau and epsilon.
inline CFKInfinityWindow mirror_window(const CFKInfinityWindow& w) {
  CFKInfinityWindow m;
  for (const auto& g : w.generators) m.generators.push_back({g.name, -g.alexander, g.maslov_mod2});
  for (const auto& a : w.arrows) m.arrows.push_back({a.to, a.from, a.u_power});
  validate_window(m);
  return m;
}

// ---------------------------------------------------------------------------
// Region complexes on the (I, A) plane
// ---------------------------------------------------------------------------

namespace detail {

// An element U^i g sits at (I, A) = (-i, A(g) - i).
struct RegionElement {
  int gen;
  int u_power;
  auto operator<=>(const RegionElement&) const = default;
};

struct RegionComplex {
  std::vector<RegionElement> elements;
  std::map<RegionElement, int> index;
  std::vector<BitVec> boundary_cols;  // column i = d(element i)
};

// Builds C{S1}/C{S2} for the membership predicate on positions; elements
// are kept when in S1 but not S2, and differentials landing outside are
// dropped.
inline RegionComplex build_region(const CFKInfinityWindow& w,
                                  const std::function<bool(int, int)>& in_region) {
  int min_a = 0, max_a = 0;
  for (const auto& g : w.generators) {
    min_a = std::min(min_a, g.alexander);
    max_a = std::max(max_a, g.alexander);
  }
  const int radius = (max_a - min_a) + 4;
  RegionComplex rc;
  for (int gi = 0; gi < static_cast<int>(w.generators.size()); ++gi)
    for (int i = -3 * radius; i <= 3 * radius; ++i) {
      const int I = -i, A = w.generators[gi].alexander - i;
      if (in_region(I, A)) {
        rc.index[{gi, i}] = static_cast<int>(rc.elements.size());
        rc.elements.push_back({gi, i});
      }
    }
  rc.boundary_cols.assign(rc.elements.size(), BitVec(rc.elements.size()));
  for (std::size_t e = 0; e < rc.elements.size(); ++e) {
    for (const auto& a : w.arrows) {
      if (cfk_index(w.generators, a.from, "region") != rc.elements[e].gen) continue;
      const RegionElement target{cfk_index(w.generators, a.to, "region"),
                                 rc.elements[e].u_power + a.u_power};
      auto it = rc.index.find(target);
      if (it != rc.index.end()) rc.boundary_cols[e].flip(static_cast<std::size_t>(it->second));
    }
  }
  return rc;
}

// True when a chain map (given elementwise) induces a nonzero map on
// homology: some cycle of the source maps outside the image of the target
// differential.
inline bool induces_nonzero(const RegionComplex& src, const RegionComplex& dst,
                            const std::function<std::optional<RegionElement>(const RegionElement&)>&
                                map_element) {
  F2Span image(dst.elements.size());
  for (const auto& col : dst.boundary_cols) image.add(col);
  for (const auto& z : kernel_basis(src.boundary_cols)) {
    BitVec mapped(dst.elements.size());
    for (std::size_t i = 0; i < src.elements.size(); ++i) {
      if (!z.test(i)) continue;
      if (const auto m = map_element(src.elements[i])) {
        auto it = dst.index.find(*m);
        if (it != dst.index.end()) mapped.flip(static_cast<std::size_t>(it->second));
      }
    }
    if (!image.contains(mapped)) return true;
  }
  return false;
}

inline std::pair<int, int> alexander_range(const CFKInfinityWindow& w) {
  int lo = w.generators.front().alexander, hi = lo;
  for (const auto& g : w.generators) {
    lo = std::min(lo, g.alexander);
    hi = std::max(hi, g.alexander);
  }
  return {lo, hi};
}

}  // namespace detail

// tau: the minimum Alexander level s at which the inclusion of the
// vertical subcomplex C{I=0, A<=s} into C{I=0} is nonzero on homology.
inline int compute_tau(const CFKInfinityWindow& w) {
  validate_window(w);
  const auto [lo, hi] = detail::alexander_range(w);
  const auto big = detail::build_region(w, [](int I, int) { return I == 0; });
  {
    F2Span image(big.elements.size());
    for (const auto& col : big.boundary_cols) image.add(col);
    const int big_rank = static_cast<int>(big.elements.size()) - 2 * image.rank();
    if (big_rank != 1)
      throw InvariantError("compute_tau: H(C{I=0}) has rank " + std::to_string(big_rank) +
                           ", expected 1; not a knot complex");
  }
  for (int s = lo; s <= hi; ++s) {
    const auto sub =
        detail::build_region(w, [s](int I, int A) { return I == 0 && A <= s; });
    const bool nonzero = detail::induces_nonzero(
        sub, big, [](const detail::RegionElement& e) { return std::make_optional(e); });
    if (nonzero) return s;
  }
  throw InvariantError("compute_tau: inclusion never nonzero; window too small");
}

// nu: minimum s with the hook complex C{max(I, A-s) <= 0}/C{max < 0}
// mapping nontrivially to C{I=0} (quotient to the vertical part, then
// include).
inline int compute_nu(const CFKInfinityWindow& w) {
  validate_window(w);
  const auto [lo, hi] = detail::alexander_range(w);
  const auto big = detail::build_region(w, [](int I, int) { return I == 0; });
  for (int s = lo - 1; s <= hi + 1; ++s) {
    const auto hook = detail::build_region(w, [s](int I, int A) {
      return std::max(I, A - s) == 0;
    });
    const bool nonzero = detail::induces_nonzero(
        hook, big, [s, &w](const detail::RegionElement& e) -> std::optional<detail::RegionElement> {
          // quotient kills the handle (I < 0 part); keeps I = 0, A <= s
          if (e.u_power != 0) return std::nullopt;
          if (w.generators[e.gen].alexander > s) return std::nullopt;
          return e;
        });
    if (nonzero) return s;
  }
  throw InvariantError("compute_nu: map never nonzero; window too small");
}

// nu': maximum s with C{I=0} mapping nontrivially into the co-hook
// C{min(I, A-s) <= 0}/C{min < 0}.
inline int compute_nu_prime(const CFKInfinityWindow& w) {
  validate_window(w);
  const auto [lo, hi] = detail::alexander_range(w);
  const auto big = detail::build_region(w, [](int I, int) { return I == 0; });
  for (int s = hi + 1; s >= lo - 1; --s) {
    const auto cohook = detail::build_region(w, [s](int I, int A) {
      return std::min(I, A - s) == 0 && I >= 0 && A - s >= 0;
    });
    const bool nonzero = detail::induces_nonzero(
        big, cohook, [s, &w](const detail::RegionElement& e) -> std::optional<detail::RegionElement> {
          // quotient kills I = 0, A < s
          if (w.generators[e.gen].alexander < s) return std::nullopt;
          return e;
        });
    if (nonzero) return s;
  }
  throw InvariantError("compute_nu_prime: map never nonzero; window too small");
}

inline int compute_epsilon(const CFKInfinityWindow& w) {
  const int e = 2 * compute_tau(w) - compute_nu(w) - compute_nu_prime(w);
  if (e < -1 || e > 1)
    throw InvariantError("compute_epsilon: value " + std::to_string(e) +
                         " outside {-1, 0, 1}; invalid knot input");
  return e;
}

// Stored invariants cross-checked against the window when both exist.
inline int resolved_tau(const CFKMinusData& cfk) {
  if (cfk.infinity_differentials || !cfk.tau) {
    const int computed = compute_tau(window_from_cfk(cfk));
    if (cfk.tau && *cfk.tau != computed)
      throw InvariantError("cfk: stored tau " + std::to_string(*cfk.tau) +
                           " disagrees with computed tau " + std::to_string(computed));
    return computed;
  }
  return *cfk.tau;
}

inline int resolved_epsilon(const CFKMinusData& cfk) {
  if (cfk.infinity_differentials) {
    const int computed = compute_epsilon(window_from_cfk(cfk));
    if (cfk.epsilon && *cfk.epsilon != computed)
      throw InvariantError("cfk: stored epsilon " + std::to_string(*cfk.epsilon) +
                           " disagrees with computed epsilon " + std::to_string(computed));
    return computed;
  }
  if (!cfk.epsilon) throw SchemaError("cfk: epsilon unavailable (no stored value or window)");
  return *cfk.epsilon;
}

// ---------------------------------------------------------------------------
// The knot exterior's type A structure
// ---------------------------------------------------------------------------

// Chain graph of the framed knot exterior: the filled vertices are the CFK
// generators; each vertical arrow of length l contributes a kappa chain,
// each horizontal arrow of length l' a lambda chain, and the unstable
// chain from w0 to w0' takes one of three shapes according to the sign of
// 2*tau - r.
inline TypeAStructure build_cfa_knot_exterior(const CFKMinusData& cfk, int framing) {
  validate_cfk(cfk);
  const int tau = resolved_tau(cfk);

  TypeAStructure a;
  for (const auto& g : cfk.generators) a.add_generator(g.name, Idem::I1);

  int arrow_index = 0;
  for (const auto& arrow : cfk.vertical_arrows) {
    ++arrow_index;
    std::vector<std::string> chain;
    for (int e = 1; e <= arrow.length; ++e) {
      chain.push_back("k" + std::to_string(arrow_index) + "_" + std::to_string(e));
      a.add_generator(chain.back(), Idem::I2);
    }
    a.add_edge(arrow.from, "3", chain.front());
    for (int e = 0; e + 1 < arrow.length; ++e) a.add_edge(chain[e + 1], "21", chain[e]);
    a.add_edge(arrow.to, "321", chain.back());
  }
  arrow_index = 0;
  for (const auto& arrow : cfk.horizontal_arrows) {
    ++arrow_index;
    std::vector<std::string> chain;
    for (int f = 1; f <= arrow.length; ++f) {
      chain.push_back("l" + std::to_string(arrow_index) + "_" + std::to_string(f));
      a.add_generator(chain.back(), Idem::I2);
    }
    a.add_edge(arrow.from, "1", chain.front());
    for (int f = 0; f + 1 < arrow.length; ++f) a.add_edge(chain[f], "21", chain[f + 1]);
    a.add_edge(chain.back(), "2", arrow.to);
  }

  const int d = 2 * tau - framing;
  if (d > 0) {
    std::vector<std::string> chain;
    for (int e = 1; e <= d; ++e) {
      chain.push_back("g" + std::to_string(e));
      a.add_generator(chain.back(), Idem::I2);
    }
    a.add_edge(cfk.w0, "3", chain.front());
    for (int e = 0; e + 1 < d; ++e) a.add_edge(chain[e + 1], "21", chain[e]);
    a.add_edge(cfk.w0prime, "1", chain.back());
  } else if (d < 0) {
    std::vector<std::string> chain;
    for (int e = 1; e <= -d; ++e) {
      chain.push_back("g" + std::to_string(e));
      a.add_generator(chain.back(), Idem::I2);
    }
    a.add_edge(cfk.w0, "321", chain.front());
    for (int e = 0; e + 1 < -d; ++e) a.add_edge(chain[e], "21", chain[e + 1]);
    a.add_edge(chain.back(), "2", cfk.w0prime);
  } else {
    a.add_edge(cfk.w0, "32", cfk.w0prime);
  }
  return a;
}

}  // namespace hfo
