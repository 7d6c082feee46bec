#pragma once

// JSON (de)serialization for every file format: type D and type A
// structures, chain complexes, knot Floer data, and surgery specs.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfo/cfk.hpp"
#include "hfo/errors.hpp"
#include "hfo/homology.hpp"
#include "hfo/orbifold.hpp"
#include "hfo/structures.hpp"

namespace hfo {

using nlohmann::json;

namespace detail {

inline json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError(what + ": invalid JSON");
  return j;
}

inline Idem idem_from_json(const json& j, const std::string& what) {
  if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != 2))
    throw SchemaError(what + ": idempotent must be 1 or 2");
  return j.get<int>() == 1 ? Idem::I1 : Idem::I2;
}

inline ReebLabel label_from_json(const json& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + ": label must be a string");
  const auto l = parse_label(j.get<std::string>());
  if (!l) throw SchemaError(what + ": unknown label '" + j.get<std::string>() + "'");
  return *l;
}

inline const json& field(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(what + ": missing field '" + key + "'");
  return *it;
}

// Accepts "21" as well as "r21" for chain-graph index strings.
inline std::string digits_from_json(const json& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + ": label must be a string");
  std::string s = j.get<std::string>();
  if (!s.empty() && s.front() == 'r') s.erase(s.begin());
  if (s.empty()) throw SchemaError(what + ": empty index string");
  for (char c : s)
    if (c < '1' || c > '3') throw SchemaError(what + ": index digits must be 1, 2, or 3");
  return s;
}

}  // namespace detail

// --- Type D ----------------------------------------------------------------

inline json to_json(const TypeDStructure& d) {
  json gens = json::array();
  for (const auto& g : d.generators())
    gens.push_back({{"name", g.name}, {"idempotent", g.idem == Idem::I1 ? 1 : 2}});
  json edges = json::array();
  for (const auto& e : d.edges())
    edges.push_back({{"from", d.name_of(e.from)},
                     {"label", std::string(label_name(e.label))},
                     {"to", d.name_of(e.to)}});
  return {{"generators", gens}, {"edges", edges}};
}

inline TypeDStructure type_d_from_json(const json& j) {
  const std::string what = "type D file";
  TypeDStructure d;
  for (const auto& g : detail::field(j, "generators", what)) {
    const auto& name = detail::field(g, "name", what);
    if (!name.is_string()) throw SchemaError(what + ": generator name must be a string");
    d.add_generator(name.get<std::string>(),
                    detail::idem_from_json(detail::field(g, "idempotent", what), what));
  }
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      const auto from = detail::field(e, "from", what).get<std::string>();
      const auto to = detail::field(e, "to", what).get<std::string>();
      if (!d.has_generator(from) || !d.has_generator(to))
        throw SchemaError(what + ": edge endpoint names an unknown generator");
      d.toggle_edge(from, detail::label_from_json(detail::field(e, "label", what), what), to);
    }
  return d;
}

// --- Type A ----------------------------------------------------------------

inline json to_json(const TypeAStructure& a) {
  json gens = json::array();
  for (const auto& g : a.generators())
    gens.push_back({{"name", g.name}, {"idempotent", g.idem == Idem::I1 ? 1 : 2}});
  json edges = json::array();
  for (const auto& e : a.edges())
    edges.push_back(
        {{"from", a.name_of(e.from)}, {"label", e.digits}, {"to", a.name_of(e.to)}});
  json out{{"generators", gens}, {"edges", edges}};
  if (!a.table().empty()) {
    json ops = json::array();
    for (const auto& [key, outs] : a.table())
      for (int y : outs) {
        json inputs = json::array();
        for (ReebLabel l : key.second) inputs.push_back(std::string(label_name(l)));
        ops.push_back({{"gen", a.name_of(key.first)},
                       {"inputs", inputs},
                       {"output", a.name_of(y)}});
      }
    out["operations"] = ops;
  }
  return out;
}

inline TypeAStructure type_a_from_json(const json& j) {
  const std::string what = "type A file";
  TypeAStructure a;
  for (const auto& g : detail::field(j, "generators", what)) {
    const auto& name = detail::field(g, "name", what);
    if (!name.is_string()) throw SchemaError(what + ": generator name must be a string");
    a.add_generator(name.get<std::string>(),
                    detail::idem_from_json(detail::field(g, "idempotent", what), what));
  }
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      const auto from = detail::field(e, "from", what).get<std::string>();
      const auto to = detail::field(e, "to", what).get<std::string>();
      if (!a.has_generator(from) || !a.has_generator(to))
        throw SchemaError(what + ": edge endpoint names an unknown generator");
      a.add_edge(from, detail::digits_from_json(detail::field(e, "label", what), what), to);
    }
  if (j.contains("operations"))
    for (const auto& op : j["operations"]) {
      std::vector<ReebLabel> inputs;
      for (const auto& l : detail::field(op, "inputs", what))
        inputs.push_back(detail::label_from_json(l, what));
      const auto gen = detail::field(op, "gen", what).get<std::string>();
      const auto out = detail::field(op, "output", what).get<std::string>();
      if (!a.has_generator(gen) || !a.has_generator(out))
        throw SchemaError(what + ": operation names an unknown generator");
      a.add_operation(a.index_of(gen), std::move(inputs), a.index_of(out));
    }
  return a;
}

// --- Chain complexes ---------------------------------------------------------

inline json to_json(const ChainComplexF2& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) {
    json entry{{"name", g.name}};
    if (g.grading) entry["grading"] = *g.grading;
    gens.push_back(entry);
  }
  json boundary = json::array();
  for (const auto& [from, to] : c.boundary())
    boundary.push_back({{"from", c.name_of(from)}, {"to", c.name_of(to)}});
  return {{"generators", gens}, {"boundary", boundary}};
}

inline ChainComplexF2 complex_from_json(const json& j) {
  const std::string what = "chain complex file";
  ChainComplexF2 c;
  for (const auto& g : detail::field(j, "generators", what)) {
    std::optional<int> grading;
    if (g.contains("grading")) grading = g["grading"].get<int>();
    c.add_generator(detail::field(g, "name", what).get<std::string>(), grading);
  }
  if (j.contains("boundary"))
    for (const auto& e : j["boundary"]) {
      const auto from = detail::field(e, "from", what).get<std::string>();
      const auto to = detail::field(e, "to", what).get<std::string>();
      c.toggle_boundary(c.index_of(from), c.index_of(to));
    }
  return c;
}

// --- CFK ---------------------------------------------------------------------

inline json to_json(const CFKMinusData& cfk) {
  json gens = json::array();
  for (const auto& g : cfk.generators) {
    json entry{{"name", g.name}, {"alexander", g.alexander}};
    if (g.maslov_mod2) entry["maslov_mod2"] = *g.maslov_mod2;
    gens.push_back(entry);
  }
  auto arrows = [](const std::vector<CFKArrow>& list) {
    json out = json::array();
    for (const auto& a : list)
      out.push_back({{"from", a.from}, {"to", a.to}, {"length", a.length}});
    return out;
  };
  json out{{"generators", gens},
           {"vertical_arrows", arrows(cfk.vertical_arrows)},
           {"horizontal_arrows", arrows(cfk.horizontal_arrows)},
           {"w0", cfk.w0},
           {"w0prime", cfk.w0prime}};
  if (cfk.tau) out["tau"] = *cfk.tau;
  if (cfk.epsilon) out["epsilon"] = *cfk.epsilon;
  if (cfk.infinity_differentials) {
    json diffs = json::array();
    for (const auto& a : *cfk.infinity_differentials)
      diffs.push_back({{"from", a.from}, {"to", a.to}, {"u_power", a.u_power}});
    out["cfk_infinity"] = {{"differentials", diffs}};
  }
  return out;
}

inline CFKMinusData cfk_from_json(const json& j) {
  const std::string what = "cfk file";
  CFKMinusData cfk;
  for (const auto& g : detail::field(j, "generators", what)) {
    CFKGenerator gen;
    gen.name = detail::field(g, "name", what).get<std::string>();
    gen.alexander = detail::field(g, "alexander", what).get<int>();
    if (g.contains("maslov_mod2")) gen.maslov_mod2 = g["maslov_mod2"].get<int>();
    cfk.generators.push_back(gen);
  }
  auto arrows = [&what](const json& list) {
    std::vector<CFKArrow> out;
    for (const auto& a : list)
      out.push_back({detail::field(a, "from", what).get<std::string>(),
                     detail::field(a, "to", what).get<std::string>(),
                     detail::field(a, "length", what).get<int>()});
    return out;
  };
  if (j.contains("vertical_arrows")) cfk.vertical_arrows = arrows(j["vertical_arrows"]);
  if (j.contains("horizontal_arrows")) cfk.horizontal_arrows = arrows(j["horizontal_arrows"]);
  if (j.contains("tau")) cfk.tau = j["tau"].get<int>();
  if (j.contains("epsilon")) cfk.epsilon = j["epsilon"].get<int>();
  cfk.w0 = detail::field(j, "w0", what).get<std::string>();
  cfk.w0prime = detail::field(j, "w0prime", what).get<std::string>();
  if (j.contains("cfk_infinity")) {
    std::vector<CFKInfinityArrow> diffs;
    for (const auto& a : detail::field(j["cfk_infinity"], "differentials", what))
      diffs.push_back({detail::field(a, "from", what).get<std::string>(),
                       detail::field(a, "to", what).get<std::string>(),
                       detail::field(a, "u_power", what).get<int>()});
    cfk.infinity_differentials = diffs;
  }
  validate_cfk(cfk);
  return cfk;
}

inline json to_json(const CFKInfinityWindow& w) {
  json gens = json::array();
  for (const auto& g : w.generators)
    gens.push_back({{"name", g.name}, {"alexander", g.alexander}});
  json diffs = json::array();
  for (const auto& a : w.arrows)
    diffs.push_back({{"from", a.from}, {"to", a.to}, {"u_power", a.u_power}});
  return {{"generators", gens}, {"differentials", diffs}};
}

inline CFKInfinityWindow window_from_json(const json& j) {
  const std::string what = "cfk window file";
  CFKInfinityWindow w;
  for (const auto& g : detail::field(j, "generators", what))
    w.generators.push_back({detail::field(g, "name", what).get<std::string>(),
                            detail::field(g, "alexander", what).get<int>(), std::nullopt});
  for (const auto& a : detail::field(j, "differentials", what))
    w.arrows.push_back({detail::field(a, "from", what).get<std::string>(),
                        detail::field(a, "to", what).get<std::string>(),
                        detail::field(a, "u_power", what).get<int>()});
  validate_window(w);
  return w;
}

// --- Files -------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return detail::parse_json_text(text, path);
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open file '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

// Spec files carry the knot data inline or by path (resolved relative to
// the spec file's directory).
inline OrbifoldSurgerySpec spec_from_json(const json& j, const std::string& base_dir = "") {
  const std::string what = "orbifold spec file";
  OrbifoldSurgerySpec spec;
  const auto& cfk = detail::field(j, "cfk", what);
  if (cfk.is_string()) {
    std::string path = cfk.get<std::string>();
    if (!base_dir.empty() && !path.empty() && path.front() != '/') path = base_dir + "/" + path;
    spec.cfk = cfk_from_json(load_json_file(path));
  } else if (cfk.is_object()) {
    spec.cfk = cfk_from_json(cfk);
  } else {
    throw SchemaError(what + ": 'cfk' must be a path or an inline object");
  }
  spec.framing = detail::field(j, "framing", what).get<int>();
  spec.order = detail::field(j, "order", what).get<int>();
  if (spec.order < 1) throw SchemaError(what + ": order must be >= 1");
  return spec;
}

inline json to_json(const RankRelationReport& r, const EulerReport& e) {
  return {{"rank_orbifold", r.rank_orbifold},
          {"rank_underlying", r.rank_underlying},
          {"epsilon", r.epsilon},
          {"framing", r.framing},
          {"order", r.order},
          {"theorem2_ok", r.ok},
          {"theorem3_ok", e.ok},
          {"chi_abs", e.chi_abs},
          {"h1_orb", e.h1_orb}};
}

}  // namespace hfo
