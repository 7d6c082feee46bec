#pragma once

// Deterministic DOT export: nodes and edges sorted, filled vertices for
// idempotent 1, unfilled for idempotent 2.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hfo/homology.hpp"
#include "hfo/structures.hpp"

namespace hfo {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot_node(const std::string& name, Idem idem) {
  return "  " + dot_quote(name) +
         (idem == Idem::I1 ? " [shape=circle, style=filled, fillcolor=black, fontcolor=white];"
                           : " [shape=circle];");
}

}  // namespace detail

inline std::string to_dot(const TypeDStructure& d, const std::string& graph_name = "type_d") {
  std::vector<std::string> nodes, edges;
  for (const auto& g : d.generators()) nodes.push_back(detail::dot_node(g.name, g.idem));
  for (const auto& e : d.edges())
    edges.push_back("  " + detail::dot_quote(d.name_of(e.from)) + " -> " +
                    detail::dot_quote(d.name_of(e.to)) + " [label=" +
                    detail::dot_quote(std::string(label_name(e.label))) + "];");
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (const auto& n : nodes) out << n << "\n";
  for (const auto& e : edges) out << e << "\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const TypeAStructure& a, const std::string& graph_name = "type_a") {
  std::vector<std::string> nodes, edges;
  for (const auto& g : a.generators()) nodes.push_back(detail::dot_node(g.name, g.idem));
  for (const auto& e : a.edges())
    edges.push_back("  " + detail::dot_quote(a.name_of(e.from)) + " -> " +
                    detail::dot_quote(a.name_of(e.to)) + " [label=" +
                    detail::dot_quote(e.digits) + "];");
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (const auto& n : nodes) out << n << "\n";
  for (const auto& e : edges) out << e << "\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const ChainComplexF2& c, const std::string& graph_name = "complex") {
  std::vector<std::string> nodes, edges;
  for (const auto& g : c.generators()) {
    std::string label = g.name;
    if (g.grading) label += " [" + std::to_string(*g.grading) + "]";
    nodes.push_back("  " + detail::dot_quote(g.name) + " [shape=box, label=" +
                    detail::dot_quote(label) + "];");
  }
  for (const auto& [from, to] : c.boundary())
    edges.push_back("  " + detail::dot_quote(c.name_of(from)) + " -> " +
                    detail::dot_quote(c.name_of(to)) + ";");
  std::sort(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (const auto& n : nodes) out << n << "\n";
  for (const auto& e : edges) out << e << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace hfo
