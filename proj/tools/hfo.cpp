// Command-line front end: computes the orbifold invariant from knot Floer
// data, sweeps the rank and Euler-characteristic checks, and gives direct
// access to reduction, box tensor products, dualization, and the
// concordance invariants on structure files.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfo/cfk.hpp"
#include "hfo/dot.hpp"
#include "hfo/json_io.hpp"
#include "hfo/orbifold.hpp"
#include "hfo/reduction.hpp"
#include "hfo/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitSchema = 2;

std::string dirname_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

void emit(const hfo::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    hfo::write_json_file(out_path, j);
}

// "a..b" -> [a, b]; a > b is an empty sweep.
std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw hfo::SchemaError("range '" + text + "' must have the form a..b");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, pos), &used);
    if (used != pos) throw hfo::SchemaError("range '" + text + "' must have the form a..b");
    const std::string rest = text.substr(pos + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size())
      throw hfo::SchemaError("range '" + text + "' must have the form a..b");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw hfo::SchemaError("range '" + text + "' must have the form a..b");
  } catch (const std::out_of_range&) {
    throw hfo::SchemaError("range '" + text + "' is out of range");
  }
}

int cmd_compute(const std::string& spec_path, const std::string& cfk_path, int framing,
                int order, const std::string& dot_path, const std::string& report_path,
                bool pretty) {
  hfo::OrbifoldSurgerySpec spec;
  if (!spec_path.empty()) {
    spec = hfo::spec_from_json(hfo::load_json_file(spec_path), dirname_of(spec_path));
  } else {
    if (cfk_path.empty()) throw hfo::SchemaError("compute: need --cfk or --spec");
    spec.cfk = hfo::cfk_from_json(hfo::load_json_file(cfk_path));
    spec.framing = framing;
    spec.order = order;
  }
  const auto result = hfo::compute_hfo(spec);

  hfo::json report{{"rank", result.rank},
                   {"framing", spec.framing},
                   {"order", spec.order},
                   {"generators", result.complex.size()},
                   {"used_bounded_replacement", result.used_bounded_replacement}};
  try {
    report["epsilon"] = hfo::resolved_epsilon(spec.cfk);
  } catch (const hfo::SchemaError&) {
    report["epsilon"] = nullptr;
  }
  if (!dot_path.empty()) {
    std::string dot = hfo::to_dot(result.cfa, "cfa");
    dot += hfo::to_dot(result.d_structure, "solid_torus");
    dot += hfo::to_dot(result.complex, "orbifold_complex");
    std::ofstream out(dot_path);
    if (!out) throw hfo::SchemaError("cannot open '" + dot_path + "' for writing");
    out << dot;
  }
  if (pretty)
    std::cout << "rank " << result.rank << " (order " << spec.order << ", framing "
              << spec.framing << ", " << result.complex.size() << " generators)\n";
  emit(report, report_path);
  return kExitOk;
}

int cmd_check(const std::string& cfk_path, const std::string& framings,
              const std::string& orders, const std::string& theorem, bool pretty) {
  const auto [r_lo, r_hi] = parse_range(framings);
  const auto [n_lo, n_hi] = parse_range(orders);
  if (n_lo < 1 && n_lo <= n_hi) throw hfo::SchemaError("orders must be >= 1");
  if (theorem != "2" && theorem != "3" && theorem != "all")
    throw hfo::SchemaError("--theorem must be 2, 3, or all");
  const auto cfk = hfo::cfk_from_json(hfo::load_json_file(cfk_path));

  hfo::json rows = hfo::json::array();
  bool all_ok = true;
  for (int r = r_lo; r <= r_hi; ++r)
    for (int n = n_lo; n <= n_hi; ++n) {
      hfo::OrbifoldSurgerySpec spec{cfk, r, n};
      hfo::json row{{"framing", r}, {"order", n}};
      bool row_ok = true;
      if (theorem != "3") {
        const auto t2 = hfo::check_theorem2(spec);
        row["rank_orbifold"] = t2.rank_orbifold;
        row["rank_underlying"] = t2.rank_underlying;
        row["epsilon"] = t2.epsilon;
        row["expected_rank"] = t2.expected;
        row["theorem2_ok"] = t2.ok;
        row_ok = row_ok && t2.ok;
      }
      if (theorem != "2") {
        const auto t3 = hfo::check_theorem3(spec);
        row["h1_orb"] = t3.h1_orb;
        row["chi_abs"] = t3.chi_abs;
        row["theorem3_ok"] = t3.ok;
        row_ok = row_ok && t3.ok;
      }
      row["ok"] = row_ok;
      all_ok = all_ok && row_ok;
      rows.push_back(row);
      if (pretty) {
        std::cout << "r=" << r << " n=" << n;
        if (row.contains("rank_orbifold"))
          std::cout << "  rank=" << row["rank_orbifold"] << " expected=" << row["expected_rank"];
        if (row.contains("h1_orb")) std::cout << "  |H1_orb|=" << row["h1_orb"];
        std::cout << (row_ok ? "  PASS" : "  FAIL") << "\n";
      }
    }
  if (!pretty) std::cout << rows.dump(2) << "\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path) {
  const auto d = hfo::type_d_from_json(hfo::load_json_file(in_path));
  hfo::require_valid(d, "input");
  emit(hfo::to_json(hfo::reduce(d)), out_path);
  return kExitOk;
}

int cmd_tensor(const std::string& a_path, const std::string& d_path, bool with_twist,
               const std::string& out_path) {
  const auto d = hfo::type_d_from_json(hfo::load_json_file(d_path));
  hfo::require_valid(d, "type D input");
  if (with_twist) {
    emit(hfo::to_json(hfo::box_da_d(hfo::cfda_dehn_twist(), d)), out_path);
    return kExitOk;
  }
  if (a_path.empty()) throw hfo::SchemaError("tensor: need --a <file> or --twist");
  const auto a = hfo::type_a_from_json(hfo::load_json_file(a_path));
  emit(hfo::to_json(hfo::box_a_d(a, d)), out_path);
  return kExitOk;
}

int cmd_dualize(const std::string& in_path, const std::string& out_path) {
  const auto d = hfo::type_d_from_json(hfo::load_json_file(in_path));
  hfo::require_valid(d, "input");
  emit(hfo::to_json(hfo::dualize_d_to_a(d)), out_path);
  return kExitOk;
}

int cmd_tau(const std::string& window_path, const std::string& cfk_path,
            const std::string& out_path) {
  hfo::CFKInfinityWindow window;
  if (!window_path.empty()) {
    window = hfo::window_from_json(hfo::load_json_file(window_path));
  } else if (!cfk_path.empty()) {
    window = hfo::window_from_cfk(hfo::cfk_from_json(hfo::load_json_file(cfk_path)));
  } else {
    throw hfo::SchemaError("tau: need --cfkinf <file> or --cfk <file>");
  }
  const int tau = hfo::compute_tau(window);
  const int nu = hfo::compute_nu(window);
  const int nu_prime = hfo::compute_nu_prime(window);
  emit(hfo::json{{"tau", tau},
                 {"nu", nu},
                 {"nu_prime", nu_prime},
                 {"epsilon", 2 * tau - nu - nu_prime}},
       out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold Heegaard Floer invariant for surgeries on knots"};
  app.require_subcommand(1);

  std::string spec_path, cfk_path, dot_path, report_path, in_path, out_path, a_path, d_path,
      window_path;
  std::string framings = "0..0", orders = "1..1", theorem = "all";
  int framing = 0, order = 1;
  bool pretty = false, with_twist = false;

  auto* compute = app.add_subcommand("compute", "rank of the orbifold invariant");
  compute->add_option("--cfk", cfk_path, "knot Floer data (JSON)");
  compute->add_option("--spec", spec_path, "surgery spec file {cfk, framing, order}");
  compute->add_option("--framing", framing, "integer framing");
  compute->add_option("--order", order, "singular order (n >= 1)");
  compute->add_option("--dot", dot_path, "write DOT graphs here");
  compute->add_option("--report", report_path, "write the JSON report here");
  compute->add_flag("--pretty", pretty, "human summary line on stdout");

  auto* check = app.add_subcommand("check", "sweep the rank and Euler-characteristic checks");
  check->add_option("--cfk", cfk_path, "knot Floer data (JSON)")->required();
  check->add_option("--framings", framings, "framing range a..b")->required();
  check->add_option("--orders", orders, "order range a..b")->required();
  check->add_option("--theorem", theorem, "2, 3, or all");
  check->add_flag("--pretty", pretty, "table instead of JSON");

  auto* reduce = app.add_subcommand("reduce", "cancel identity edges in a type D structure");
  reduce->add_option("--in", in_path, "type D structure (JSON)")->required();
  reduce->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* tensor = app.add_subcommand("tensor", "box tensor with a type D structure");
  tensor->add_option("--a", a_path, "type A structure (JSON)");
  tensor->add_flag("--twist", with_twist, "use the Dehn twist bimodule instead of a type A file");
  tensor->add_option("--d", d_path, "type D structure (JSON)")->required();
  tensor->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* dualize = app.add_subcommand("dualize", "type A dual of a reduced type D structure");
  dualize->add_option("--in", in_path, "type D structure (JSON)")->required();
  dualize->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* tau = app.add_subcommand("tau", "tau, nu, nu', epsilon of a knot complex");
  tau->add_option("--cfkinf", window_path, "full complex window (JSON)");
  tau->add_option("--cfk", cfk_path, "knot Floer data (JSON)");
  tau->add_option("--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitSchema : kExitOk;
  }

  try {
    if (compute->parsed())
      return cmd_compute(spec_path, cfk_path, framing, order, dot_path, report_path, pretty);
    if (check->parsed()) return cmd_check(cfk_path, framings, orders, theorem, pretty);
    if (reduce->parsed()) return cmd_reduce(in_path, out_path);
    if (tensor->parsed()) return cmd_tensor(a_path, d_path, with_twist, out_path);
    if (dualize->parsed()) return cmd_dualize(in_path, out_path);
    if (tau->parsed()) return cmd_tau(window_path, cfk_path, out_path);
  } catch (const hfo::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const hfo::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitSchema;
}
