#include "mlc/formulas.hpp"
#include "mlc/io.hpp"
#include "mlc/lattice.hpp"
#include "mlc/poset.hpp"
#include "mlc/resonance.hpp"
#include "mlc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : ", ") + item;
  return out;
}

void require_format(const std::string& format, const std::vector<std::string>& allowed, const std::string& cmd) {
  for (const auto& a : allowed)
    if (format == a) return;
  throw UsageError(cmd + ": --format must be one of " + joined(allowed));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + out_path + " for writing");
  file << text;
}

std::string json_text(const mlc::Json& j) { return j.dump(2) + "\n"; }

std::string methods_footer() {
  std::string out = "Methods by kind:";
  for (auto kind : {mlc::PolyKind::rank, mlc::PolyKind::cube, mlc::PolyKind::maximal, mlc::PolyKind::disjoint,
                    mlc::PolyKind::degree, mlc::PolyKind::indegree})
    out += std::string("\n  ") + mlc::to_string(kind) + ": " + joined(mlc::methods_for(kind));
  return out;
}

std::string construct(const std::string& family, long n, const std::string& format) {
  if (n < 0) throw UsageError("construct: --n must be non-negative");
  const auto size = static_cast<std::size_t>(n);
  const bool json = format == "json";
  if (family == "omega" || family == "gamma") {
    if (family == "omega" && n > 40) throw UsageError("construct: omega needs n <= 40");
    if (family == "gamma" && n > 30) throw UsageError("construct: gamma needs n <= 30");
    const mlc::HasseGraph h = family == "omega" ? mlc::omega(size) : mlc::gamma_lattice(size);
    return json ? json_text(mlc::hasse_to_json(h)) : mlc::hasse_to_dot(h, family + std::to_string(n));
  }
  if (family == "lambda") {
    if (n < 1 || n > 30) throw UsageError("construct: lambda needs 1 <= n <= 30");
    const mlc::Graph g = mlc::lambda(size);
    return json ? json_text(mlc::graph_to_json(g)) : mlc::graph_to_dot(g, family + std::to_string(n));
  }
  if (family == "fence" || family == "lfence") {
    if (n > static_cast<long>(mlc::kMaxPosetElements)) throw UsageError("construct: n must be at most 64");
    if (family == "lfence" && n < 1) throw UsageError("construct: lfence needs n >= 1");
    const mlc::Poset p = family == "fence" ? mlc::make_fence(size) : mlc::make_lfence(size);
    return json ? json_text(mlc::poset_to_json(p)) : mlc::poset_to_dot(p, family + std::to_string(n));
  }
  if (family == "lucasene") {
    if (n < 1 || n > 30) throw UsageError("construct: lucasene needs 1 <= n <= 30");
    const mlc::HexChain chain = mlc::lucasene(size);
    const mlc::PlaneBipartiteGraph g = mlc::build_chain(chain);
    return json ? json_text(mlc::plane_graph_to_json(chain, g)) : mlc::plane_graph_to_dot(g, family + std::to_string(n));
  }
  throw UsageError("construct: unknown family " + family);
}

std::string poly(const std::string& kind_name, long n, std::string method, const std::string& format) {
  const auto kind = mlc::parse_poly_kind(kind_name);
  if (!kind) throw UsageError("poly: unknown kind " + kind_name);
  if (n < 0) throw UsageError("poly: --n must be non-negative");
  const auto methods = mlc::methods_for(*kind);
  if (method.empty()) method = methods.front();
  bool known = false;
  for (const auto& m : methods) known = known || m == method;
  if (!known) throw UsageError("poly: method " + method + " is not available for kind " + kind_name + " (choose from " + joined(methods) + ")");
  mlc::IntPolynomial p;
  try {
    p = mlc::family_poly(*kind, n, method);
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("poly: ") + e.what());
  }
  if (format == "json") return json_text(mlc::polynomial_to_json(kind_name, n, method, p));
  if (format == "csv") {
    mlc::Table t;
    t.header = {"k", "coefficient"};
    const auto coeffs = p.decimal_coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) t.rows.push_back({std::to_string(k), coeffs[k]});
    return mlc::table_to_csv(t);
  }
  return p.to_plain() + "\n";
}

std::string table(const std::string& kind, long rows, const std::string& inner, const std::string& format) {
  if (rows < 1) throw UsageError("table: --rows must be at least 1");
  mlc::Table t;
  if (kind == "lucas_triangle") {
    t = mlc::lucas_triangle_table(static_cast<std::size_t>(rows));
  } else if (kind == "sequences") {
    t = mlc::sequences_table(static_cast<std::size_t>(rows));
  } else if (kind == "spectrum_grid") {
    if (!mlc::parse_poly_kind(inner)) throw UsageError("table: unknown --kind-inner " + inner);
    t = mlc::spectrum_grid_table(static_cast<std::size_t>(rows), inner);
  } else {
    throw UsageError("table: unknown kind " + kind);
  }
  if (format == "json") return json_text(mlc::table_to_json(t));
  if (format == "plain") return mlc::table_to_plain(t);
  return mlc::table_to_csv(t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchable Lucas cubes: constructions, polynomials and verification"};
  app.require_subcommand(1);

  std::string format;
  std::string out_path;

  std::string family;
  long n = 0;
  auto* construct_cmd = app.add_subcommand("construct", "build a graph, poset or hexagonal chain");
  construct_cmd->add_option("--family", family, "omega, gamma, lambda, fence, lfence or lucasene")->required();
  construct_cmd->add_option("--n", n, "size parameter")->required();
  construct_cmd->add_option("--format", format, "json or dot");
  construct_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  std::string kind;
  std::string method;
  auto* poly_cmd = app.add_subcommand("poly", "print the coefficients of a polynomial family");
  poly_cmd->add_option("--kind", kind, "rank, cube, maximal, disjoint, degree or indegree")->required();
  poly_cmd->add_option("--n", n, "index")->required();
  poly_cmd->add_option("--method", method, "computation method (default: recurrence)");
  poly_cmd->add_option("--format", format, "plain, json or csv");
  poly_cmd->add_option("--out", out_path, "write to this file instead of stdout");
  poly_cmd->footer(methods_footer());

  std::string suite_name;
  long max_n = -1;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite_name, "identities, oracle_crosscheck, resonance, structure or all")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "largest n to check");
  verify_cmd->add_option("--format", format, "plain or json");
  verify_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  long rows = 0;
  std::string inner = "cube";
  auto* table_cmd = app.add_subcommand("table", "export a table");
  table_cmd->add_option("--kind", kind, "lucas_triangle, sequences or spectrum_grid")->required();
  table_cmd->add_option("--rows", rows, "number of rows")->required();
  table_cmd->add_option("--kind-inner", inner, "polynomial family for spectrum_grid");
  table_cmd->add_option("--format", format, "csv, json or plain");
  table_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "dot"}, "construct");
      emit(construct(family, n, format), out_path);
      return kExitOk;
    }
    if (poly_cmd->parsed()) {
      if (format.empty()) format = "plain";
      require_format(format, {"plain", "json", "csv"}, "poly");
      emit(poly(kind, n, method, format), out_path);
      return kExitOk;
    }
    if (table_cmd->parsed()) {
      if (format.empty()) format = "csv";
      require_format(format, {"csv", "json", "plain"}, "table");
      emit(table(kind, rows, inner, format), out_path);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (format.empty()) format = "plain";
      require_format(format, {"plain", "json"}, "verify");
      const auto suite = mlc::parse_suite(suite_name);
      if (!suite) throw UsageError("verify: unknown suite " + suite_name);
      if (max_n < 0) max_n = mlc::default_max_n(*suite);
      if (max_n > mlc::max_n_guard(*suite))
        throw UsageError("verify: --max-n must be at most " + std::to_string(mlc::max_n_guard(*suite)));
      const mlc::RunReport report = mlc::run_suite(*suite, max_n);
      emit(format == "json" ? json_text(report.to_json()) : report.to_plain(), out_path);
      if (report.count(mlc::CheckStatus::discrepancy_logged) > 0)
        std::cerr << "warning: " << report.count(mlc::CheckStatus::discrepancy_logged)
                  << " documented discrepancies logged\n";
      return report.exit_code() == 0 ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
