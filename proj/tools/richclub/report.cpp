#include "report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

namespace richclub::cli {

namespace {

using nlohmann::ordered_json;

// Rounds to the printed precision so JSON and CSV carry the same value.
ordered_json json_number(const std::optional<double>& x) {
  if (!x) return nullptr;
  return std::strtod(format_number(*x).c_str(), nullptr);
}

ordered_json json_cause(const NormalizedValue& v) {
  if (v.value) return nullptr;
  return std::string(to_string(v.cause));
}

ordered_json config_json(const EnsembleConfig& cfg) {
  return {{"ensemble_size", cfg.size},
          {"master_seed", cfg.master_seed},
          {"swaps_per_edge", cfg.swaps_per_edge},
          {"max_attempt_factor", cfg.max_attempt_factor},
          {"strict_connected_null", cfg.strict_connected}};
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

void write_analysis_csv(std::ostream& out, const AnalysisReport& r) {
  const auto& cfg = r.config;
  out << "# input=" << r.provenance.input << '\n'
      << "# tool_version=" << r.provenance.tool_version << '\n'
      << "# master_seed=" << r.provenance.master_seed << '\n'
      << "# ensemble_size=" << cfg.size << " swaps_per_edge=" << cfg.swaps_per_edge
      << " max_attempt_factor=" << cfg.max_attempt_factor
      << " strict_connected_null=" << (cfg.strict_connected ? "true" : "false") << '\n'
      << "# nodes=" << r.graph.node_count << " edges=" << r.graph.edge_count
      << " max_degree=" << r.graph.max_degree << " density=" << format_number(r.density) << '\n'
      << kAnalysisColumns << '\n';
  for (std::size_t i = 0; i < r.profile.points.size(); ++i) {
    const auto& p = r.profile.points[i];
    const auto& q = r.normalized[i];
    out << p.k << ',' << p.n1 << ',' << p.m11 << ',' << p.m10 << ',' << p.m00 << ','
        << p.ub_m11 << ',' << p.ub_m10 << ',' << format_optional(p.phi) << ','
        << format_optional(p.phi_new) << ',' << format_optional(p.phi_bar) << ','
        << format_optional(p.delta_k) << ',' << format_number(q.m11_ran_mean) << ','
        << format_number(q.m11_ran_sd) << ',' << format_number(q.m10_ran_mean) << ','
        << format_number(q.m10_ran_sd) << ',' << format_optional(q.rho.value) << ','
        << format_optional(q.rho_bar.value) << '\n';
  }
}

void write_analysis_json(std::ostream& out, const AnalysisReport& r) {
  ordered_json doc;
  doc["provenance"] = {{"input", r.provenance.input},
                       {"tool_version", r.provenance.tool_version},
                       {"master_seed", r.provenance.master_seed}};
  doc["config"] = config_json(r.config);
  doc["graph"] = {{"nodes", r.graph.node_count},
                  {"edges", r.graph.edge_count},
                  {"max_degree", r.graph.max_degree},
                  {"density", json_number(r.density)}};
  auto points = ordered_json::array();
  for (std::size_t i = 0; i < r.profile.points.size(); ++i) {
    const auto& p = r.profile.points[i];
    const auto& q = r.normalized[i];
    points.push_back({{"k", p.k},
                      {"n1", p.n1},
                      {"m11", p.m11},
                      {"m10", p.m10},
                      {"m00", p.m00},
                      {"ub_m11", p.ub_m11},
                      {"ub_m10", p.ub_m10},
                      {"phi", json_number(p.phi)},
                      {"phi_new", json_number(p.phi_new)},
                      {"phi_bar", json_number(p.phi_bar)},
                      {"delta", json_number(p.delta_k)},
                      {"m11_ran_mean", json_number(q.m11_ran_mean)},
                      {"m11_ran_sd", json_number(q.m11_ran_sd)},
                      {"m10_ran_mean", json_number(q.m10_ran_mean)},
                      {"m10_ran_sd", json_number(q.m10_ran_sd)},
                      {"rho", json_number(q.rho.value)},
                      {"rho_bar", json_number(q.rho_bar.value)},
                      {"rho_undefined", json_cause(q.rho)},
                      {"rho_bar_undefined", json_cause(q.rho_bar)}});
  }
  doc["points"] = std::move(points);
  out << doc.dump(2) << '\n';
}

void write_dyadic_csv(std::ostream& out, const DyadicReport& r) {
  out << kDyadicColumns << '\n'
      << r.n1 << ',' << r.n0 << ',' << r.counts.m11 << ',' << r.counts.m10 << ','
      << r.counts.m00 << ',' << format_number(r.expectation.expected_m11) << ','
      << format_number(r.expectation.expected_m10) << ',' << format_optional(r.dyadicity) << ','
      << format_optional(r.heterophilicity) << ',' << r.ub_m11 << ',' << r.ub_m10 << '\n';
}

void write_dyadic_json(std::ostream& out, const DyadicReport& r) {
  ordered_json doc = {{"n1", r.n1},
                      {"n0", r.n0},
                      {"m11", r.counts.m11},
                      {"m10", r.counts.m10},
                      {"m00", r.counts.m00},
                      {"expected_m11", json_number(r.expectation.expected_m11)},
                      {"expected_m10", json_number(r.expectation.expected_m10)},
                      {"dyadicity", json_number(r.dyadicity)},
                      {"heterophilicity", json_number(r.heterophilicity)},
                      {"ub_m11", r.ub_m11},
                      {"ub_m10", r.ub_m10}};
  out << doc.dump(2) << '\n';
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows) {
  out << kBoundsColumns << '\n';
  for (const auto& row : rows) {
    out << row.n1 << ',' << row.n0 << ',' << row.bounds.ub_m11_basic << ','
        << row.bounds.ub_m10_basic << ',' << row.bounds.ub_m11 << ',' << row.bounds.ub_m10
        << '\n';
  }
}

void write_bounds_json(std::ostream& out, const std::vector<BoundsRow>& rows) {
  auto doc = ordered_json::array();
  for (const auto& row : rows) {
    doc.push_back({{"n1", row.n1},
                   {"n0", row.n0},
                   {"ub_m11_basic", row.bounds.ub_m11_basic},
                   {"ub_m10_basic", row.bounds.ub_m10_basic},
                   {"ub_m11", row.bounds.ub_m11},
                   {"ub_m10", row.bounds.ub_m10}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace richclub::cli
