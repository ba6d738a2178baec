#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "richclub/characteristic.hpp"
#include "richclub/dyadic.hpp"
#include "richclub/null_ensemble.hpp"
#include "richclub/richclub.hpp"

namespace richclub::cli {

struct Provenance {
  std::string input;
  std::string tool_version;
  std::uint64_t master_seed = 0;
};

struct AnalysisReport {
  GraphSummary graph;
  double density = 0.0;
  RichClubProfile profile;
  std::vector<NormalizedPoint> normalized;
  EnsembleConfig config;
  Provenance provenance;
};

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double x);
std::string format_optional(const std::optional<double>& x);

inline constexpr const char* kAnalysisColumns =
    "k,n1,m11,m10,m00,ub_m11,ub_m10,phi,phi_new,phi_bar,delta,m11_ran_mean,m11_ran_sd,"
    "m10_ran_mean,m10_ran_sd,rho,rho_bar";

/// Provenance as '#' comment lines, then the header and one row per k.
void write_analysis_csv(std::ostream& out, const AnalysisReport& report);
void write_analysis_json(std::ostream& out, const AnalysisReport& report);

struct DyadicReport {
  DyadCounts counts;
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  DyadExpectation expectation;
  std::optional<double> dyadicity;
  std::optional<double> heterophilicity;
  Count ub_m11 = 0;
  Count ub_m10 = 0;
};

inline constexpr const char* kDyadicColumns =
    "n1,n0,m11,m10,m00,expected_m11,expected_m10,dyadicity,heterophilicity,ub_m11,ub_m10";

void write_dyadic_csv(std::ostream& out, const DyadicReport& report);
void write_dyadic_json(std::ostream& out, const DyadicReport& report);

struct BoundsRow {
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  DyadBounds bounds;
};

inline constexpr const char* kBoundsColumns = "n1,n0,ub_m11_basic,ub_m10_basic,ub_m11,ub_m10";

void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows);
void write_bounds_json(std::ostream& out, const std::vector<BoundsRow>& rows);

}  // namespace richclub::cli
