#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "richclub/swap.hpp"
#include "richclub/types.hpp"

namespace richclub {

class Graph;

struct EnsembleConfig {
  std::size_t size = 1000;
  std::uint64_t master_seed = 0;
  Count swaps_per_edge = 10;
  Count max_attempt_factor = 100;
  /// Redraw replicates that come out disconnected.
  bool strict_connected = false;

  RandomizeOptions randomize_options() const { return {swaps_per_edge, max_attempt_factor}; }
};

/// Seed of replicate `r`; attempt > 0 is used only by strict-connected redraws.
std::uint64_t replicate_seed(std::uint64_t master, std::size_t r, std::size_t attempt = 0);

/// Replicate `r` of the ensemble as a standalone graph (labels kept).
Graph draw_replicate(const Graph& g, const EnsembleConfig& cfg, std::size_t r);

/// Per-replicate m11/m10 for each threshold of a k grid, plus the
/// degree-sequence quantities shared by every replicate.
struct EnsembleTable {
  std::vector<Count> k_grid;
  std::vector<std::size_t> n1;
  std::vector<std::size_t> n0;
  std::vector<Count> ub_m11;
  std::vector<Count> ub_m10;
  std::size_t replicates = 0;
  /// Row-major, replicates × k_grid.size().
  std::vector<Count> m11;
  std::vector<Count> m10;

  Count m11_at(std::size_t r, std::size_t ki) const { return m11[r * k_grid.size() + ki]; }
  Count m10_at(std::size_t r, std::size_t ki) const { return m10[r * k_grid.size() + ki]; }
  /// Position of threshold k in the grid. Throws DomainError when absent.
  std::size_t index_of(Count k) const;
};

/// m11 and m10 of every threshold in `k_grid`, for an edge list whose
/// endpoint degrees are given by `degrees`.
void count_by_threshold(std::span<const Edge> edges, std::span<const Count> degrees,
                        std::span<const Count> k_grid, std::span<Count> m11_out,
                        std::span<Count> m10_out);

/// Runs `cfg.size` independent randomizations. Results depend only on
/// (g, cfg, k_grid); `threads` = 0 uses the hardware concurrency.
EnsembleTable generate_ensemble(const Graph& g, const EnsembleConfig& cfg,
                                std::span<const Count> k_grid, unsigned threads = 0);
EnsembleTable generate_ensemble(const Graph& g, const EnsembleConfig& cfg, unsigned threads = 0);

enum class UndefinedCause { none, degenerate_club, zero_ensemble_mean };
std::string_view to_string(UndefinedCause cause);

struct NormalizedValue {
  std::optional<double> value;
  UndefinedCause cause = UndefinedCause::none;
};

/// Three routes to rho(k): raw counts, classic phi, and phi_new.
struct RhoPaths {
  std::optional<double> via_counts;
  std::optional<double> via_phi;
  std::optional<double> via_phi_new;
};

/// Two routes to rho_bar(k): raw counts and phi_bar.
struct RhoBarPaths {
  std::optional<double> via_counts;
  std::optional<double> via_phi_bar;
};

RhoPaths rho_paths(Count m11_observed, const EnsembleTable& ensemble, Count k);
RhoBarPaths rho_bar_paths(Count m10_observed, const EnsembleTable& ensemble, Count k);

/// Relative tolerance within which every route must agree.
inline constexpr double kPathTolerance = 1e-12;

/// m11 / mean(m11 over the ensemble). Throws std::logic_error if the
/// computation routes disagree and DomainError on an empty ensemble.
NormalizedValue rho(Count m11_observed, const EnsembleTable& ensemble, Count k);
/// m10 / mean(m10 over the ensemble).
NormalizedValue rho_bar(Count m10_observed, const EnsembleTable& ensemble, Count k);

struct SampleStats {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for one replicate.
  double sd = 0.0;
};

SampleStats m11_stats(const EnsembleTable& ensemble, std::size_t ki);
SampleStats m10_stats(const EnsembleTable& ensemble, std::size_t ki);

struct NormalizedPoint {
  Count k = 0;
  double m11_ran_mean = 0.0;
  double m11_ran_sd = 0.0;
  double m10_ran_mean = 0.0;
  double m10_ran_sd = 0.0;
  NormalizedValue rho;
  NormalizedValue rho_bar;
};

/// Normalizes the observed graph against an ensemble built over the same
/// degree sequence.
std::vector<NormalizedPoint> normalize(const Graph& observed, const EnsembleTable& ensemble);

std::vector<NormalizedPoint> normalized_profile(const Graph& g, const EnsembleConfig& cfg,
                                                unsigned threads = 0);
std::vector<NormalizedPoint> normalized_profile(const Graph& g, const EnsembleConfig& cfg,
                                                std::span<const Count> k_grid,
                                                unsigned threads = 0);

}  // namespace richclub
