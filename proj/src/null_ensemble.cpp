#include "richclub/null_ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "richclub/degree_sequence.hpp"
#include "richclub/dyadic.hpp"
#include "richclub/error.hpp"
#include "richclub/graph.hpp"
#include "richclub/richclub.hpp"

namespace richclub {

namespace {

constexpr std::size_t kMaxConnectedRedraws = 1000;

// Compensated (Neumaier) summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::vector<Count> node_degrees(const Graph& g) {
  std::vector<Count> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

bool agree(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return !a && !b;
  return std::abs(*a - *b) <= kPathTolerance * std::max(std::abs(*a), std::abs(*b));
}

std::optional<double> mean_ratio(const EnsembleTable& t, std::size_t ki, Count observed,
                                 Count denominator, bool use_m11) {
  if (denominator == 0) return std::nullopt;
  const double den = static_cast<double>(denominator);
  CompensatedSum sum;
  for (std::size_t r = 0; r < t.replicates; ++r)
    sum.add(static_cast<double>(use_m11 ? t.m11_at(r, ki) : t.m10_at(r, ki)) / den);
  const double ran = sum.value() / static_cast<double>(t.replicates);
  if (ran == 0.0) return std::nullopt;
  return (static_cast<double>(observed) / den) / ran;
}

std::optional<double> count_ratio(const EnsembleTable& t, std::size_t ki, Count observed,
                                  bool use_m11) {
  Count total = 0;
  for (std::size_t r = 0; r < t.replicates; ++r) total += use_m11 ? t.m11_at(r, ki) : t.m10_at(r, ki);
  if (total == 0) return std::nullopt;
  const double mean = static_cast<double>(total) / static_cast<double>(t.replicates);
  return static_cast<double>(observed) / mean;
}

void require_replicates(const EnsembleTable& t) {
  if (t.replicates == 0) throw DomainError("ensemble is empty");
}

SampleStats stats_of(const EnsembleTable& t, std::size_t ki, bool use_m11) {
  require_replicates(t);
  Count total = 0;
  for (std::size_t r = 0; r < t.replicates; ++r) total += use_m11 ? t.m11_at(r, ki) : t.m10_at(r, ki);
  SampleStats s;
  s.mean = static_cast<double>(total) / static_cast<double>(t.replicates);
  if (t.replicates < 2) return s;
  CompensatedSum sq;
  for (std::size_t r = 0; r < t.replicates; ++r) {
    const double dev = static_cast<double>(use_m11 ? t.m11_at(r, ki) : t.m10_at(r, ki)) - s.mean;
    sq.add(dev * dev);
  }
  s.sd = std::sqrt(sq.value() / static_cast<double>(t.replicates - 1));
  return s;
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t master, std::size_t r, std::size_t attempt) {
  const std::uint64_t base = derive_seed(master, r);
  return attempt == 0 ? base : derive_seed(base, attempt);
}

namespace {

// Randomizes `work` (already holding the edges of g) into replicate r.
void run_replicate(WorkingGraph& work, const Graph& g, const EnsembleConfig& cfg, std::size_t r,
                   bool fresh) {
  const auto options = cfg.randomize_options();
  for (std::size_t attempt = 0;; ++attempt) {
    if (!fresh) work.reset(g);
    fresh = false;
    randomize_in_place(work, options, replicate_seed(cfg.master_seed, r, attempt));
    if (!cfg.strict_connected || work.is_connected()) return;
    if (attempt + 1 >= kMaxConnectedRedraws)
      throw ValidationError("no connected replicate after " +
                            std::to_string(kMaxConnectedRedraws) + " redraws");
  }
}

}  // namespace

Graph draw_replicate(const Graph& g, const EnsembleConfig& cfg, std::size_t r) {
  WorkingGraph work(g);
  run_replicate(work, g, cfg, r, true);
  return work.to_graph(g.labels());
}

std::size_t EnsembleTable::index_of(Count k) const {
  auto it = std::lower_bound(k_grid.begin(), k_grid.end(), k);
  if (it == k_grid.end() || *it != k)
    throw DomainError("k = " + std::to_string(k) + " is not in the ensemble grid");
  return static_cast<std::size_t>(it - k_grid.begin());
}

void count_by_threshold(std::span<const Edge> edges, std::span<const Count> degrees,
                        std::span<const Count> k_grid, std::span<Count> m11_out,
                        std::span<Count> m10_out) {
  Count max_degree = 0;
  for (Count d : degrees) max_degree = std::max(max_degree, d);
  // An edge is 1-1 for k < min endpoint degree and 1-0 for min <= k < max.
  std::vector<Count> low(max_degree + 1, 0);
  std::vector<Count> high(max_degree + 1, 0);
  for (const Edge& e : edges) {
    const Count du = degrees[e.u];
    const Count dv = degrees[e.v];
    ++low[std::min(du, dv)];
    ++high[std::max(du, dv)];
  }
  const Count m = edges.size();
  Count low_at_most = 0;
  Count high_at_most = 0;
  Count d = 0;
  for (std::size_t ki = 0; ki < k_grid.size(); ++ki) {
    const Count k = std::min(k_grid[ki], max_degree);
    for (; d <= k; ++d) {
      low_at_most += low[d];
      high_at_most += high[d];
    }
    m11_out[ki] = m - low_at_most;
    m10_out[ki] = low_at_most - high_at_most;
  }
}

EnsembleTable generate_ensemble(const Graph& g, const EnsembleConfig& cfg, unsigned threads) {
  auto grid = default_k_grid(g);
  return generate_ensemble(g, cfg, grid, threads);
}

EnsembleTable generate_ensemble(const Graph& g, const EnsembleConfig& cfg,
                                std::span<const Count> k_grid, unsigned threads) {
  if (cfg.size == 0) throw DomainError("ensemble size must be at least 1");
  if (cfg.swaps_per_edge == 0) throw DomainError("swaps per edge must be at least 1");
  if (cfg.max_attempt_factor == 0) throw DomainError("max attempt factor must be at least 1");
  if (g.edge_count() < 2)
    throw DegenerateGraphError("randomization needs at least two edges, graph has " +
                               std::to_string(g.edge_count()));
  validate_k_grid(g, k_grid);

  EnsembleTable table;
  table.k_grid.assign(k_grid.begin(), k_grid.end());
  const std::size_t width = k_grid.size();
  const auto ds = degree_sequence(g);
  const auto degrees = node_degrees(g);
  for (Count k : k_grid) {
    const auto n1 = static_cast<std::size_t>(
        std::count_if(degrees.begin(), degrees.end(), [k](Count d) { return d > k; }));
    table.n1.push_back(n1);
    table.n0.push_back(g.node_count() - n1);
    table.ub_m11.push_back(ub_m11(ds, n1));
    table.ub_m10.push_back(ub_m10(ds, n1));
  }
  table.replicates = cfg.size;
  table.m11.assign(cfg.size * width, 0);
  table.m10.assign(cfg.size * width, 0);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.size));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      WorkingGraph work(g);
      bool fresh = true;
      for (std::size_t r = next++; r < cfg.size; r = next++) {
        run_replicate(work, g, cfg, r, fresh);
        fresh = false;
        count_by_threshold(work.edges(), degrees, table.k_grid,
                           std::span(table.m11).subspan(r * width, width),
                           std::span(table.m10).subspan(r * width, width));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = cfg.size;
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string_view to_string(UndefinedCause cause) {
  switch (cause) {
    case UndefinedCause::none: return "none";
    case UndefinedCause::degenerate_club: return "degenerate_club";
    case UndefinedCause::zero_ensemble_mean: return "zero_ensemble_mean";
  }
  return "unknown";
}

RhoPaths rho_paths(Count m11_observed, const EnsembleTable& ensemble, Count k) {
  require_replicates(ensemble);
  const std::size_t ki = ensemble.index_of(k);
  return {count_ratio(ensemble, ki, m11_observed, true),
          mean_ratio(ensemble, ki, m11_observed, choose2(ensemble.n1[ki]), true),
          mean_ratio(ensemble, ki, m11_observed, ensemble.ub_m11[ki], true)};
}

RhoBarPaths rho_bar_paths(Count m10_observed, const EnsembleTable& ensemble, Count k) {
  require_replicates(ensemble);
  const std::size_t ki = ensemble.index_of(k);
  return {count_ratio(ensemble, ki, m10_observed, false),
          mean_ratio(ensemble, ki, m10_observed, ensemble.ub_m10[ki], false)};
}

NormalizedValue rho(Count m11_observed, const EnsembleTable& ensemble, Count k) {
  const auto paths = rho_paths(m11_observed, ensemble, k);
  if (!agree(paths.via_counts, paths.via_phi) || !agree(paths.via_counts, paths.via_phi_new))
    throw std::logic_error("rho computation routes disagree at k = " + std::to_string(k));
  NormalizedValue out{paths.via_counts, UndefinedCause::none};
  if (!out.value) {
    out.cause = ensemble.n1[ensemble.index_of(k)] < 2 ? UndefinedCause::degenerate_club
                                                      : UndefinedCause::zero_ensemble_mean;
  }
  return out;
}

NormalizedValue rho_bar(Count m10_observed, const EnsembleTable& ensemble, Count k) {
  const auto paths = rho_bar_paths(m10_observed, ensemble, k);
  if (!agree(paths.via_counts, paths.via_phi_bar))
    throw std::logic_error("rho_bar computation routes disagree at k = " + std::to_string(k));
  NormalizedValue out{paths.via_counts, UndefinedCause::none};
  if (!out.value) {
    const std::size_t ki = ensemble.index_of(k);
    out.cause = ensemble.n1[ki] == 0 || ensemble.n0[ki] == 0 ? UndefinedCause::degenerate_club
                                                             : UndefinedCause::zero_ensemble_mean;
  }
  return out;
}

SampleStats m11_stats(const EnsembleTable& ensemble, std::size_t ki) {
  return stats_of(ensemble, ki, true);
}

SampleStats m10_stats(const EnsembleTable& ensemble, std::size_t ki) {
  return stats_of(ensemble, ki, false);
}

std::vector<NormalizedPoint> normalize(const Graph& observed, const EnsembleTable& ensemble) {
  require_replicates(ensemble);
  const std::size_t width = ensemble.k_grid.size();
  const auto degrees = node_degrees(observed);
  const auto edges = observed.edges();
  std::vector<Count> m11(width);
  std::vector<Count> m10(width);
  count_by_threshold(edges, degrees, ensemble.k_grid, m11, m10);

  std::vector<NormalizedPoint> out;
  out.reserve(width);
  for (std::size_t ki = 0; ki < width; ++ki) {
    const Count k = ensemble.k_grid[ki];
    const auto n1 = static_cast<std::size_t>(
        std::count_if(degrees.begin(), degrees.end(), [k](Count d) { return d > k; }));
    if (n1 != ensemble.n1[ki])
      throw DomainError("observed graph does not share the ensemble's degree sequence");
    NormalizedPoint p;
    p.k = k;
    const auto s11 = m11_stats(ensemble, ki);
    const auto s10 = m10_stats(ensemble, ki);
    p.m11_ran_mean = s11.mean;
    p.m11_ran_sd = s11.sd;
    p.m10_ran_mean = s10.mean;
    p.m10_ran_sd = s10.sd;
    p.rho = rho(m11[ki], ensemble, k);
    p.rho_bar = rho_bar(m10[ki], ensemble, k);
    out.push_back(p);
  }
  return out;
}

std::vector<NormalizedPoint> normalized_profile(const Graph& g, const EnsembleConfig& cfg,
                                                unsigned threads) {
  return normalize(g, generate_ensemble(g, cfg, threads));
}

std::vector<NormalizedPoint> normalized_profile(const Graph& g, const EnsembleConfig& cfg,
                                                std::span<const Count> k_grid,
                                                unsigned threads) {
  return normalize(g, generate_ensemble(g, cfg, k_grid, threads));
}

}  // namespace richclub
