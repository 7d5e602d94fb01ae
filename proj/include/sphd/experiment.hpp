#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphd/dataset.hpp"

namespace sphd {

struct ExperimentConfig {
  std::size_t n_data = 750;
  std::size_t n_queries = 100;
  std::uint64_t seed = 42;
  double low = -10.0;
  double high = 10.0;
};

// Stream tags keep the data and query draws independent, so changing one
// count never shifts the other set.
inline constexpr std::uint64_t data_stream = 1;
inline constexpr std::uint64_t query_stream = 2;

// count i.i.d. points with coordinates uniform on [low, high); deterministic
// for a fixed (seed, stream_tag).
DataSet generate_uniform_square(std::size_t count, const ExperimentConfig& cfg,
                                std::uint64_t stream_tag);

// One query's depths; ratio is empty when the simplicial depth is zero
// (reported as infinite).
struct QueryOutcome {
  Point query;
  double simplicial = 0.0;
  double spherical = 0.0;
  std::optional<double> ratio;
};

struct ColumnStats {
  double min = 0.0;
  double max = 0.0;
};

struct ExperimentSummary {
  ExperimentConfig config;
  std::vector<QueryOutcome> per_query;
  ColumnStats simplicial;
  ColumnStats spherical;
  std::optional<ColumnStats> ratio;  // over finite ratios; empty if none
  std::size_t infinite_ratios = 0;
};

// Both depths for every query point, plus min/max summaries of the depths
// and of their finite ratios.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

std::string render_json(const ExperimentSummary& summary);
std::string render_table(const ExperimentSummary& summary);

struct BenchRow {
  std::size_t n = 0;
  std::optional<double> naive_ms;  // absent above the cutoff
  double fast_ms = 0.0;
  std::optional<bool> counts_agree;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Median-of-reps wall-clock timing of the planar algorithms on generated
// data; the pair scan also runs (and is cross-checked) up to naive_cutoff.
BenchReport run_bench(const std::vector<std::size_t>& sizes,
                      const ExperimentConfig& cfg, std::size_t naive_cutoff,
                      int reps = 3);

std::string render_table(const BenchReport& report);

}  // namespace sphd
