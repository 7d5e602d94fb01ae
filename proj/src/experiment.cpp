#include "sphd/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "sphd/rng.hpp"
#include "sphd/simplicial_depth.hpp"
#include "sphd/spherical_depth.hpp"

namespace sphd {

namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_data < 3) throw invalid_input("experiment needs at least 3 data points");
  if (cfg.n_queries < 1) throw invalid_input("experiment needs at least 1 query");
  if (!(cfg.low < cfg.high) || !std::isfinite(cfg.low) || !std::isfinite(cfg.high)) {
    throw invalid_input("bounds must be finite with low < high");
  }
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

template <typename F>
double time_ms(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

DataSet generate_uniform_square(std::size_t count, const ExperimentConfig& cfg,
                                std::uint64_t stream_tag) {
  Rng rng(cfg.seed, stream_tag);
  std::vector<double> flat;
  flat.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i) {
    flat.push_back(rng.uniform(cfg.low, cfg.high));
    flat.push_back(rng.uniform(cfg.low, cfg.high));
  }
  return DataSet::from_flat(2, std::move(flat));
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const DataSet data = generate_uniform_square(cfg.n_data, cfg, data_stream);
  const DataSet queries = generate_uniform_square(cfg.n_queries, cfg, query_stream);

  ExperimentSummary summary;
  summary.config = cfg;
  summary.per_query.reserve(cfg.n_queries);

  for (std::size_t i = 0; i < queries.size(); ++i) {
    const Point q = queries.point_at(i);
    const double sd = simplicial_depth(q, data).depth;
    const double sphd = spherical_depth_fast2d(q, data).depth;
    QueryOutcome row{q, sd, sphd, std::nullopt};
    if (sd > 0.0) row.ratio = sphd / sd;
    summary.per_query.push_back(std::move(row));
  }

  auto fold = [](ColumnStats& stats, double v, bool first) {
    if (first) {
      stats = {v, v};
    } else {
      stats.min = std::min(stats.min, v);
      stats.max = std::max(stats.max, v);
    }
  };
  for (std::size_t i = 0; i < summary.per_query.size(); ++i) {
    const QueryOutcome& row = summary.per_query[i];
    fold(summary.simplicial, row.simplicial, i == 0);
    fold(summary.spherical, row.spherical, i == 0);
    if (row.ratio) {
      if (!summary.ratio) {
        summary.ratio = ColumnStats{*row.ratio, *row.ratio};
      } else {
        fold(*summary.ratio, *row.ratio, false);
      }
    } else {
      ++summary.infinite_ratios;
    }
  }
  return summary;
}

std::string render_json(const ExperimentSummary& summary) {
  using json = nlohmann::ordered_json;
  json out;
  out["config"] = {{"n_data", summary.config.n_data},
                   {"n_queries", summary.config.n_queries},
                   {"seed", summary.config.seed},
                   {"bounds", {summary.config.low, summary.config.high}}};
  out["sd"] = {{"min", summary.simplicial.min}, {"max", summary.simplicial.max}};
  out["sphd"] = {{"min", summary.spherical.min}, {"max", summary.spherical.max}};
  json ratio;
  if (summary.ratio) {
    ratio["min"] = summary.ratio->min;
    ratio["max"] = summary.infinite_ratios > 0 ? json("inf") : json(summary.ratio->max);
  } else {
    ratio["min"] = "inf";
    ratio["max"] = "inf";
  }
  ratio["infinite"] = summary.infinite_ratios;
  out["ratio"] = ratio;
  json rows = json::array();
  for (const QueryOutcome& row : summary.per_query) {
    json r;
    r["query"] = {row.query.x(), row.query.y()};
    r["sd"] = row.simplicial;
    r["sphd"] = row.spherical;
    if (row.ratio) {
      r["ratio"] = *row.ratio;
    } else {
      r["ratio"] = "inf";
    }
    rows.push_back(std::move(r));
  }
  out["per_query"] = std::move(rows);
  return out.dump();
}

std::string render_table(const ExperimentSummary& summary) {
  const std::string ratio_min = summary.ratio ? fixed2(summary.ratio->min) : "inf";
  const std::string ratio_max =
      summary.infinite_ratios > 0 ? "inf" : fixed2(summary.ratio ? summary.ratio->max : 0.0);
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-9s%8s%8s\n", "", "Min", "Max");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-9s%8s%8s\n", "SD", fixed2(summary.simplicial.min).c_str(),
                fixed2(summary.simplicial.max).c_str());
  out += buf;
  std::snprintf(buf, sizeof buf, "%-9s%8s%8s\n", "SphD", fixed2(summary.spherical.min).c_str(),
                fixed2(summary.spherical.max).c_str());
  out += buf;
  std::snprintf(buf, sizeof buf, "%-9s%8s%8s\n", "SphD/SD", ratio_min.c_str(), ratio_max.c_str());
  out += buf;
  return out;
}

BenchReport run_bench(const std::vector<std::size_t>& sizes,
                      const ExperimentConfig& cfg, std::size_t naive_cutoff,
                      int reps) {
  if (reps < 1) throw invalid_input("bench needs at least one repetition");
  BenchReport report;
  for (std::size_t n : sizes) {
    if (n < 2) throw invalid_input("bench sizes must be at least 2");
    ExperimentConfig gen = cfg;
    gen.n_data = n;
    const DataSet data = generate_uniform_square(n, gen, data_stream);
    const Point q = generate_uniform_square(1, gen, query_stream).point_at(0);

    BenchRow row;
    row.n = n;

    std::uint64_t fast_count = 0;
    std::vector<double> fast_times;
    for (int r = 0; r < reps; ++r) {
      fast_times.push_back(time_ms([&] { fast_count = spherical_depth_fast2d(q, data).count; }));
    }
    row.fast_ms = median_of(std::move(fast_times));

    if (n <= naive_cutoff) {
      std::uint64_t naive_count = 0;
      std::vector<double> naive_times;
      for (int r = 0; r < reps; ++r) {
        naive_times.push_back(time_ms([&] { naive_count = spherical_depth_naive(q, data).count; }));
      }
      row.naive_ms = median_of(std::move(naive_times));
      row.counts_agree = naive_count == fast_count;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string render_table(const BenchReport& report) {
  std::string out = "         n    naive_ms     fast_ms  agree\n";
  char buf[128];
  for (const BenchRow& row : report.rows) {
    const std::string naive = row.naive_ms ? fixed2(*row.naive_ms) : "-";
    const std::string agree = row.counts_agree ? (*row.counts_agree ? "yes" : "NO") : "-";
    std::snprintf(buf, sizeof buf, "%10zu%12s%12s%7s\n", row.n, naive.c_str(),
                  fixed2(row.fast_ms).c_str(), agree.c_str());
    out += buf;
  }
  return out;
}

}  // namespace sphd
