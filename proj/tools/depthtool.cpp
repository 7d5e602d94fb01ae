#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphd/element_uniqueness.hpp"
#include "sphd/experiment.hpp"
#include "sphd/point_io.hpp"
#include "sphd/simplicial_depth.hpp"
#include "sphd/spherical_depth.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;  // duplicates found
constexpr int exit_usage = 2;     // parse/usage errors

struct DepthArgs {
  std::string kind;
  std::string data_path;
  std::string queries_path;
  std::string inline_query;
  std::string method = "auto";
};

json depth_record(const sphd::Point& q, const sphd::DepthResult& res, const char* method) {
  json rec;
  rec["query"] = std::vector<double>(q.coords().begin(), q.coords().end());
  rec["count"] = res.count;
  rec["total"] = res.total;
  rec["depth"] = res.depth;
  rec["method"] = method;
  return rec;
}

int run_depth(const DepthArgs& args) {
  const sphd::DataSet data = sphd::io::read_points_file(args.data_path);

  std::vector<sphd::Point> queries;
  if (!args.inline_query.empty()) {
    queries.push_back(sphd::io::parse_point(args.inline_query));
  } else {
    const sphd::DataSet qs = sphd::io::read_points_file(args.queries_path);
    queries.reserve(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) queries.push_back(qs.point_at(i));
  }

  const bool planar = data.dim() == 2;
  if (args.kind == "simplicial" && !planar) {
    throw sphd::invalid_input("simplicial depth needs 2-d data");
  }
  if (args.method == "fast2d" && !planar) {
    throw sphd::invalid_input("fast2d needs 2-d data");
  }

  for (const sphd::Point& q : queries) {
    if (q.dim() != data.dim()) {
      throw sphd::invalid_input("query dimension does not match data dimension");
    }
    sphd::DepthResult res;
    const char* used = "naive";
    if (args.kind == "spherical") {
      if (args.method == "naive" || (args.method == "auto" && !planar)) {
        res = sphd::spherical_depth_naive(q, data);
      } else {
        res = sphd::spherical_depth_fast2d(q, data);
        used = "fast2d";
      }
    } else {
      if (args.method == "naive") {
        res = sphd::simplicial_depth_naive(q, data);
      } else if (auto fast = sphd::simplicial_depth_fast2d(q, data)) {
        res = *fast;
        used = "fast2d";
      } else {
        res = sphd::simplicial_depth_naive(q, data);
      }
    }
    std::cout << depth_record(q, res, used).dump() << '\n';
  }
  return exit_ok;
}

int run_unique(const std::string& values_path) {
  const std::vector<double> values = sphd::io::read_values_file(values_path);
  const sphd::UniquenessReport report = sphd::analyze_uniqueness(values);
  json out;
  out["unique"] = report.unique;
  json parts = json::array();
  for (const sphd::PartitionReport& p : report.partitions) {
    json row;
    row["sign"] = std::string(1, p.sign);
    row["m"] = p.m;
    row["count"] = p.count;
    row["expected"] = p.expected;
    parts.push_back(std::move(row));
  }
  out["partitions"] = std::move(parts);
  std::cout << out.dump() << '\n';
  return report.unique ? exit_ok : exit_negative;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    std::size_t value = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size() || value < 2) {
      throw sphd::invalid_input("sizes must be integers >= 2, got '" + field + "'");
    }
    sizes.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical/simplicial data depth toolkit"};
  app.require_subcommand(1);

  DepthArgs depth_args;
  CLI::App* depth = app.add_subcommand("depth", "depth of query points in a data set");
  depth->add_option("--kind", depth_args.kind, "depth notion")
      ->required()
      ->check(CLI::IsMember({"spherical", "simplicial"}));
  depth->add_option("--data", depth_args.data_path, "point file, one comma-separated point per line")
      ->required();
  auto* qfile = depth->add_option("--queries", depth_args.queries_path, "query point file");
  depth->add_option("--query", depth_args.inline_query, "inline query, e.g. \"0,0\"")
      ->excludes(qfile);
  depth->add_option("--method", depth_args.method, "algorithm")
      ->check(CLI::IsMember({"auto", "naive", "fast2d"}));

  std::string values_path;
  CLI::App* unique = app.add_subcommand("unique", "decide element uniqueness of a value file");
  unique->add_option("values", values_path, "file with one decimal value per line")->required();

  sphd::ExperimentConfig cfg;
  std::vector<double> bounds{cfg.low, cfg.high};
  std::string format = "table";
  CLI::App* experiment = app.add_subcommand("experiment", "random-square depth experiment");
  experiment->add_option("--n-data", cfg.n_data, "data set size");
  experiment->add_option("--n-queries", cfg.n_queries, "number of query points");
  experiment->add_option("--seed", cfg.seed, "RNG seed");
  experiment->add_option("--bounds", bounds, "low high coordinate bounds")->expected(2);
  experiment->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string sizes_text;
  std::size_t naive_cutoff = 2000;
  int reps = 3;
  CLI::App* bench = app.add_subcommand("bench", "time the planar algorithms");
  bench->add_option("--sizes", sizes_text, "comma-separated data sizes")->required();
  bench->add_option("--seed", cfg.seed, "RNG seed");
  bench->add_option("--naive-cutoff", naive_cutoff, "largest n the pair scan also runs at");
  bench->add_option("--reps", reps, "timing repetitions per size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (depth->parsed()) {
      if (depth_args.queries_path.empty() && depth_args.inline_query.empty()) {
        throw sphd::invalid_input("one of --queries or --query is required");
      }
      return run_depth(depth_args);
    }
    if (unique->parsed()) {
      return run_unique(values_path);
    }
    if (experiment->parsed()) {
      cfg.low = bounds[0];
      cfg.high = bounds[1];
      const sphd::ExperimentSummary summary = sphd::run_experiment(cfg);
      std::cout << (format == "json" ? sphd::render_json(summary) : sphd::render_table(summary));
      if (format == "json") std::cout << '\n';
      return exit_ok;
    }
    if (bench->parsed()) {
      const sphd::BenchReport report = sphd::run_bench(parse_sizes(sizes_text), cfg, naive_cutoff, reps);
      std::cout << sphd::render_table(report);
      return exit_ok;
    }
  } catch (const sphd::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
