// nwt: batch CLI for node-weighted triangle detection, counting and
// minimization. Reports are single-line JSON records; bench emits CSV.
// Exit codes: 0 found/success, 1 not found (or verify mismatch), 2 input error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nwt/nwt.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The weight domain is picked from the input itself: any '/' in a vertex
// weight (or in the target) selects the exact-rational instantiation.
bool wants_rational(const std::string& text, const std::string& target_text) {
  if (target_text.find('/') != std::string::npos) return true;
  std::istringstream in(text);
  std::string line;
  long long remaining_vertices = -1;
  while (std::getline(in, line)) {
    if (nwt::detail::is_comment_or_blank(line)) continue;
    const auto toks = nwt::detail::tokens_of(line);
    if (remaining_vertices < 0) {
      if (toks.empty()) return false;
      const auto n = nwt::detail::parse_int(toks[0]);
      if (!n) return false;
      remaining_vertices = *n;
      continue;
    }
    if (remaining_vertices == 0) return false;
    if (toks.size() >= 2 && toks[1].find('/') != std::string::npos) return true;
    --remaining_vertices;
  }
  return false;
}

template <class W>
W parse_target_or_die(const std::string& text) {
  W value{};
  if (nwt::WeightTraits<W>::parse(text, value) != nwt::WeightParseStatus::ok)
    throw std::runtime_error("invalid target '" + text + "'");
  return value;
}

template <class W>
std::string sum_json(const W& sum);

template <>
std::string sum_json<std::int64_t>(const std::int64_t& sum) {
  return std::to_string(sum);
}

template <>
std::string sum_json<nwt::Rational>(const nwt::Rational& sum) {
  return '"' + sum.str() + '"';
}

template <class W>
std::string witness_json(const nwt::TriangleWitness<W>& w) {
  int ids[3] = {w.x, w.y, w.z};
  std::sort(std::begin(ids), std::end(ids));
  std::ostringstream out;
  out << "{\"found\":true,\"witness\":[" << ids[0] << ',' << ids[1] << ','
      << ids[2] << "],\"sum\":" << sum_json<W>(w.weight_sum);
  return out.str();
}

nwt::WeightDistribution parse_distribution(const std::string& name) {
  if (name == "uniform") return nwt::WeightDistribution::uniform;
  if (name == "zipf") return nwt::WeightDistribution::zipf;
  if (name == "constant") return nwt::WeightDistribution::constant;
  throw std::runtime_error("unknown distribution '" + name + "'");
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
  std::int64_t v = 0;
  if (nwt::WeightTraits<std::int64_t>::parse(text, v) != nwt::WeightParseStatus::ok)
    throw std::runtime_error(std::string("invalid ") + what + " '" + text + "'");
  return v;
}

struct DetectArgs {
  std::string path;
  std::string target = "0";
  bool sparse = false;
  std::optional<std::uint64_t> delta;
};

template <class W>
int run_detect(const std::string& text, const DetectArgs& args) {
  const auto g = nwt::parse_graph_text<W>(text);
  const W target = parse_target_or_die<W>(args.target);
  nwt::CostLedger ledger;
  std::optional<nwt::TriangleWitness<W>> witness;
  if (args.sparse) {
    std::optional<std::size_t> delta;
    if (args.delta) delta = static_cast<std::size_t>(*args.delta);
    witness = nwt::detect_sparse(g, target, delta, ledger);
  } else {
    witness = nwt::detect(g, target, ledger);
  }
  if (!witness) {
    std::cout << "{\"found\":false}\n";
    return 1;
  }
  std::cout << witness_json(*witness) << "}\n";
  return 0;
}

template <class W>
int run_count(const std::string& text, const std::string& target_text) {
  const auto g = nwt::parse_graph_text<W>(text);
  const W target = parse_target_or_die<W>(target_text);
  nwt::CostLedger ledger;
  const nwt::CountBreakdown b = nwt::count(g, target, ledger);
  std::cout << "{\"total\":" << b.total << ",\"type1\":" << b.type1
            << ",\"type2\":" << b.type2 << ",\"type3\":" << b.type3
            << ",\"raw_type1\":" << b.raw_type1
            << ",\"raw_type2\":" << b.raw_type2 << "}\n";
  return 0;
}

int run_min(const std::string& text, bool maximize) {
  auto g = nwt::parse_graph_text<std::int64_t>(text);
  if (maximize)
    for (int v = 0; v < g.vertex_count(); ++v) g.set_weight(v, -g.weight(v));
  nwt::CostLedger ledger;
  nwt::MinStats stats;
  const auto best = nwt::min_triangle(g, ledger, &stats);
  if (!best) {
    std::cout << "{\"found\":false}\n";
    return 1;
  }
  const std::int64_t sum = maximize ? -best->second : best->second;
  nwt::TriangleWitness<std::int64_t> w = best->first;
  w.weight_sum = sum;
  std::cout << witness_json(w) << ",\"detect_calls\":" << stats.detect_calls
            << "}\n";
  return 0;
}

struct GenArgs {
  std::int64_t n = 0;
  double p = 0.0;
  std::string wmin = "-8", wmax = "8";
  std::uint64_t seed = 0;
  std::string dist = "uniform";
  std::string out;
  std::string format = "graph";
};

int run_gen(const GenArgs& args) {
  const auto g = nwt::generate_random<std::int64_t>(
      static_cast<int>(args.n), args.p, parse_i64(args.wmin, "weight"),
      parse_i64(args.wmax, "weight"), args.seed, parse_distribution(args.dist));
  std::ostringstream body;
  if (args.format == "graph") {
    nwt::serialize_graph(g, body);
  } else if (args.format == "json") {
    body << "{\"n\":" << g.vertex_count() << ",\"m\":" << g.edge_count()
         << ",\"weights\":[";
    for (int v = 0; v < g.vertex_count(); ++v)
      body << (v ? "," : "") << g.weight(v);
    body << "],\"edges\":[";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i)
      body << (i ? "," : "") << '[' << edges[i].first << ',' << edges[i].second
           << ']';
    body << "]}\n";
  } else {
    throw std::runtime_error("unknown format '" + args.format + "'");
  }
  if (args.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
    out << body.str();
  }
  return 0;
}

struct VerifyArgs {
  std::string path;  // single-instance mode when nonempty
  std::int64_t n = 50;
  double p = 0.3;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  std::string wmin = "-8", wmax = "8";
  std::string dist = "uniform";
  std::string target = "0";
};

// Runs detection, counting and minimization through both the pipeline and the
// brute-force oracle and reports agreement.
bool verify_instance(const nwt::WeightedGraph<std::int64_t>& g,
                     std::int64_t target, std::string* why) {
  nwt::CostLedger ledger;
  const auto fast = nwt::detect(g, target, ledger);
  const auto slow = nwt::oracle::brute_detect(g, target);
  if (fast.has_value() != slow.has_value()) {
    *why = "detect disagrees";
    return false;
  }
  if (fast) {
    const bool edges_ok = g.has_edge(fast->x, fast->y) &&
                          g.has_edge(fast->y, fast->z) &&
                          g.has_edge(fast->x, fast->z);
    if (!edges_ok || fast->weight_sum != target) {
      *why = "invalid witness";
      return false;
    }
  }
  if (nwt::count(g, target, ledger).total !=
      nwt::oracle::brute_count(g, target).total) {
    *why = "count disagrees";
    return false;
  }
  const auto fast_min = nwt::min_triangle(g, ledger);
  const auto slow_min = nwt::oracle::brute_min(g);
  if (fast_min.has_value() != slow_min.has_value() ||
      (fast_min && fast_min->second != slow_min->second)) {
    *why = "min disagrees";
    return false;
  }
  return true;
}

int run_verify(const VerifyArgs& args) {
  std::int64_t agree = 0;
  std::int64_t total = 0;
  if (!args.path.empty()) {
    const auto g = nwt::parse_graph_text<std::int64_t>(read_input(args.path));
    total = 1;
    std::string why;
    if (verify_instance(g, parse_i64(args.target, "target"), &why))
      ++agree;
    else
      std::cerr << "mismatch: " << why << "\n";
  } else {
    total = args.trials;
    for (std::int64_t t = 0; t < args.trials; ++t) {
      const auto g = nwt::generate_random<std::int64_t>(
          static_cast<int>(args.n), args.p, parse_i64(args.wmin, "weight"),
          parse_i64(args.wmax, "weight"), args.seed + static_cast<std::uint64_t>(t),
          parse_distribution(args.dist));
      std::string why;
      if (verify_instance(g, parse_i64(args.target, "target"), &why))
        ++agree;
      else
        std::cerr << "mismatch on trial " << t << ": " << why << "\n";
    }
  }
  std::cout << agree << "/" << total << " agree\n";
  return agree == total ? 0 : 1;
}

struct BenchArgs {
  std::string n_list = "100";
  std::string p_list = "0.5";
  std::string dist_list = "uniform";
  std::string mode = "detect";
  std::int64_t seeds = 1;
  std::uint64_t seed = 0;
  std::string wmin = "-8", wmax = "8";
  std::string target = "0";
  std::optional<std::uint64_t> delta;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  std::ostringstream csv;
  csv << "n,m,mode,wall_time_ns,word_ops,sum_XY_YZ_XZ,detect_calls,result\n";
  const std::int64_t target = parse_i64(args.target, "target");
  for (const auto& n_text : split_list(args.n_list)) {
    const std::int64_t n = parse_i64(n_text, "n");
    for (const auto& p_text : split_list(args.p_list)) {
      const double p = std::stod(p_text);
      for (const auto& dist_name : split_list(args.dist_list)) {
        for (std::int64_t s = 0; s < args.seeds; ++s) {
          const auto g = nwt::generate_random<std::int64_t>(
              static_cast<int>(n), p, parse_i64(args.wmin, "weight"),
              parse_i64(args.wmax, "weight"),
              args.seed + static_cast<std::uint64_t>(s),
              parse_distribution(dist_name));
          nwt::CostLedger ledger;
          std::string result;
          std::size_t detect_calls = 0;
          const auto t0 = std::chrono::steady_clock::now();
          if (args.mode == "detect") {
            result = nwt::detect(g, target, ledger) ? "found" : "none";
            detect_calls = 1;
          } else if (args.mode == "sparse") {
            std::optional<std::size_t> delta;
            if (args.delta) delta = static_cast<std::size_t>(*args.delta);
            nwt::SparseStats stats;
            result = nwt::detect_sparse(g, target, delta, ledger, &stats)
                         ? "found"
                         : "none";
            detect_calls = stats.dense_stage_ran ? 1 : 0;
          } else if (args.mode == "count") {
            result = std::to_string(nwt::count(g, target, ledger).total);
          } else if (args.mode == "min") {
            nwt::MinStats stats;
            const auto best = nwt::min_triangle(g, ledger, &stats);
            detect_calls = stats.detect_calls;
            result = best ? std::to_string(best->second) : "none";
          } else {
            throw std::runtime_error("unknown mode '" + args.mode + "'");
          }
          const auto t1 = std::chrono::steady_clock::now();
          csv << n << ',' << g.edge_count() << ',' << args.mode << ','
              << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                     .count()
              << ',' << ledger.total_word_ops() << ',' << ledger.slice_dim_sum()
              << ',' << detect_calls << ',' << result << '\n';
        }
      }
    }
  }
  if (args.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"node-weighted triangle detection, counting and minimization"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads (results are identical for any value)")
      ->capture_default_str();

  // --threads may appear after the subcommand too
  const auto with_fallthrough = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  DetectArgs detect_args;
  auto* cmd_detect = with_fallthrough(app.add_subcommand("detect", "find a triangle with node-weight sum equal to the target"));
  cmd_detect->add_option("input", detect_args.path, "graph file, or - for stdin")->required();
  cmd_detect->add_option("--target", detect_args.target, "target sum (integer or p/q)")->capture_default_str();
  cmd_detect->add_flag("--sparse", detect_args.sparse, "use the degree-split path");
  cmd_detect->add_option("--delta", detect_args.delta, "degree threshold for --sparse");

  std::string count_path, count_target = "0";
  auto* cmd_count = with_fallthrough(app.add_subcommand("count", "count triangles with node-weight sum equal to the target"));
  cmd_count->add_option("input", count_path, "graph file, or - for stdin")->required();
  cmd_count->add_option("--target", count_target, "target sum (integer or p/q)")->capture_default_str();

  std::string min_path;
  bool min_maximize = false;
  auto* cmd_min = with_fallthrough(app.add_subcommand("min", "find the triangle minimizing the node-weight sum (integer weights)"));
  cmd_min->add_option("input", min_path, "graph file, or - for stdin")->required();
  cmd_min->add_flag("--maximize", min_maximize, "maximize instead (negated weights)");

  GenArgs gen_args;
  auto* cmd_gen = with_fallthrough(app.add_subcommand("gen", "generate a random weighted graph"));
  cmd_gen->add_option("--n", gen_args.n, "vertex count")->required();
  cmd_gen->add_option("--p", gen_args.p, "edge probability")->required();
  cmd_gen->add_option("--wmin", gen_args.wmin, "minimum weight")->capture_default_str();
  cmd_gen->add_option("--wmax", gen_args.wmax, "maximum weight")->capture_default_str();
  cmd_gen->add_option("--seed", gen_args.seed, "random seed")->capture_default_str();
  cmd_gen->add_option("--dist", gen_args.dist, "uniform|zipf|constant")->capture_default_str();
  cmd_gen->add_option("--out", gen_args.out, "output path (default stdout)");
  cmd_gen->add_option("--format", gen_args.format, "graph|json")->capture_default_str();

  VerifyArgs verify_args;
  auto* cmd_verify = with_fallthrough(app.add_subcommand("verify", "cross-check the pipeline against the brute-force oracle"));
  cmd_verify->add_option("input", verify_args.path, "graph file to verify (omit to use random trials)");
  cmd_verify->add_option("--n", verify_args.n, "vertices per trial")->capture_default_str();
  cmd_verify->add_option("--p", verify_args.p, "edge probability")->capture_default_str();
  cmd_verify->add_option("--trials", verify_args.trials, "number of random trials")->capture_default_str();
  cmd_verify->add_option("--seed", verify_args.seed, "base seed")->capture_default_str();
  cmd_verify->add_option("--wmin", verify_args.wmin, "minimum weight")->capture_default_str();
  cmd_verify->add_option("--wmax", verify_args.wmax, "maximum weight")->capture_default_str();
  cmd_verify->add_option("--dist", verify_args.dist, "uniform|zipf|constant")->capture_default_str();
  cmd_verify->add_option("--target", verify_args.target, "target sum")->capture_default_str();

  BenchArgs bench_args;
  auto* cmd_bench = with_fallthrough(app.add_subcommand("bench", "run a benchmark suite and emit CSV"));
  cmd_bench->add_option("--n", bench_args.n_list, "comma list of vertex counts")->capture_default_str();
  cmd_bench->add_option("--p", bench_args.p_list, "comma list of edge probabilities")->capture_default_str();
  cmd_bench->add_option("--dist", bench_args.dist_list, "comma list of distributions")->capture_default_str();
  cmd_bench->add_option("--mode", bench_args.mode, "detect|count|min|sparse")->capture_default_str();
  cmd_bench->add_option("--seeds", bench_args.seeds, "seeds per configuration")->capture_default_str();
  cmd_bench->add_option("--seed", bench_args.seed, "base seed")->capture_default_str();
  cmd_bench->add_option("--wmin", bench_args.wmin, "minimum weight")->capture_default_str();
  cmd_bench->add_option("--wmax", bench_args.wmax, "maximum weight")->capture_default_str();
  cmd_bench->add_option("--target", bench_args.target, "target sum")->capture_default_str();
  cmd_bench->add_option("--delta", bench_args.delta, "degree threshold for sparse mode");
  cmd_bench->add_option("--out", bench_args.out, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  nwt::set_thread_count(threads);

  try {
    if (cmd_detect->parsed()) {
      const std::string text = read_input(detect_args.path);
      return wants_rational(text, detect_args.target)
                 ? run_detect<nwt::Rational>(text, detect_args)
                 : run_detect<std::int64_t>(text, detect_args);
    }
    if (cmd_count->parsed()) {
      const std::string text = read_input(count_path);
      return wants_rational(text, count_target)
                 ? run_count<nwt::Rational>(text, count_target)
                 : run_count<std::int64_t>(text, count_target);
    }
    if (cmd_min->parsed()) return run_min(read_input(min_path), min_maximize);
    if (cmd_gen->parsed()) return run_gen(gen_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
