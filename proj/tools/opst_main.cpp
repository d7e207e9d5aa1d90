// Command-line front end: ingest series, build and persist indexes, mine
// patterns, cross-check miners against the reference oracles, export
// feature matrices and benchmark tables.  Data goes to the output stream,
// diagnostics to the error stream; exit 0 means the command succeeded.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opst/baseline.hpp"
#include "opst/codes.hpp"
#include "opst/lca.hpp"
#include "opst/mine.hpp"
#include "opst/oracle.hpp"
#include "opst/rand.hpp"
#include "opst/series_io.hpp"
#include "opst/tree.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Options {
  std::string input;
  std::string format = "plain";
  std::string column;
  std::string output;
  std::string index;
  std::string mode;
  std::int64_t tau = 0;
  std::uint64_t seed = 12345;
  std::uint64_t instances = 1000;
  std::uint64_t max_n = 40;
  std::uint64_t max_sigma = 6;
  std::uint64_t bench_max_n = std::uint64_t{1} << 20;
  std::uint64_t bench_max_sigma = 4096;
  bool inject_fault = false;
};

// Data stream: --output path, or stdout when empty or "-".
class DataOut {
 public:
  explicit DataOut(const std::string& path) {
    if (path.empty() || path == "-") {
      out_ = &std::cout;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

void require_tau(std::int64_t tau) {
  if (tau < 2) throw std::runtime_error("--tau must be at least 2");
}

opst::Series random_series(opst::SplitMix64& rng, std::size_t n, opst::Letter sigma) {
  opst::Series s;
  s.sigma = sigma;
  s.letters.reserve(n);
  for (std::size_t t = 0; t < n; ++t)
    s.letters.push_back(
        static_cast<opst::Letter>(rng.below(static_cast<std::uint64_t>(sigma))));
  return s;
}

nlohmann::ordered_json report_record(const opst::OpSuffixTree& t,
                                     const opst::PatternReport& r) {
  auto [pc, ranks] = opst::decode_report(t, r);
  nlohmann::ordered_json j;
  j["witness_start"] = r.witness_start;
  j["length"] = r.length;
  j["frequency"] = r.frequency;
  j["prefcode"] = pc.str();
  j["ranks"] = ranks;
  return j;
}

std::vector<opst::PrefCode> canonical_set(const opst::OpSuffixTree& t,
                                          const std::vector<opst::PatternReport>& rs) {
  std::vector<opst::PrefCode> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(opst::decode_report(t, r).first);
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_set(const std::vector<opst::PrefCode>& set) {
  if (set.empty()) return "(empty)";
  std::string out;
  for (const auto& p : set) {
    if (!out.empty()) out += ' ';
    out += p.str();
  }
  return out;
}

int run_build(const Options& o) {
  if (o.output.empty() || o.output == "-")
    throw std::runtime_error("build needs --output for the index file");
  const opst::Series s = opst::load_series(o.input, o.format, o.column);
  const auto t0 = Clock::now();
  const opst::OpSuffixTree tree = opst::OpSuffixTree::build(s);
  const double build_s = seconds_since(t0);
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + o.output + "'");
  tree.save(out);
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + o.output + "'");
  std::cerr << "n=" << tree.n() << " sigma=" << tree.sigma()
            << " nodes=" << tree.node_count() << " build_seconds=" << build_s
            << " memory_bytes=" << tree.memory_bytes() << '\n';
  return 0;
}

int run_mine(const Options& o) {
  require_tau(o.tau);
  if (o.input.empty() == o.index.empty())
    throw std::runtime_error("mine needs exactly one of --input or --index");

  const auto t0 = Clock::now();
  opst::OpSuffixTree tree = [&] {
    if (!o.index.empty()) {
      std::ifstream in(o.index, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open '" + o.index + "'");
      return opst::OpSuffixTree::load(in);
    }
    return opst::OpSuffixTree::build(opst::load_series(o.input, o.format, o.column));
  }();
  const double prep_s = seconds_since(t0);

  const auto t1 = Clock::now();
  opst::MiningResult result;
  if (o.mode == "maximal") {
    result = opst::mine_maximal(tree, {o.tau});
  } else {
    const opst::LcaIndex ix(tree);
    result = opst::mine_closed(tree, ix, {o.tau});
  }
  const double mine_s = seconds_since(t1);

  DataOut out(o.output);
  for (const auto& r : result.reports)
    out.stream() << report_record(tree, r).dump() << '\n';
  out.stream().flush();
  if (!out.stream()) throw std::runtime_error("pattern output failed");

  const double total = prep_s + mine_s;
  std::cerr << (o.index.empty() ? "build_seconds=" : "load_seconds=") << prep_s
            << " mine_seconds=" << mine_s << " mine_share="
            << (total > 0 ? 100.0 * mine_s / total : 0.0) << "%"
            << " patterns=" << result.reports.size() << '\n';
  return 0;
}

struct CheckInstance {
  opst::Series w;
  std::int64_t tau = 2;
};

std::vector<CheckInstance> make_instances(const Options& o) {
  opst::SplitMix64 rng(o.seed);
  static constexpr std::int64_t kTaus[3] = {2, 3, 5};
  std::vector<CheckInstance> out;
  out.reserve(o.instances);
  for (std::uint64_t k = 0; k < o.instances; ++k) {
    const auto n = static_cast<std::size_t>(
        rng.range(2, static_cast<std::int64_t>(o.max_n)));
    const auto sigma = static_cast<opst::Letter>(
        rng.range(1, static_cast<std::int64_t>(o.max_sigma)));
    opst::Series s = random_series(rng, n, sigma);
    const std::int64_t tau = o.tau >= 2 ? o.tau : kTaus[rng.below(3)];
    out.push_back({std::move(s), tau});
  }
  return out;
}

// Empty result means every comparison agreed.
std::string check_one(const CheckInstance& inst, bool tamper) {
  const opst::Series& w = inst.w;
  const std::int64_t tau = inst.tau;

  opst::OpSuffixTree tree = opst::OpSuffixTree::build(w);
  const auto mm = opst::mine_maximal(tree, {tau});
  const opst::LcaIndex ix(tree);
  const auto mc = opst::mine_closed(tree, ix, {tau});
  std::vector<opst::PrefCode> tree_max = canonical_set(tree, mm.reports);
  const std::vector<opst::PrefCode> tree_clo = canonical_set(tree, mc.reports);
  if (tamper) {
    if (!tree_max.empty())
      tree_max.pop_back();
    else
      tree_max.push_back(opst::parse_pref_code("(-1,-1)"));
  }

  const opst::WaveletOracle oracle(w);
  const auto lw_max = opst::levelwise_maximal(w, oracle, tau);
  const auto lw_clo = opst::levelwise_closed(w, oracle, tau);
  const auto bf = opst::brute_force_mine(w, tau);

  std::string diff;
  auto expect = [&](const std::vector<opst::PrefCode>& got,
                    const std::vector<opst::PrefCode>& want, const char* what) {
    if (diff.empty() && got != want)
      diff = std::string(what) + "\n  got:      " + join_set(got) +
             "\n  expected: " + join_set(want);
  };
  expect(tree_max, bf.maximal, "tree maximal vs brute force");
  expect(lw_max, bf.maximal, "levelwise maximal vs brute force");
  expect(tree_clo, bf.closed, "tree closed vs brute force");
  expect(lw_clo, bf.closed, "levelwise closed vs brute force");
  if (diff.empty() &&
      !std::includes(tree_clo.begin(), tree_clo.end(), tree_max.begin(),
                     tree_max.end()))
    diff = "maximal set not contained in closed set\n  maximal: " +
           join_set(tree_max) + "\n  closed:  " + join_set(tree_clo);
  return diff;
}

int run_check(const Options& o) {
  if (o.max_n < 2 || o.max_n > 64)
    throw std::runtime_error("--max-n must be in [2, 64] for check");
  if (o.max_sigma < 1) throw std::runtime_error("--max-sigma must be positive");
  if (o.tau != 0) require_tau(o.tau);
  if (o.instances == 0) throw std::runtime_error("--instances must be positive");

  const std::vector<CheckInstance> instances = make_instances(o);
  std::vector<std::string> verdicts(instances.size());
  const auto t0 = Clock::now();
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(instances.size()); ++k) {
    try {
      verdicts[static_cast<std::size_t>(k)] =
          check_one(instances[static_cast<std::size_t>(k)],
                    o.inject_fault && k == 0);
    } catch (const std::exception& e) {
      verdicts[static_cast<std::size_t>(k)] = std::string("exception: ") + e.what();
    }
  }
  const double total_s = seconds_since(t0);

  DataOut out(o.output);
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    if (verdicts[k].empty()) continue;
    const CheckInstance& inst = instances[k];
    out.stream() << "divergence at instance " << k << "\n";
    out.stream() << "series:";
    for (opst::Letter v : inst.w.letters) out.stream() << ' ' << v;
    out.stream() << "\nsigma: " << inst.w.sigma << "\ntau: " << inst.tau << "\n"
                 << verdicts[k] << "\n";
    out.stream() << "reproduce: opst check --seed " << o.seed << " --instances "
                 << k + 1 << " --max-n " << o.max_n << " --max-sigma "
                 << o.max_sigma << (o.tau ? " --tau " + std::to_string(o.tau) : "")
                 << '\n';
    out.stream().flush();
    std::cerr << "checked " << verdicts.size() << " instances in " << total_s
              << "s: divergence found\n";
    return 1;
  }
  out.stream() << "all " << verdicts.size() << " instances equivalent\n";
  out.stream().flush();
  std::cerr << "checked " << verdicts.size() << " instances in " << total_s
            << "s\n";
  return 0;
}

int run_features(const Options& o) {
  namespace fs = std::filesystem;

  std::vector<opst::PrefCode> patterns;
  if (!isatty(STDIN_FILENO)) patterns = opst::read_patterns(std::cin, "stdin");
  if (patterns.empty() && !o.index.empty()) {
    require_tau(o.tau);
    std::ifstream in(o.index, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + o.index + "'");
    opst::OpSuffixTree tree = opst::OpSuffixTree::load(in);
    const opst::LcaIndex ix(tree);
    for (const auto& r : opst::mine_closed(tree, ix, {o.tau}).reports)
      patterns.push_back(opst::decode_report(tree, r).first);
  }
  if (patterns.empty())
    throw std::runtime_error(
        "empty pattern set: pipe mine output on stdin or give --index with --tau");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.input)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (!name.empty() && name[0] == '.') continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty())
    throw std::runtime_error("no series files in '" + o.input + "'");

  std::vector<opst::Series> series;
  series.reserve(files.size());
  for (const auto& f : files)
    series.push_back(opst::load_series(f.string(), o.format, o.column));

  const auto matrix = opst::feature_matrix(series, patterns);

  DataOut out(o.output);
  for (std::size_t p = 0; p < patterns.size(); ++p)
    out.stream() << (p ? "," : "") << opst::csv_field(patterns[p].str());
  out.stream() << '\n';
  for (std::size_t s = 0; s < matrix.size(); ++s) {
    for (std::size_t p = 0; p < matrix[s].size(); ++p)
      out.stream() << (p ? "," : "") << matrix[s][p];
    out.stream() << '\n';
    std::cerr << "row " << s + 1 << ": " << files[s].filename().string() << '\n';
  }
  out.stream().flush();
  if (!out.stream()) throw std::runtime_error("feature output failed");
  return 0;
}

int run_bench(const Options& o) {
  const std::int64_t tau = o.tau == 0 ? 10 : o.tau;
  require_tau(tau);

  std::vector<std::pair<std::size_t, opst::Letter>> runs;
  const auto def_sigma =
      static_cast<opst::Letter>(std::min<std::uint64_t>(256, o.bench_max_sigma));
  for (std::size_t n = std::size_t{1} << 16; n <= (std::size_t{1} << 20); n <<= 1)
    if (n <= o.bench_max_n) runs.emplace_back(n, def_sigma);
  if (runs.empty())
    runs.emplace_back(static_cast<std::size_t>(o.bench_max_n), def_sigma);
  const std::size_t sweep_n = std::min<std::size_t>(
      std::size_t{1} << 19, static_cast<std::size_t>(o.bench_max_n));
  for (opst::Letter sg : {4, 64, 1024, 4096}) {
    if (static_cast<std::uint64_t>(sg) > o.bench_max_sigma) continue;
    const auto run = std::make_pair(sweep_n, sg);
    if (std::find(runs.begin(), runs.end(), run) == runs.end()) runs.push_back(run);
  }

  DataOut out(o.output);
  out.stream()
      << "n,sigma,build_seconds,mine_maximal_seconds,mine_closed_seconds,memory_bytes\n";
  for (const auto& [n, sigma] : runs) {
    opst::SplitMix64 rng(o.seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b9ULL) ^
                         static_cast<std::uint64_t>(sigma));
    const opst::Series s = random_series(rng, n, sigma);

    const auto t0 = Clock::now();
    opst::OpSuffixTree tree = opst::OpSuffixTree::build(s);
    const double build_s = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto mm = opst::mine_maximal(tree, {tau});
    const double max_s = seconds_since(t1);

    const auto t2 = Clock::now();
    const opst::LcaIndex ix(tree);
    const auto mc = opst::mine_closed(tree, ix, {tau});
    const double clo_s = seconds_since(t2);

    out.stream() << n << ',' << sigma << ',' << build_s << ',' << max_s << ','
                 << clo_s << ',' << tree.memory_bytes() << '\n';
    out.stream().flush();
    std::cerr << "n=" << n << " sigma=" << sigma << " build=" << build_s
              << "s maximal=" << mm.reports.size()
              << " closed=" << mc.reports.size() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Order-preserving suffix tree indexing and pattern mining"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* cmd, bool required, bool directory) {
    auto* opt = cmd->add_option("--input", o.input,
                                directory ? "Directory of series files"
                                          : "Series file");
    if (directory)
      opt->check(CLI::ExistingDirectory);
    else
      opt->check(CLI::ExistingFile);
    if (required) opt->required();
    cmd->add_option("--format", o.format, "Input format")
        ->check(CLI::IsMember({"plain", "csv"}));
    cmd->add_option("--column", o.column,
                    "CSV column: header name, or 0-based index if all digits");
  };

  CLI::App* build = app.add_subcommand("build", "Build an index and persist it");
  add_input(build, true, false);
  build->add_option("--output", o.output, "Index file to write")->required();

  CLI::App* mine = app.add_subcommand("mine", "Mine frequent patterns");
  mine->add_option("mode", o.mode, "maximal or closed")
      ->required()
      ->check(CLI::IsMember({"maximal", "closed"}));
  add_input(mine, false, false);
  mine->add_option("--index", o.index, "Previously built index file")
      ->check(CLI::ExistingFile);
  mine->add_option("--tau", o.tau, "Frequency threshold (>= 2)")->required();
  mine->add_option("--output", o.output, "Pattern output path (default stdout)");

  CLI::App* check = app.add_subcommand(
      "check", "Cross-check the tree miners against the reference oracles");
  check->add_option("--seed", o.seed, "Instance generator seed");
  check->add_option("--instances", o.instances, "Number of random instances");
  check->add_option("--max-n", o.max_n, "Largest series length (<= 64)");
  check->add_option("--max-sigma", o.max_sigma, "Largest alphabet size");
  check->add_option("--tau", o.tau, "Fixed threshold (default: cycle 2, 3, 5)");
  check->add_option("--output", o.output, "Report output path (default stdout)");
  check->add_flag("--inject-fault", o.inject_fault)->group("");

  CLI::App* features = app.add_subcommand(
      "features", "Count patterns across a directory of series");
  add_input(features, true, true);
  features->add_option("--index", o.index,
                       "Index to mine closed patterns from when stdin has none");
  features->add_option("--tau", o.tau, "Threshold for --index mining");
  features->add_option("--output", o.output, "CSV output path (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "Timing table over random series");
  bench->add_option("--seed", o.seed, "Series generator seed");
  bench->add_option("--max-n", o.bench_max_n, "Cap on series length");
  bench->add_option("--max-sigma", o.bench_max_sigma, "Cap on alphabet size");
  bench->add_option("--tau", o.tau, "Mining threshold (default 10)");
  bench->add_option("--output", o.output, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return run_build(o);
    if (*mine) return run_mine(o);
    if (*check) return run_check(o);
    if (*features) return run_features(o);
    if (*bench) return run_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
