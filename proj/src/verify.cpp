#include "clique_spectra/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "clique_spectra/error.hpp"
#include "clique_spectra/graph_io.hpp"
#include "clique_spectra/oracle.hpp"

namespace clique_spectra {

namespace {

constexpr std::uint64_t kChunk = 4096;
constexpr int kRandomChunk = 4;
constexpr double kWitnessTol = 1e-9;
// Rounding allowance when placing the oracle inside an enclosure whose ends
// may coincide with rho to the last bit.
constexpr double kEnclosureRounding = 1e-12;
constexpr double kProbabilities[] = {0.3, 0.5, 0.8};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string describe_structure(const std::optional<MultipartiteStructure>& st) {
  if (!st) return "not-multipartite";
  std::vector<int> sizes = st->partition.sizes();
  std::sort(sizes.begin(), sizes.end());
  std::string out = fmt::format("multipartite[{}]", fmt::join(sizes, ","));
  if (!st->isolated.empty()) out += fmt::format("+{}", st->isolated.size());
  return out;
}

class Recorder {
 public:
  Recorder(const Graph& g, const std::string& id, const SuiteConfig& cfg, VerificationReport& rep)
      : g_(g), id_(id), cfg_(cfg), rep_(rep) {}

  const std::string& edges() {
    if (edges_.empty()) edges_ = edge_string(g_);
    return edges_;
  }

  void violation(const std::string& bound, int t, double lhs, double rhs) {
    rep_.violations.push_back({id_, edges(), bound, t, lhs, rhs});
  }

  template <class KindFn>
  void add(const BoundReport& r, int t, bool census, KindFn&& kind, std::string_view suffix = {}) {
    ++rep_.bounds_checked;
    std::string name = suffix.empty() ? r.name : fmt::format("{}:{}", r.name, suffix);
    auto& s = rep_.census[fmt::format("{}/t={}", name, t)];
    if (s.checked == 0) {
      s.name = name;
      s.t = t;
      s.census = census;
    }
    ++s.checked;
    if (!r.holds) violation(name, t, r.lhs, r.rhs);
    if (r.equality_numeric) {
      ++s.numeric_equal;
      if (static_cast<int>(s.equal_graphs.size()) < cfg_.census_limit)
        s.equal_graphs.push_back({id_, std::string(kind())});
    } else {
      s.worst_gap = s.worst_gap ? std::min(*s.worst_gap, r.gap) : r.gap;
    }
    if (r.equality_structural) ++s.structural_equal;
    if (census && r.equality_numeric != r.equality_structural)
      s.mismatches.push_back(
          {id_, edges(), std::string(kind()), r.equality_numeric, r.equality_structural, r.gap});
    if (cfg_.record_rows)
      rep_.rows.push_back({id_, t, name, r.lhs, r.rhs, r.gap, r.holds, r.equality_numeric,
                           r.equality_structural});
  }

 private:
  const Graph& g_;
  const std::string& id_;
  const SuiteConfig& cfg_;
  VerificationReport& rep_;
  std::string edges_;
};

Eigen::VectorXd random_simplex_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = exp1(rng);
  return x / x.sum();
}

SpectralOptions spectral_options(const SuiteConfig& cfg) {
  SpectralOptions o;
  o.tol = cfg.tol;
  o.max_iter = cfg.max_iter;
  return o;
}

}  // namespace

// ---------------------------------------------------------------------------

void SuiteConfig::validate() const {
  if (n_max < 0 || n_max > kMaxExhaustiveN)
    throw ValidationError(fmt::format(
        "n-max {} is outside the exhaustive budget 0..{} (n = {} would need 2^{} labelled graphs)",
        n_max, kMaxExhaustiveN, n_max, n_max * (n_max - 1) / 2));
  if (n_max > 0 && t_values.empty()) throw ValidationError("t-values must not be empty");
  for (int t : t_values)
    if (t < 2) throw ValidationError(fmt::format("t must be >= 2 (got {})", t));
  for (int t : oracle_t_values)
    if (t < 2) throw ValidationError(fmt::format("oracle t must be >= 2 (got {})", t));
  if (!(tol > 0) || !(eq_tol > 0) || !(slack >= 0) || !(oracle_tol > 0))
    throw ValidationError("tolerances must be positive");
  if (max_iter < 1) throw ValidationError("max-iter must be positive");
  if (random_trials < 0 || random_points < 0 || census_limit < 0)
    throw ValidationError("counts must be nonnegative");
  if (random_trials > 0 && (random_n_max < 2 || random_n_max > 16))
    throw ValidationError("random n-max must lie in 2..16");
  if (oracle_restarts < 1) throw ValidationError("oracle restarts must be positive");
  if (parallelism < 1) throw ValidationError("parallelism must be positive");
}

std::int64_t VerificationReport::census_mismatches() const {
  std::int64_t total = 0;
  for (const auto& [key, s] : census) total += static_cast<std::int64_t>(s.mismatches.size());
  return total;
}

bool VerificationReport::passed() const {
  return complete && violations.empty() && census_mismatches() == 0 && oracle_failures.empty();
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.config == b.config && a.complete == b.complete && a.error == b.error &&
         a.graphs_checked == b.graphs_checked &&
         a.random_graphs_checked == b.random_graphs_checked &&
         a.bounds_checked == b.bounds_checked && a.oracle_checks == b.oracle_checks &&
         a.oracle_max_diff == b.oracle_max_diff && a.oracle_failures == b.oracle_failures &&
         a.violations == b.violations && a.nonconverged == b.nonconverged &&
         a.census == b.census && a.rows == b.rows;
}

void enumerate_all_graphs(int n,
                          const std::function<void(std::uint64_t, const Graph&)>& visit) {
  if (n < 1 || n > kMaxExhaustiveN)
    throw ValidationError(fmt::format("enumerate_all_graphs requires 1 <= n <= {}", kMaxExhaustiveN));
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(mask, graph_from_mask(n, mask));
}

std::string exhaustive_graph_id(int n, std::uint64_t mask) { return fmt::format("n{}m{}", n, mask); }

// ---------------------------------------------------------------------------

void check_graph(const Graph& g, const std::string& graph_id, const SuiteConfig& cfg,
                 std::uint64_t stream, VerificationReport& report) {
  Recorder rec(g, graph_id, cfg, report);
  const BoundOptions bopts{cfg.eq_tol, cfg.slack};
  const SpectralOptions sopts = spectral_options(cfg);
  const int n = g.num_vertices();

  const CliqueCatalog edges = build_catalog(g, 2);
  std::optional<SpectralResult> rho2;
  if (cfg.spectral) {
    rho2 = spectral_radius(edges, sopts);
    if (!rho2->converged) report.nonconverged.push_back(fmt::format("{}/t=2", graph_id));
  }

  std::optional<std::string> graph_shape;
  auto shape = [&]() -> const std::string& {
    if (!graph_shape) graph_shape = describe_structure(complete_multipartite_partition(g));
    return *graph_shape;
  };
  for (const auto& r : classical_bounds(g, edges, rho2 ? &*rho2 : nullptr, bopts))
    rec.add(r, 0, census_mode(r.name) == CensusMode::Iff, shape);

  for (int t : cfg.t_values) {
    if (t > edges.omega) continue;
    const CliqueCatalog cat = t == 2 ? edges : build_catalog(g, t);
    const EqualityCase eq = equality_case_predicate(g, t);
    const std::string kind(to_string(eq.kind));
    auto kind_fn = [&]() -> const std::string& { return kind; };

    std::optional<SpectralResult> rho;
    if (cfg.spectral) {
      rho = t == 2 ? *rho2 : spectral_radius(cat, sopts);
      if (t != 2 && !rho->converged)
        report.nonconverged.push_back(fmt::format("{}/t={}", graph_id, t));
    }
    for (const auto& r : localized_bounds(g, cat, rho ? &*rho : nullptr, eq, bopts))
      rec.add(r, t, census_mode(r.name) == CensusMode::Iff, kind_fn);

    // Weighted-sum battery. Deterministic points take part in the census;
    // random simplex points are checked for soundness only.
    auto weighted = [&](const Eigen::VectorXd& x, bool census, std::string_view suffix) {
      const WeightedVector w{x, WeightedVector::Norm::Sum};
      rec.add(weighted_clique_sum(g, cat, w, bopts), t, census, kind_fn, suffix);
      rec.add(vertex_weighted_sum(g, cat, w, bopts), t, census, kind_fn, suffix);
    };
    auto maclaurin = [&](const Eigen::VectorXd& x, std::string_view suffix) {
      const WeightedVector w{x, WeightedVector::Norm::Sum};
      rec.add(maclaurin_check(g, w, 1, t, bopts), t, false, kind_fn, suffix);
      if (t >= 3) rec.add(maclaurin_check(g, w, 2, t, bopts), t, false, kind_fn, suffix);
    };

    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / n);
    weighted(uniform, true, "uniform");
    maclaurin(uniform, "uniform");

    const auto top = std::max_element(cat.per_vertex_alpha.begin(), cat.per_vertex_alpha.end());
    Eigen::VectorXd one_hot = Eigen::VectorXd::Zero(n);
    one_hot(top - cat.per_vertex_alpha.begin()) = 1.0;
    weighted(one_hot, true, "one-hot");

    for (int k = 0; k < cfg.random_points; ++k) {
      const Eigen::VectorXd x =
          random_simplex_point(n, mix(mix(stream, static_cast<std::uint64_t>(t)), k));
      weighted(x, false, "random");
      maclaurin(x, "random");
    }

    if (eq.structure) {
      const auto& parts = eq.structure->partition.parts;
      const double omega = static_cast<double>(parts.size());
      Eigen::VectorXd witness = Eigen::VectorXd::Zero(n);
      for (const auto& part : parts)
        for (Vertex v : part) witness(v) = 1.0 / (omega * static_cast<double>(part.size()));
      const WeightedVector w{witness, WeightedVector::Norm::Sum};
      const BoundReport a = weighted_clique_sum(g, cat, w, bopts);
      const BoundReport b = vertex_weighted_sum(g, cat, w, bopts);
      rec.add(a, t, true, kind_fn, "witness");
      rec.add(b, t, true, kind_fn, "witness");
      if (std::abs(a.lhs - 1.0) > kWitnessTol) rec.violation(a.name + ":witness-value", t, a.lhs, 1.0);
      if (std::abs(b.lhs - 1.0) > kWitnessTol) rec.violation(b.name + ":witness-value", t, b.lhs, 1.0);
    }
  }
}

void merge_into(VerificationReport& into, VerificationReport&& part, int census_limit) {
  into.graphs_checked += part.graphs_checked;
  into.random_graphs_checked += part.random_graphs_checked;
  into.bounds_checked += part.bounds_checked;
  into.oracle_checks += part.oracle_checks;
  into.oracle_max_diff = std::max(into.oracle_max_diff, part.oracle_max_diff);
  auto append = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  append(into.oracle_failures, part.oracle_failures);
  append(into.violations, part.violations);
  append(into.nonconverged, part.nonconverged);
  append(into.rows, part.rows);
  for (auto& [key, s] : part.census) {
    auto [it, inserted] = into.census.try_emplace(key);
    BoundStats& d = it->second;
    if (inserted || d.checked == 0) {
      d.name = s.name;
      d.t = s.t;
      d.census = s.census;
    }
    d.checked += s.checked;
    d.numeric_equal += s.numeric_equal;
    d.structural_equal += s.structural_equal;
    for (auto& e : s.equal_graphs) {
      if (static_cast<int>(d.equal_graphs.size()) >= census_limit) break;
      d.equal_graphs.push_back(std::move(e));
    }
    append(d.mismatches, s.mismatches);
    if (s.worst_gap) d.worst_gap = d.worst_gap ? std::min(*d.worst_gap, *s.worst_gap) : s.worst_gap;
  }
}

// ---------------------------------------------------------------------------

namespace {

struct Task {
  bool random = false;
  int n = 0;                // exhaustive only
  std::uint64_t begin = 0;  // mask or trial index
  std::uint64_t end = 0;
};

void run_exhaustive(const Task& task, const SuiteConfig& cfg, VerificationReport& out) {
  for (std::uint64_t mask = task.begin; mask < task.end; ++mask) {
    const Graph g = graph_from_mask(task.n, mask);
    check_graph(g, exhaustive_graph_id(task.n, mask), cfg, mix(cfg.seed, mix(task.n, mask)), out);
    ++out.graphs_checked;
  }
}

void run_random(const Task& task, const SuiteConfig& cfg, VerificationReport& out) {
  SuiteConfig local = cfg;
  local.t_values = cfg.oracle_t_values;
  const SpectralOptions sopts = spectral_options(cfg);
  for (std::uint64_t trial = task.begin; trial < task.end; ++trial) {
    const std::uint64_t s = mix(cfg.seed ^ 0x5eedULL, trial);
    const int n = 2 + static_cast<int>(s % static_cast<std::uint64_t>(cfg.random_n_max - 1));
    const double p = kProbabilities[trial % 3];
    const Graph g = gnp_random(n, p, s);
    const std::string id = fmt::format("random{}-n{}-p{}", trial, n, p);
    const int omega = max_clique(g);
    for (int t : cfg.oracle_t_values) {
      if (t > omega) continue;
      const SpectralResult res = spectral_radius(g, t, sopts);
      if (!res.converged) out.nonconverged.push_back(fmt::format("{}/t={}", id, t));
      const double oracle = oracle_spectral_radius(g, t, cfg.oracle_restarts, mix(s, t));
      const double diff = std::abs(res.rho - oracle);
      const double slack = kEnclosureRounding * std::max(1.0, res.rho);
      const bool inside = res.lower - slack <= oracle && oracle <= res.upper + slack;
      ++out.oracle_checks;
      out.oracle_max_diff = std::max(out.oracle_max_diff, diff);
      if (diff > cfg.oracle_tol || !inside)
        out.oracle_failures.push_back({id, edge_string(g), t, res.rho, res.lower, res.upper, oracle});
    }
    check_graph(g, id, local, s, out);
    ++out.random_graphs_checked;
  }
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<Task> tasks;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t b = 0; b < count; b += kChunk) tasks.push_back({false, n, b, std::min(count, b + kChunk)});
  }
  const auto trials = static_cast<std::uint64_t>(cfg.random_trials);
  for (std::uint64_t b = 0; b < trials; b += kRandomChunk)
    tasks.push_back({true, 0, b, std::min(trials, b + kRandomChunk)});

  std::vector<VerificationReport> parts(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  std::size_t failed_task = tasks.size();
  std::string error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || abort.load()) return;
      try {
        if (tasks[i].random)
          run_random(tasks[i], cfg, parts[i]);
        else
          run_exhaustive(tasks[i], cfg, parts[i]);
        done[i] = 1;
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (i < failed_task) {
          failed_task = i;
          error = e.what();
        }
        abort.store(true);
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(cfg.parallelism, static_cast<int>(tasks.size())));
  spdlog::debug("run_suite: {} tasks on {} worker(s)", tasks.size(), jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.config = cfg;
  std::size_t merged = 0;
  for (; merged < tasks.size() && done[merged]; ++merged)
    merge_into(report, std::move(parts[merged]), cfg.census_limit);
  if (merged < tasks.size()) {
    report.complete = false;
    report.error = error;
    spdlog::error("run_suite aborted: {}", error);
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace clique_spectra
