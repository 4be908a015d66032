#include "ulab/random_label.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "ulab/edge_coloring.hpp"
#include "ulab/random.hpp"
#include "ulab/verify.hpp"

namespace ulab {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr u128 kLabelLimit = u128{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t next_prime(std::uint64_t x) {
  while (!is_prime(x)) ++x;
  return x;
}

// Coin stream for one trial.
class TrialBits {
 public:
  TrialBits(std::uint64_t seed, std::uint64_t trial) : state_(splitmix64(seed ^ splitmix64(trial))) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_);
  }

 private:
  std::uint64_t state_;
};

int ceil_lg(int n) {
  int c = 0;
  while ((std::int64_t{1} << c) < n) ++c;
  return c;
}

}  // namespace

std::vector<EdgeId> split_low_degree(const Graph& g, double threshold) {
  if (!(threshold > 0.0)) throw Error(ErrorKind::kInvalidParameter, "threshold must be positive");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.degree(ed.u) < threshold && g.degree(ed.v) < threshold) out.push_back(e);
  }
  return out;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These bases are deterministic for every 64-bit input.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int prime_count(int n) {
  if (n < 4) throw Error(ErrorKind::kInvalidParameter, "prime labels need n >= 4");
  const double lg = std::log2(static_cast<double>(n));
  return std::max(1, static_cast<int>(std::floor(lg / std::log2(lg))));
}

std::vector<Label> select_primes(int n, double epsilon) {
  const int count = prime_count(n);
  if (!(epsilon >= 0.0)) throw Error(ErrorKind::kInvalidParameter, "epsilon must be non-negative");
  std::vector<Label> primes;
  for (int i = 1; i <= count; ++i) {
    u128 floor_value = 2 * static_cast<u128>(n) + 1;
    if (!primes.empty()) floor_value = std::max<u128>(floor_value, static_cast<u128>(primes.back()) + 1);
    const long double window =
        (1.0L + i * static_cast<long double>(epsilon)) * std::pow(static_cast<long double>(n), (i + 1) / 2);
    if (window >= static_cast<long double>(kLabelLimit)) {
      throw Error(ErrorKind::kCapExceeded, "prime window overflows 62 bits");
    }
    floor_value = std::max<u128>(floor_value, static_cast<u128>(std::ceil(window)));
    if (i % 2 == 1 && i > 1) {
      floor_value = std::max<u128>(floor_value, static_cast<u128>(n) * static_cast<u128>(primes.back()) + 1);
    }
    if (floor_value >= kLabelLimit) throw Error(ErrorKind::kCapExceeded, "prime overflows 62 bits");
    primes.push_back(static_cast<Label>(next_prime(static_cast<std::uint64_t>(floor_value))));
  }
  return primes;
}

AeulLabeling aeul_labeling(const Graph& g, double epsilon, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n < 4) throw Error(ErrorKind::kInvalidParameter, "almost-everywhere labeling needs n >= 4");
  AeulLabeling out;
  out.threshold = std::log2(static_cast<double>(n));
  out.scale = Label{1} << (1 + ceil_lg(n));
  out.primes = select_primes(n, epsilon);
  out.k_count = static_cast<int>(out.primes.size());
  out.h_edges = split_low_degree(g, out.threshold);
  out.labeling = EdgeLabeling(g.edge_count());

  const EdgeColoring h_coloring = color_delta_plus_one(edge_subgraph(g, out.h_edges));
  for (std::size_t i = 0; i < out.h_edges.size(); ++i) {
    out.labeling.set(out.h_edges[i], Label{1} << (h_coloring.color[i] - 1));
  }
  if (out.primes.back() > std::numeric_limits<Label>::max() / out.scale) {
    throw Error(ErrorKind::kCapExceeded, "scaled prime labels overflow");
  }
  Rng rng(seed);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (out.labeling.has(e)) continue;
    const auto pick = static_cast<std::size_t>(uniform_below(rng, out.primes.size()));
    out.labeling.set(e, out.primes[pick] * out.scale);
  }
  return out;
}

LabeledGraph kn_random_labeling(int n, Label f, std::uint64_t seed) {
  if (n < 2 || f < 1) throw Error(ErrorKind::kInvalidParameter, "need n >= 2 and f >= 1");
  Graph g = generate("complete:" + std::to_string(n));
  EdgeLabeling l(g.edge_count());
  Rng rng(seed);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    l.set(e, 1 + static_cast<Label>(uniform_below(rng, static_cast<std::uint64_t>(f))));
  }
  return {std::move(g), std::move(l)};
}

Orientation random_orientation(const Graph& g, std::uint64_t seed, std::uint64_t trial) {
  TrialBits bits(seed, trial);
  std::vector<Vertex> heads(static_cast<std::size_t>(g.edge_count()));
  std::uint64_t word = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e % 64 == 0) word = bits.next();
    heads[static_cast<std::size_t>(e)] = ((word >> (e % 64)) & 1U) ? g.edge(e).v : g.edge(e).u;
  }
  return Orientation(g, std::move(heads));
}

bool has_conflict(const Graph& g, const EdgeLabeling& l, const Orientation& o) {
  const auto sums = in_sums(g, l, o);
  return std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& ed) {
    return sums[static_cast<std::size_t>(ed.u)] == sums[static_cast<std::size_t>(ed.v)];
  });
}

ConflictEstimate estimate_conflict_probability(const Graph& g, const EdgeLabeling& l,
                                               std::uint64_t trials, std::uint64_t seed) {
  require_total(g, l);
  if (trials < 1) throw Error(ErrorKind::kInvalidParameter, "need at least one trial");
  ConflictEstimate out;
  out.trials = trials;
  out.seed = seed;
  const auto edges = g.edges();
  const auto labels = l.raw();
  std::vector<Label> sums(static_cast<std::size_t>(g.vertex_count()));
  // Same coin stream as random_orientation, without materialising it.
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialBits bits(seed, t);
    std::fill(sums.begin(), sums.end(), 0);
    std::uint64_t word = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e % 64 == 0) word = bits.next();
      const Vertex head = ((word >> (e % 64)) & 1U) ? edges[e].v : edges[e].u;
      sums[static_cast<std::size_t>(head)] += labels[e];
    }
    for (const Edge& ed : edges) {
      if (sums[static_cast<std::size_t>(ed.u)] == sums[static_cast<std::size_t>(ed.v)]) {
        ++out.conflicts;
        break;
      }
    }
  }
  out.estimate = static_cast<double>(out.conflicts) / static_cast<double>(trials);
  std::tie(out.ci_low, out.ci_high) = wilson_interval(out.conflicts, trials);
  return out;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

nlohmann::json to_json(const ConflictEstimate& estimate) {
  return {{"trials", estimate.trials},
          {"conflicts", estimate.conflicts},
          {"estimate", estimate.estimate},
          {"ci95", {estimate.ci_low, estimate.ci_high}},
          {"seed", estimate.seed}};
}

nlohmann::json aeul_sidecar(const Graph& g, const AeulLabeling& a) {
  nlohmann::json h = nlohmann::json::array();
  for (EdgeId e : a.h_edges) h.push_back({g.edge(e).u, g.edge(e).v});
  return {{"construction", "aeul"},
          {"primes", a.primes},
          {"scale", a.scale},
          {"threshold", a.threshold},
          {"k_count", a.k_count},
          {"h_edges", h},
          {"palette_max", a.labeling.max_label()}};
}

}  // namespace ulab
