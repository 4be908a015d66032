#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "ulab/construct.hpp"
#include "ulab/graph.hpp"

namespace ulab {

/// Labeling built from a low-degree part H (powers of two from a proper
/// coloring of H) and random primes scaled past every H sum elsewhere.
struct AeulLabeling {
  EdgeLabeling labeling;
  std::vector<EdgeId> h_edges;  // ascending
  std::vector<Label> primes;
  Label scale = 0;              // 2^(1 + ceil(lg n))
  double threshold = 0.0;       // lg n
  int k_count = 0;

  friend bool operator==(const AeulLabeling&, const AeulLabeling&) = default;
};

struct ConflictEstimate {
  std::uint64_t trials = 0;
  std::uint64_t conflicts = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultEpsilon = 0.01;

/// Edges whose two endpoints both have degree < threshold.
std::vector<EdgeId> split_low_degree(const Graph& g, double threshold);

/// Deterministic primality for 64-bit integers.
bool is_prime(std::uint64_t x);

/// max(1, floor(lg n / lg lg n)).
int prime_count(int n);

/// p_i is the smallest prime at or above every lower constraint: 2n + 1,
/// p_{i-1} + 1, (1 + i*eps) * n^floor((i+1)/2), and n * p_{i-1} + 1 when i is
/// odd and i > 1.
std::vector<Label> select_primes(int n, double epsilon = kDefaultEpsilon);

AeulLabeling aeul_labeling(const Graph& g, double epsilon, std::uint64_t seed);

/// K_n with independent uniform labels in 1..f.
LabeledGraph kn_random_labeling(int n, Label f, std::uint64_t seed);

/// Orientation i draws its edge coins from a stream keyed on (seed, i), so the result
/// does not depend on how trials are scheduled.
Orientation random_orientation(const Graph& g, std::uint64_t seed, std::uint64_t trial);

/// Whether some edge has equal incoming sums at its ends under o.
bool has_conflict(const Graph& g, const EdgeLabeling& l, const Orientation& o);

/// Fraction of uniformly random orientations with a conflict, with a Wilson
/// 95% interval.
ConflictEstimate estimate_conflict_probability(const Graph& g, const EdgeLabeling& l,
                                               std::uint64_t trials, std::uint64_t seed);

/// Wilson score interval at z = 1.96.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

nlohmann::json to_json(const ConflictEstimate& estimate);
nlohmann::json aeul_sidecar(const Graph& g, const AeulLabeling& a);

}  // namespace ulab
