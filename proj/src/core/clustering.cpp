#include "core/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <string>

#include "core/errors.hpp"

namespace udhn {

namespace {

// Engine-independent draws so results depend only on the mt19937_64 stream.
double next_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& eng, std::size_t n) {
  return static_cast<std::size_t>(eng() % n);
}

// k-means++ seeding: first center uniform, then distance^2-weighted picks.
// When every remaining point coincides with a chosen center, fall back to
// the first index not yet used so k distinct slots always exist.
std::vector<double> seed_centroids(std::span<const double> points, int k,
                                   std::mt19937_64& eng) {
  const std::size_t n = points.size();
  std::vector<double> centroids;
  centroids.reserve(k);
  std::vector<bool> used(n, false);

  const std::size_t first = next_index(eng, n);
  centroids.push_back(points[first]);
  used[first] = true;

  std::vector<double> d2(n);
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (double c : centroids) {
        const double d = points[i] - c;
        best = std::min(best, d * d);
      }
      d2[i] = best;
      total += best;
    }
    std::size_t pick = n;
    if (total > 0.0) {
      const double r = next_double(eng) * total;
      double cum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cum += d2[i];
        if (cum >= r) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = n - 1;  // guard against FP shortfall
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = next_index(eng, n);
    }
    used[pick] = true;
    centroids.push_back(points[pick]);
  }
  return centroids;
}

}  // namespace

double sse(std::span<const double> points, std::span<const int> assignment,
           std::span<const double> centroids) {
  if (points.size() != assignment.size()) {
    throw UsageError("sse: points and assignment sizes differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int c = assignment[i];
    if (c < 0 || c >= static_cast<int>(centroids.size())) {
      throw UsageError("sse: assignment index out of range");
    }
    const double d = points[i] - centroids[c];
    total += d * d;
  }
  return total;
}

LloydRun lloyd(std::span<const double> points, std::vector<double> centroids,
               int max_iterations) {
  const std::size_t n = points.size();
  const int k = static_cast<int>(centroids.size());
  if (n == 0 || k < 1 || static_cast<std::size_t>(k) > n) {
    throw UsageError("lloyd: need 1 <= k <= |points| and non-empty points");
  }

  LloydRun run;
  std::vector<int> assignment(n, -1);
  std::vector<int> counts(k, 0);
  std::vector<double> sums(k, 0.0);

  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = points[i] - centroids[c];
        const double d2 = d * d;
        if (d2 < best_d) {  // ties keep the lower cluster index
          best_d = d2;
          best = c;
        }
      }
      if (assignment[i] != best) {
        assignment[i] = best;
        changed = true;
      }
      ++counts[best];
    }

    // Re-home one point into each empty cluster so all k stay populated:
    // steal the point farthest from its current centroid (lowest index on
    // ties), taken from clusters that can spare one.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      std::size_t donor = n;
      double worst = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[assignment[i]] < 2) continue;
        const double d = points[i] - centroids[assignment[i]];
        const double d2 = d * d;
        if (d2 > worst) {
          worst = d2;
          donor = i;
        }
      }
      if (donor == n) {
        throw ContractError("lloyd: cannot repopulate empty cluster");
      }
      --counts[assignment[donor]];
      assignment[donor] = c;
      ++counts[c];
      changed = true;
    }

    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) sums[assignment[i]] += points[i];
    for (int c = 0; c < k; ++c) centroids[c] = sums[c] / counts[c];

    run.sse_per_iteration.push_back(sse(points, assignment, centroids));
    if (!changed) break;
  }

  run.clustering = Clustering{k, std::move(assignment), std::move(centroids),
                              run.sse_per_iteration.back()};
  return run;
}

Clustering kmeans(std::span<const double> points, int k, std::uint64_t seed,
                  const KMeansParams& params) {
  const std::size_t n = points.size();
  if (n == 0) throw UsageError("kmeans: empty point set");
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw UsageError("kmeans: k=" + std::to_string(k) + " outside 1..|points|=" +
                     std::to_string(n));
  }

  std::mt19937_64 eng(seed);
  Clustering best;
  bool have = false;
  for (int r = 0; r < params.restarts; ++r) {
    auto start = seed_centroids(points, k, eng);
    LloydRun run = lloyd(points, std::move(start), params.max_iterations);
    if (!have || run.clustering.sse < best.sse) {
      best = std::move(run.clustering);
      have = true;
    }
  }
  return best;
}

int elbow_k(std::span<const double> points, int k_max, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (k_max < 2) throw UsageError("elbow_k: k_max must be >= 2");
  if (n < 2) throw UsageError("elbow_k: need at least 2 points");
  if (n < 3) return 1;

  const int top = std::min<int>(k_max, static_cast<int>(n));
  std::vector<double> curve(top + 1, 0.0);
  for (int k = 1; k <= top; ++k) {
    curve[k] = kmeans(points, k, seed).sse;
  }

  int best_k = 1;
  double best_curvature = 0.0;
  for (int k = 2; k + 1 <= top; ++k) {
    const double curvature = curve[k - 1] - 2.0 * curve[k] + curve[k + 1];
    if (curvature > best_curvature) {
      best_curvature = curvature;
      best_k = k;
    }
  }
  // A flat or concave curve has no elbow; treat the data as one cluster.
  return best_curvature > 1e-12 ? best_k : 1;
}

}  // namespace udhn
