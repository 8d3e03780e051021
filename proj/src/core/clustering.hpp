#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace udhn {

/// One k-means result over 1-D load values. Every cluster is non-empty and
/// each point sits with its nearest centroid.
struct Clustering {
  int k = 0;
  std::vector<int> assignment;    // point index -> cluster index
  std::vector<double> centroids;  // cluster index -> mean load
  double sse = 0.0;
};

struct KMeansParams {
  int restarts = 10;
  int max_iterations = 300;
};

/// Sum of squared distances between each point and its cluster centroid.
double sse(std::span<const double> points, std::span<const int> assignment,
           std::span<const double> centroids);

/// Lloyd's algorithm from k-means++-style seeded starts, best of
/// params.restarts by SSE. Deterministic for a fixed seed.
Clustering kmeans(std::span<const double> points, int k, std::uint64_t seed,
                  const KMeansParams& params = {});

/// Automatic cluster-count selection: evaluates SSE(k) for k = 1..min(k_max,
/// n) and returns the k with the largest discrete second difference of the
/// SSE curve (ties toward smaller k). Degenerate curves give 1.
int elbow_k(std::span<const double> points, int k_max, std::uint64_t seed);

/// One Lloyd descent from explicit starting centroids, with the SSE after
/// each iteration recorded.
struct LloydRun {
  Clustering clustering;
  std::vector<double> sse_per_iteration;
};
LloydRun lloyd(std::span<const double> points, std::vector<double> centroids,
               int max_iterations);

}  // namespace udhn
