#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "iepl/graph.hpp"

namespace iepl {

/// A Monte Carlo batch of realizable spectra: random edge weights in (0,1],
/// trace-normalized so every spectrum sums to 2m, eigensolved, sorted.
struct SampleRun {
  Graph graph;
  long count = 0;
  uint64_t seed = 0;
  bool anchor = false;  // sample 0 replaced by the all-ones weighting
  std::vector<Eigen::VectorXd> records;  // ascending, length n, leading ~0
};

/// Raw weights for one sample, before normalization: each entry is
/// 1 - u/2^53 with u the top 53 bits of a splitmix64 substream keyed by
/// (seed, index), so samples are order-independent and reproducible.
Eigen::VectorXd sample_weights(const Graph& g, uint64_t seed, long index);

SampleRun sample_spectra(const Graph& g, long count, uint64_t seed,
                         bool anchor = false);

/// Header "lambda2,...,lambdan", one row per record, 17 significant digits.
void write_csv(const SampleRun& run, std::ostream& out);

/// write_csv to `path` plus a `<path>.meta.json` sidecar carrying the run
/// parameters and the reference lines of the (lambda2, lambda3) plane.
void export_csv(const SampleRun& run, const std::string& path);

}  // namespace iepl
