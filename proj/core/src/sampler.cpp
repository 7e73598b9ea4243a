#include "iepl/sampler.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "iepl/json_writer.hpp"
#include "iepl/spectral.hpp"

namespace iepl {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Substream key for one sample: samples can be generated in any order and
// still match a serial run bit for bit.
uint64_t substream_key(uint64_t seed, long index) {
  uint64_t state = seed + (static_cast<uint64_t>(index) + 1) * kGolden;
  return splitmix64(state);
}

// (0, 1] from the top 53 bits: 1 - u/2^53 never yields a zero weight.
double unit_open_closed(uint64_t bits) {
  return 1.0 - static_cast<double>(bits >> 11) * 0x1.0p-53;
}

int sampler_threads() {
  if (const char* env = std::getenv("IEPL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Eigen::VectorXd spectrum_for_weights(const Graph& g, Eigen::VectorXd w) {
  w = normalize_trace(g, w);
  return spectrum_of(assemble_laplacian(g, w)).values;
}

}  // namespace

Eigen::VectorXd sample_weights(const Graph& g, uint64_t seed, long index) {
  uint64_t state = substream_key(seed, index);
  Eigen::VectorXd w(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    w(e) = unit_open_closed(splitmix64(state));
  }
  return w;
}

SampleRun sample_spectra(const Graph& g, long count, uint64_t seed,
                         bool anchor) {
  if (!g.is_connected()) {
    throw std::invalid_argument("sampling requires a connected graph");
  }
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");

  SampleRun run{g, count, seed, anchor, {}};
  run.records.resize(count);

  auto fill = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      Eigen::VectorXd w = (anchor && i == 0)
                              ? Eigen::VectorXd::Ones(g.edge_count())
                              : sample_weights(g, seed, i);
      run.records[i] = spectrum_for_weights(g, std::move(w));
    }
  };

  const int threads = std::min<long>(sampler_threads(), count);
  if (threads <= 1 || count < 1024) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(fill, count * t / threads, count * (t + 1) / threads);
    }
    for (auto& th : pool) th.join();
  }
  return run;
}

void write_csv(const SampleRun& run, std::ostream& out) {
  const int n = run.graph.vertex_count();
  for (int k = 2; k <= n; ++k) {
    out << "lambda" << k << (k < n ? "," : "");
  }
  out << "\n";
  for (const auto& rec : run.records) {
    for (int k = 1; k < n; ++k) {
      out << json_number(rec(k)) << (k + 1 < n ? "," : "");
    }
    out << "\n";
  }
}

void export_csv(const SampleRun& run, const std::string& path) {
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(run, out);
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
  }

  const int m = run.graph.edge_count();
  JsonValue meta = JsonValue::object();
  meta["graph"] = JsonValue(run.graph.name().empty() ? run.graph.to_text()
                                                     : run.graph.name());
  meta["vertices"] = JsonValue(run.graph.vertex_count());
  meta["edges"] = JsonValue(m);
  meta["count"] = JsonValue(run.count);
  meta["seed"] = JsonValue(run.seed);
  meta["anchor"] = JsonValue(run.anchor);
  meta["trace"] = JsonValue(2.0 * m);

  JsonValue cols = JsonValue::array();
  for (int k = 2; k <= run.graph.vertex_count(); ++k) {
    cols.push_back(JsonValue("lambda" + std::to_string(k)));
  }
  meta["columns"] = std::move(cols);

  // Guides for the (lambda2, lambda3) plane plots.
  JsonValue lines = JsonValue::array();
  auto add_line = [&lines](const std::string& label, const std::string& eq) {
    JsonValue l = JsonValue::object();
    l["label"] = JsonValue(label);
    l["equation"] = JsonValue(eq);
    lines.push_back(std::move(l));
  };
  const std::string s2m = json_number(2.0 * m);
  add_line("x = y", "y = x");
  add_line("x + 2y = 2m", "x + 2*y = " + s2m);
  add_line("x + y = 2m", "x + y = " + s2m);
  meta["reference_lines"] = std::move(lines);

  const std::string meta_path = path + ".meta.json";
  std::ofstream mout(meta_path);
  if (!mout) {
    throw std::runtime_error("cannot open " + meta_path + " for writing");
  }
  mout << meta.dump(2) << "\n";
  if (!mout.flush()) throw std::runtime_error("write failed for " + meta_path);
}

}  // namespace iepl
