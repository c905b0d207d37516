// Compares the OpenMP kernels against their serial references on
// synthetic corpus-scale data and reports times plus agreement.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semhuff/kernels.hpp"
#include "semhuff/tree.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

struct Result {
  double serial_s = 0;
  double parallel_s = 0;
  bool agree = false;
};

void report(const char* name, const Result& r) {
  std::printf("%-16s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              r.serial_s * 1e3, r.parallel_s * 1e3, r.serial_s / r.parallel_s,
              r.agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t scale = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) scale = 50;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  std::mt19937_64 rng(20240915);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  using namespace semhuff;

  // --- token counting -------------------------------------------------
  {
    const std::size_t n_tokens = 2'000'000 / scale;
    const std::size_t vocab = 30'000;
    std::vector<std::string> tokens;
    tokens.reserve(n_tokens);
    for (std::size_t i = 0; i < n_tokens; ++i) {
      const auto id = static_cast<std::size_t>(static_cast<double>(vocab) *
                                               std::pow(uniform(rng), 3.0));
      tokens.push_back("w" + std::to_string(std::min(id, vocab - 1)));
    }
    Result r;
    double t = now();
    const auto serial = kernels::map_and_count_serial(tokens);
    r.serial_s = now() - t;
    t = now();
    const auto parallel = kernels::map_and_count(tokens);
    r.parallel_s = now() - t;
    r.agree = serial.vocab == parallel.vocab && serial.counts == parallel.counts &&
              serial.ids == parallel.ids;
    report("map_and_count", r);
  }

  // --- histogram --------------------------------------------------------
  {
    const std::size_t n = 20'000'000 / scale;
    const std::size_t bins = 4096;
    std::vector<std::uint32_t> values(n);
    for (auto& v : values) v = static_cast<std::uint32_t>(rng() % bins);
    Result r;
    double t = now();
    const auto serial = kernels::histogram_serial(values, bins);
    r.serial_s = now() - t;
    t = now();
    const auto parallel = kernels::histogram(values, bins);
    r.parallel_s = now() - t;
    r.agree = serial == parallel;
    report("histogram", r);
  }

  // --- codeword packing ------------------------------------------------
  {
    const std::size_t n_units = 1000;
    const std::size_t n = 5'000'000 / scale;
    std::vector<std::uint64_t> weights(n_units);
    for (auto& w : weights) w = 1 + rng() % 1000;
    const Codebook book = derive_codebook(build_huffman_tree(weights));
    std::vector<std::uint32_t> units(n);
    for (auto& u : units) u = static_cast<std::uint32_t>(rng() % n_units);
    Result r;
    std::uint64_t bits_serial = 0, bits_parallel = 0;
    double t = now();
    const auto serial = kernels::pack_codewords_serial(units, book.entries, bits_serial);
    r.serial_s = now() - t;
    t = now();
    const auto parallel = kernels::pack_codewords(units, book.entries, bits_parallel);
    r.parallel_s = now() - t;
    r.agree = serial == parallel && bits_serial == bits_parallel;
    report("pack_codewords", r);
  }

  // --- edit distance -----------------------------------------------------
  {
    const std::size_t n = 6000 / (scale > 1 ? 4 : 1);
    std::vector<std::uint32_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint32_t>(rng() % 50);
      b[i] = uniform(rng) < 0.7 ? a[i] : static_cast<std::uint32_t>(rng() % 50);
    }
    Result r;
    double t = now();
    const std::uint64_t serial = kernels::levenshtein_serial(a, b);
    r.serial_s = now() - t;
    t = now();
    const std::uint64_t parallel = kernels::levenshtein(a, b);
    r.parallel_s = now() - t;
    r.agree = serial == parallel;
    report("levenshtein", r);
  }

  // --- entropy accumulation ---------------------------------------------
  {
    const std::size_t n = 8'000'000 / scale;
    std::vector<double> probs(n);
    double sum = 0;
    for (auto& p : probs) {
      p = uniform(rng);
      sum += p;
    }
    for (auto& p : probs) p /= sum;
    Result r;
    double t = now();
    const double serial = kernels::neg_plogp_sum_serial(probs);
    r.serial_s = now() - t;
    t = now();
    const double parallel = kernels::neg_plogp_sum(probs);
    r.parallel_s = now() - t;
    r.agree = std::abs(serial - parallel) <= 1e-9 * std::max(1.0, std::abs(serial));
    report("neg_plogp_sum", r);
  }

  return 0;
}
