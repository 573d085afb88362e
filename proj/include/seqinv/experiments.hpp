#pragma once

// Monte-Carlo harness for inversion from partial sequences.
//
// A trial generates S(N), keeps the prefix S(M), inverts the prefix with
// PCI(d) and compares the result with the known predecessor of s_0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqinv/hankel.hpp"

namespace seqinv {

enum class GeneratorKind { random_bits, fsr, permutation };

std::string to_string(GeneratorKind g);
GeneratorKind parse_generator(std::string_view text);

struct TrialParams {
  GeneratorKind generator = GeneratorKind::fsr;
  std::size_t N = 256;
  std::size_t M = 64;
  unsigned d = 2;
  bool allow_constant = false;
  /// FSR order, or state width for permutation maps.
  unsigned order = 5;
  /// Degree bound of the random FSR feedback g.
  unsigned fsr_degree = 2;
  std::uint64_t exact_cap = 1000000;
  std::uint64_t subset_samples = 20000;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t N = 0;
  std::size_t M = 0;
  unsigned d = 0;
  std::optional<unsigned> m;  // PCI(d) order found on S(M)
  std::string basis;          // e.g. "P(4,2)"
  std::size_t rank_partial = 0;
  std::size_t rank_full = 0;
  bool rank_captured = false;
  bool inverse_correct = false;
  /// No ground truth (random bits whose full sequence is not invertible).
  bool indeterminate = false;
  std::string reason;
  std::optional<std::string> inverse;
  std::optional<std::string> true_inverse;
  std::size_t moc_partial = 0;
  std::size_t moc_full = 0;
  double subset_count = 0.0;
  bool subset_exact = true;
};

/// Per-trial seed from master seed and trial index (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

TrialRecord run_trial(const TrialParams& params, std::uint64_t seed);

struct SubsetCount {
  double count = 0.0;
  bool exact = true;
  std::size_t rank = 0;
};

/// Number of r-column subsets of [h1 | h2] with rank r = rank [h1 | h2].
/// Exact when C(n_C, r) <= exact_cap, otherwise estimated from `samples`
/// uniform r-subsets drawn with `seed`.
SubsetCount count_maximal_rank_subsets(const HankelSystem& sys, std::uint64_t exact_cap = 1000000,
                                       std::uint64_t samples = 20000, std::uint64_t seed = 1);
SubsetCount count_maximal_rank_subsets(const gf2::BitMatrix& a, std::uint64_t exact_cap = 1000000,
                                       std::uint64_t samples = 20000, std::uint64_t seed = 1);

struct Proportion {
  std::size_t successes = 0;
  std::size_t total = 0;
  double value = 0.0;
  double lo = 0.0;  // 95% Wilson interval
  double hi = 0.0;
};

Proportion wilson(std::size_t successes, std::size_t total, double z = 1.959963984540054);

struct MocStat {
  std::size_t N = 0;
  std::size_t samples = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double benchmark = 0.0;  // 2 * log2 N
};

/// MOC of `samples` uniformly random sequences of each length.
std::vector<MocStat> moc_statistics(const std::vector<std::size_t>& lengths, std::size_t samples, std::uint64_t seed);

struct ConjectureReport {
  std::size_t trials = 0;
  std::size_t solved = 0;         // PCI found on the partial sequence
  std::size_t indeterminate = 0;
  Proportion p0;                  // rank captured, over all trials
  Proportion p_inv;               // inverse correct, over determinate trials
  Proportion p_correct_given_captured;
  std::size_t captured_but_wrong = 0;
  double p_exp = 0.0;             // mean of 1 / subset count over solved trials
  double p_inv_conjectured = 0.0; // p_exp * p0
  double mean_subset_count = 0.0;
  bool subset_counts_exact = true;
  std::vector<MocStat> moc_stats;
};

ConjectureReport estimate(const std::vector<TrialRecord>& records, std::vector<MocStat> moc_stats = {});

struct ExperimentConfig {
  TrialParams params;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<std::size_t> moc_lengths;
  std::size_t moc_samples = 200;
  unsigned threads = 1;
};

/// Line-oriented key=value; '#' starts a comment. Keys: generator, N, M, d,
/// trials, seed, allow_constant, exact_cap, subset_samples, order,
/// fsr_degree, moc_lengths, moc_samples, threads.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::string& path);

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ConjectureReport report;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace seqinv
