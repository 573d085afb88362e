#include "seqinv/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seqinv/complexity.hpp"
#include "seqinv/golomb.hpp"
#include "seqinv/localinv.hpp"

namespace seqinv {

std::string to_string(GeneratorKind g) {
  switch (g) {
    case GeneratorKind::random_bits:
      return "random";
    case GeneratorKind::fsr:
      return "fsr";
    case GeneratorKind::permutation:
      return "perm";
  }
  return "unknown";
}

GeneratorKind parse_generator(std::string_view text) {
  if (text == "random") return GeneratorKind::random_bits;
  if (text == "fsr") return GeneratorKind::fsr;
  if (text == "perm") return GeneratorKind::permutation;
  throw ParseError("unknown generator '" + std::string(text) + "' (random, fsr, perm)");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

gf2::BitVec random_bits(std::mt19937_64& rng, std::size_t len) {
  gf2::BitVec v(len);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i % 64 == 0) word = rng();
    if ((word >> (i % 64)) & 1U) v.set(i);
  }
  return v;
}

// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

struct Generated {
  VectorSequence full;
  std::optional<gf2::BitVec> predecessor;
};

Generated generate_sequence(const TrialParams& p, std::mt19937_64& rng) {
  switch (p.generator) {
    case GeneratorKind::random_bits:
      return {VectorSequence::from_scalar(random_bits(rng, p.N)), std::nullopt};
    case GeneratorKind::fsr: {
      if (p.order < 2) throw std::invalid_argument("fsr generator needs order >= 2");
      const auto basis = enumerate_basis(p.order, std::min(p.fsr_degree, p.order), true);
      const auto coeffs = random_bits(rng, basis.g_basis.size());
      const auto spec = make_fsr_spec(p.order, select_terms(Polynomial{p.order, basis.g_basis}, coeffs));
      const auto out = generate(spec, random_bits(rng, p.order), p.N + 1);
      gf2::BitVec pred(1);
      pred.set(0, out.get(0));
      return {VectorSequence::from_scalar(out.slice(1, p.N)), pred};
    }
    case GeneratorKind::permutation: {
      const auto table = random_permutation(rng(), p.order);
      std::vector<std::uint32_t> inverse(table.size());
      for (std::uint32_t x = 0; x < table.size(); ++x) inverse[table[x]] = x;
      std::uint32_t y = static_cast<std::uint32_t>(uniform_below(rng, table.size()));
      std::vector<gf2::BitVec> states;
      states.reserve(p.N);
      const std::uint32_t pred = inverse[y];
      for (std::size_t t = 0; t < p.N; ++t) {
        states.push_back(state_from_uint(y, p.order));
        y = table[y];
      }
      return {VectorSequence::from_states(states), state_from_uint(pred, p.order)};
    }
  }
  throw std::logic_error("unhandled generator");
}

}  // namespace

TrialRecord run_trial(const TrialParams& params, std::uint64_t seed) {
  if (params.M < 2 || params.M > params.N) throw std::invalid_argument("run_trial needs 2 <= M <= N");
  std::mt19937_64 rng(seed);
  TrialRecord rec;
  rec.seed = seed;
  rec.N = params.N;
  rec.M = params.M;
  rec.d = params.d;

  const auto gen = generate_sequence(params, rng);
  const auto partial = gen.full.prefix(params.M);
  rec.moc_partial = moc(partial).value;
  rec.moc_full = moc(gen.full).value;

  std::optional<gf2::BitVec> truth = gen.predecessor;
  if (!truth) {
    const auto full_rep = pci(gen.full, params.d, params.allow_constant);
    if (full_rep.status == PciStatus::found) truth = full_rep.solution->inverse;
  }
  if (truth) rec.true_inverse = truth->to_string();
  rec.indeterminate = !truth.has_value();

  const auto rep = pci(partial, params.d, params.allow_constant);
  if (rep.status != PciStatus::found) {
    rec.reason = "partial sequence: " + to_string(rep.status);
    return rec;
  }
  const unsigned m = *rep.m;
  rec.m = m;
  rec.basis = "P(" + std::to_string(m) + "," + std::to_string(params.d) + ")";
  const auto& sys = *rep.solution->family.system;
  const auto reduced = gf2::unique_rows(sys.matrix());
  rec.rank_partial = gf2::rank(reduced);
  if (m < params.N) {
    const auto full_sys = build_system_vector(gen.full, m, params.d, params.allow_constant);
    rec.rank_full = gf2::rank(gf2::unique_rows(full_sys.matrix()));
  } else {
    rec.rank_full = rec.rank_partial;
  }
  rec.rank_captured = rec.rank_partial == rec.rank_full;
  rec.inverse = rep.solution->inverse.to_string();
  if (truth) {
    rec.inverse_correct = rep.solution->inverse == *truth;
  } else {
    rec.reason = "no ground truth: full sequence has no PCI solution";
  }
  const auto sc = count_maximal_rank_subsets(reduced, params.exact_cap, params.subset_samples, seed ^ 0x5eed);
  rec.subset_count = sc.count;
  rec.subset_exact = sc.exact;
  return rec;
}

namespace {

// Echelon basis with one pivot per vector, for incremental independence tests.
struct IncrementalBasis {
  std::vector<gf2::BitVec> vecs;
  std::vector<std::size_t> pivots;

  bool try_add(gf2::BitVec v) {
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (v.get(pivots[k])) v ^= vecs[k];
    }
    const auto p = v.find_next(0);
    if (p == v.size()) return false;
    vecs.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  void pop() {
    vecs.pop_back();
    pivots.pop_back();
  }
};

double count_independent(const std::vector<gf2::BitVec>& cols, std::size_t r, std::size_t start, IncrementalBasis& basis) {
  if (basis.vecs.size() == r) return 1.0;
  double total = 0.0;
  for (std::size_t c = start; c + (r - basis.vecs.size()) <= cols.size(); ++c) {
    if (!basis.try_add(cols[c])) continue;
    total += count_independent(cols, r, c + 1, basis);
    basis.pop();
  }
  return total;
}

double binomial_real(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

SubsetCount count_maximal_rank_subsets(const gf2::BitMatrix& a, std::uint64_t exact_cap, std::uint64_t samples,
                                       std::uint64_t seed) {
  SubsetCount out;
  const auto cols = a.transpose().row_data();
  const std::size_t n = cols.size();
  out.rank = gf2::rank(a);
  const std::size_t r = out.rank;
  const auto total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(r));
  if (total <= exact_cap) {
    IncrementalBasis basis;
    out.count = count_independent(cols, r, 0, basis);
    out.exact = true;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(n);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    IncrementalBasis basis;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      const auto j = i + uniform_below(rng, n - i);
      std::swap(idx[i], idx[j]);
      ok = basis.try_add(cols[idx[i]]);
    }
    if (ok) ++hits;
  }
  out.count = samples ? binomial_real(n, r) * static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
  out.exact = false;
  return out;
}

SubsetCount count_maximal_rank_subsets(const HankelSystem& sys, std::uint64_t exact_cap, std::uint64_t samples,
                                       std::uint64_t seed) {
  return count_maximal_rank_subsets(gf2::unique_rows(sys.matrix()), exact_cap, samples, seed);
}

Proportion wilson(std::size_t successes, std::size_t total, double z) {
  Proportion p{successes, total, 0.0, 0.0, 1.0};
  if (total == 0) return p;
  const double n = static_cast<double>(total);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  p.value = phat;
  p.lo = std::max(0.0, center - half);
  p.hi = std::min(1.0, center + half);
  return p;
}

std::vector<MocStat> moc_statistics(const std::vector<std::size_t>& lengths, std::size_t samples, std::uint64_t seed) {
  std::vector<MocStat> out;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    MocStat st;
    st.N = lengths[li];
    st.samples = samples;
    st.benchmark = 2.0 * std::log2(static_cast<double>(st.N));
    std::mt19937_64 rng(derive_seed(seed, li));
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double v = static_cast<double>(moc(random_bits(rng, st.N)).value);
      sum += v;
      sum2 += v * v;
    }
    if (samples) {
      st.mean = sum / samples;
      st.stddev = samples > 1 ? std::sqrt(std::max(0.0, (sum2 - samples * st.mean * st.mean) / (samples - 1))) : 0.0;
    }
    out.push_back(st);
  }
  return out;
}

ConjectureReport estimate(const std::vector<TrialRecord>& records, std::vector<MocStat> moc_stats) {
  ConjectureReport rep;
  rep.trials = records.size();
  std::size_t captured = 0, correct = 0, determinate = 0, captured_det = 0, captured_correct = 0;
  double inv_sum = 0.0, count_sum = 0.0;
  for (const auto& r : records) {
    if (r.m) {
      ++rep.solved;
      if (r.subset_count > 0) inv_sum += 1.0 / r.subset_count;
      count_sum += r.subset_count;
      rep.subset_counts_exact = rep.subset_counts_exact && r.subset_exact;
    }
    if (r.rank_captured) ++captured;
    if (r.indeterminate) {
      ++rep.indeterminate;
      continue;
    }
    ++determinate;
    if (r.inverse_correct) ++correct;
    if (r.rank_captured) {
      ++captured_det;
      if (r.inverse_correct) {
        ++captured_correct;
      } else {
        ++rep.captured_but_wrong;
      }
    }
  }
  rep.p0 = wilson(captured, rep.trials);
  rep.p_inv = wilson(correct, determinate);
  rep.p_correct_given_captured = wilson(captured_correct, captured_det);
  if (rep.solved) {
    rep.p_exp = inv_sum / rep.solved;
    rep.mean_subset_count = count_sum / rep.solved;
  }
  rep.p_inv_conjectured = rep.p_exp * rep.p0.value;
  rep.moc_stats = std::move(moc_stats);
  return rep;
}

namespace {

std::string trim_copy(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-') {
    throw ParseError("config key '" + key + "' needs a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ParseError("config key '" + key + "' needs a boolean, got '" + value + "'");
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = trim_copy(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const auto key = trim_copy(std::string_view(t).substr(0, eq));
    const auto value = trim_copy(std::string_view(t).substr(eq + 1));
    auto& p = cfg.params;
    if (key == "generator") {
      p.generator = parse_generator(value);
    } else if (key == "N") {
      p.N = to_u64(key, value);
    } else if (key == "M") {
      p.M = to_u64(key, value);
    } else if (key == "d") {
      p.d = static_cast<unsigned>(to_u64(key, value));
    } else if (key == "trials") {
      cfg.trials = to_u64(key, value);
    } else if (key == "seed") {
      cfg.seed = to_u64(key, value);
    } else if (key == "allow_constant") {
      p.allow_constant = to_bool(key, value);
    } else if (key == "exact_cap") {
      p.exact_cap = to_u64(key, value);
    } else if (key == "subset_samples") {
      p.subset_samples = to_u64(key, value);
    } else if (key == "order" || key == "n") {
      p.order = static_cast<unsigned>(to_u64(key, value));
    } else if (key == "fsr_degree") {
      p.fsr_degree = static_cast<unsigned>(to_u64(key, value));
    } else if (key == "moc_lengths") {
      cfg.moc_lengths.clear();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        auto comma = value.find(',', pos);
        if (comma == std::string::npos) comma = value.size();
        const auto item = trim_copy(std::string_view(value).substr(pos, comma - pos));
        if (!item.empty()) cfg.moc_lengths.push_back(to_u64(key, item));
        pos = comma + 1;
      }
    } else if (key == "moc_samples") {
      cfg.moc_samples = to_u64(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(to_u64(key, value));
    } else {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.params.d < 1) throw ParseError("config: d must be at least 1");
  if (cfg.params.M < 2 || cfg.params.M > cfg.params.N) throw ParseError("config: need 2 <= M <= N");
  for (auto n : cfg.moc_lengths) {
    if (n < 2) throw ParseError("config: moc_lengths entries must be at least 2");
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.records.resize(cfg.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) res.records[i] = run_trial(cfg.params, derive_seed(cfg.seed, i));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.trials && !failed; i = next++) {
          try {
            res.records[i] = run_trial(cfg.params, derive_seed(cfg.seed, i));
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  // Stream separate from every trial index.
  auto stats = moc_statistics(cfg.moc_lengths, cfg.moc_samples, derive_seed(cfg.seed, ~std::uint64_t{0}));
  res.report = estimate(res.records, std::move(stats));
  return res;
}

}  // namespace seqinv
