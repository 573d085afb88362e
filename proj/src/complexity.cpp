#include "seqinv/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace seqinv {

std::string to_string(PciStatus s) {
  switch (s) {
    case PciStatus::found:
      return "found";
    case PciStatus::no_feasible_m:
      return "no_feasible_m";
    case PciStatus::no_invertible_solution:
      return "no_invertible_solution";
  }
  return "unknown";
}

namespace {

bool feasible(std::size_t n, std::size_t M, unsigned m, unsigned d) {
  if (m < d || m >= M) return false;
  return n * (M - m) >= term_count(m, d);
}

// Distinct length-m windows over all coordinates, sorted.
std::vector<gf2::BitVec> distinct_windows(const VectorSequence& vs, unsigned m) {
  std::vector<gf2::BitVec> out;
  out.reserve(vs.dimension() * (vs.length() - m));
  for (std::size_t i = 0; i < vs.dimension(); ++i) {
    for (std::size_t j = 0; j + m < vs.length(); ++j) out.push_back(vs.coord(i).slice(j, m));
  }
  auto less = [](const gf2::BitVec& a, const gf2::BitVec& b) {
    return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(), b.words().end());
  };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t window_rank(const std::vector<gf2::BitVec>& windows, unsigned m, unsigned d, bool allow_constant) {
  const auto basis = enumerate_basis(m, d, allow_constant);
  std::vector<Monomial> terms;
  for (const auto& t : basis.h_basis) terms.push_back(t.with(0));
  terms.insert(terms.end(), basis.g_basis.begin(), basis.g_basis.end());
  gf2::BitMatrix a(windows.size(), terms.size());
  for (std::size_t r = 0; r < windows.size(); ++r) {
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].eval(windows[r])) a.set(r, k);
    }
  }
  return gf2::rank(a);
}

}  // namespace

PciReport pci(const VectorSequence& vs, unsigned d, bool allow_constant) {
  if (d < 1) throw std::invalid_argument("pci requires d >= 1");
  PciReport rep;
  rep.d = d;
  rep.allow_constant = allow_constant;
  const std::size_t n = vs.dimension();
  const std::size_t M = vs.length();

  unsigned last = d;
  if (!feasible(n, M, d, d)) return rep;
  while (feasible(n, M, last + 1, d)) ++last;
  rep.feasible_range = std::make_pair(d, last);

  // Rows depend only on their window, so rank needs only the distinct windows
  // and is at most their number.
  const unsigned count = last - d + 1;
  std::vector<std::vector<gf2::BitVec>> windows(count);
  std::vector<std::size_t> bound(count);
  for (unsigned k = 0; k < count; ++k) {
    windows[k] = distinct_windows(vs, d + k);
    bound[k] = std::min<std::size_t>(windows[k].size(), term_count(d + k, d) + (allow_constant ? 1 : 0));
  }
  std::vector<std::size_t> later_bound(count + 1, 0);
  for (unsigned k = count; k-- > 0;) later_bound[k] = std::max(later_bound[k + 1], bound[k]);

  rep.rank_profile.resize(count);
  unsigned computed = 0;
  auto compute = [&](unsigned k) {
    rep.rank_profile[k] = {d + k, window_rank(windows[k], d + k, d, allow_constant), true};
    windows[k].clear();
  };
  for (; computed < count; ++computed) {
    compute(computed);
    rep.max_rank = std::max(rep.max_rank, rep.rank_profile[computed].rank);
    if (rep.max_rank >= later_bound[computed + 1]) {
      ++computed;
      break;
    }
  }
  for (unsigned k = computed; k < count; ++k) rep.rank_profile[k] = {d + k, bound[k], false};

  rep.status = PciStatus::no_invertible_solution;
  for (unsigned k = 0; k < count; ++k) {
    if (bound[k] < rep.max_rank) continue;
    if (!rep.rank_profile[k].exact) compute(k);
    if (rep.rank_profile[k].rank != rep.max_rank) continue;
    const unsigned m = d + k;
    auto sys = std::make_shared<const HankelSystem>(build_system_vector(vs, m, d, allow_constant));
    if (!gf2::is_consistent(sys->augmented(), sys->augmented_rhs())) continue;
    rep.status = PciStatus::found;
    rep.m = m;
    rep.n_c = term_count(m, d);
    rep.solution = solve_invertible(std::move(sys));
    break;
  }
  return rep;
}

PciReport pci(const BitSequence& s, unsigned d, bool allow_constant) {
  return pci(VectorSequence::from_scalar(s), d, allow_constant);
}

std::optional<LcInverse> lc_inverse(const BitSequence& s) {
  const auto rep = pci(s, 1, false);
  if (rep.status != PciStatus::found) return std::nullopt;
  const auto& sol = *rep.solution;
  return LcInverse{*rep.m, sol.polynomial_text(), sol.coeffs, sol.inverse.get(0)};
}

std::size_t berlekamp_massey(const BitSequence& s) {
  const std::size_t N = s.size();
  std::vector<std::uint8_t> c(N + 1, 0), b(N + 1, 0), t;
  c[0] = b[0] = 1;
  std::size_t L = 0;
  std::ptrdiff_t m = -1;
  for (std::size_t i = 0; i < N; ++i) {
    std::uint8_t disc = s.get(i);
    for (std::size_t k = 1; k <= L; ++k) disc ^= c[k] & static_cast<std::uint8_t>(s.get(i - k));
    if (!disc) continue;
    t = c;
    const std::size_t shift = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) - m);
    for (std::size_t k = 0; k + shift <= N; ++k) c[k + shift] ^= b[k];
    if (2 * L <= i) {
      L = i + 1 - L;
      m = static_cast<std::ptrdiff_t>(i);
      b = t;
    }
  }
  return L;
}

namespace {

// Window of length m starting at t, all coordinates, as a byte string key.
std::string window_key(const VectorSequence& vs, std::size_t t, std::size_t m) {
  std::string key;
  key.reserve(vs.dimension() * m);
  for (std::size_t i = 0; i < vs.dimension(); ++i) {
    for (std::size_t k = 0; k < m; ++k) key += vs.coord(i).get(t + k) ? '1' : '0';
  }
  return key;
}

bool determines_successor(const VectorSequence& vs, std::size_t m) {
  const std::size_t M = vs.length();
  if (vs.dimension() == 1 && m <= 64) {
    const auto& s = vs.coord(0);
    std::unordered_map<std::uint64_t, bool> seen;
    seen.reserve(M);
    std::uint64_t w = 0;
    const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    for (std::size_t k = 0; k < m; ++k) w = (w << 1) | s.get(k);
    for (std::size_t t = 0; t + m < M; ++t) {
      const bool next = s.get(t + m);
      auto [it, inserted] = seen.emplace(w, next);
      if (!inserted && it->second != next) return false;
      w = ((w << 1) | next) & mask;
    }
    return true;
  }
  std::unordered_map<std::string, std::string> seen;
  for (std::size_t t = 0; t + m < M; ++t) {
    auto next = vs.element(t + m).to_string();
    auto [it, inserted] = seen.emplace(window_key(vs, t, m), next);
    if (!inserted && it->second != next) return false;
  }
  return true;
}

}  // namespace

MocResult moc(const VectorSequence& vs) {
  const std::size_t M = vs.length();
  if (M < 2) throw std::invalid_argument("moc needs a sequence of length at least 2");
  // Working window lengths form an up-set: if m-windows fix the successor so
  // do (m+1)-windows. Binary search over [1, M-1].
  std::size_t lo = 1, hi = M - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (determines_successor(vs, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return MocResult{lo, lo == M - 1};
}

MocResult moc(const BitSequence& s) { return moc(VectorSequence::from_scalar(s)); }

MsetComplexity complexity_relative(const VectorSequence& vs, const MonomialSet& mset) {
  const auto sys = build_system_custom(vs, mset);
  MsetComplexity c;
  c.order = sys.m;
  c.rank = gf2::rank(gf2::unique_rows(sys.matrix()));
  c.defined = gf2::is_consistent(sys.augmented(), sys.augmented_rhs());
  c.value = std::sqrt(static_cast<double>(c.rank) * sys.m);
  return c;
}

MsetComplexity complexity_relative(const BitSequence& s, const MonomialSet& mset) {
  return complexity_relative(VectorSequence::from_scalar(s), mset);
}

}  // namespace seqinv
