#pragma once

// Complexity measures: PCI(d), linear complexity, maximal order complexity
// and the monomial-set complexity sqrt(r * m).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqinv/hankel.hpp"
#include "seqinv/inversion.hpp"

namespace seqinv {

enum class PciStatus { found, no_feasible_m, no_invertible_solution };

std::string to_string(PciStatus s);

struct RankEntry {
  unsigned m = 0;
  /// The RR matrix rank when exact, otherwise an upper bound not above the
  /// maximum (the search stops once no later order can beat it).
  std::size_t rank = 0;
  bool exact = true;
};

struct PciReport {
  unsigned d = 0;
  bool allow_constant = false;
  PciStatus status = PciStatus::no_feasible_m;
  std::optional<unsigned> m;
  /// Orders with d <= m and n * (M - m) >= n_C(m, d); empty if none.
  std::optional<std::pair<unsigned, unsigned>> feasible_range;
  std::vector<RankEntry> rank_profile;
  std::size_t max_rank = 0;
  std::uint64_t n_c = 0;  // at the found m
  std::optional<InversionSolution> solution;
};

PciReport pci(const VectorSequence& vs, unsigned d, bool allow_constant = false);
PciReport pci(const BitSequence& s, unsigned d, bool allow_constant = false);

struct LcInverse {
  unsigned m = 0;
  std::string polynomial;
  gf2::BitVec coeffs;
  bool inverse = false;
};

std::optional<LcInverse> lc_inverse(const BitSequence& s);

std::size_t berlekamp_massey(const BitSequence& s);

struct MocResult {
  std::size_t value = 0;
  /// No window length below M - 1 works; value is then M - 1.
  bool degenerate = false;
};

/// Throws if the sequence is shorter than 2.
MocResult moc(const BitSequence& s);
MocResult moc(const VectorSequence& vs);

struct MsetComplexity {
  unsigned order = 0;
  std::size_t rank = 0;
  double value = 0.0;
  bool defined = false;
};

MsetComplexity complexity_relative(const VectorSequence& vs, const MonomialSet& mset);
MsetComplexity complexity_relative(const BitSequence& s, const MonomialSet& mset);

}  // namespace seqinv
