#pragma once

// Local inversion of a black-box map F on n-bit states at a point y.
//
// State bit i is coordinate i; in text form bit 0 is the leftmost character.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqinv/complexity.hpp"
#include "seqinv/golomb.hpp"
#include "seqinv/hankel.hpp"

namespace seqinv {

struct BlackBoxMap {
  std::size_t n = 0;
  /// Must be deterministic and safe to call concurrently.
  std::function<gf2::BitVec(const gf2::BitVec&)> apply;

  gf2::BitVec operator()(const gf2::BitVec& x) const;
};

inline constexpr unsigned max_table_bits = 24;

BlackBoxMap make_fsr_map(const FsrSpec& spec);
/// Table of a uniform random permutation of {0,1}^n drawn from `seed`.
std::vector<std::uint32_t> random_permutation(std::uint64_t seed, unsigned n);
/// Uniform random permutation of {0,1}^n drawn from `seed`; n <= 24.
BlackBoxMap make_permutation_map(std::uint64_t seed, unsigned n);
/// table[x] is the image of state x (bit i of x = coordinate i). The size
/// must be 2^n with n <= 24 and every entry below 2^n.
BlackBoxMap make_table_map(std::vector<std::uint32_t> table);
/// 2^n little-endian uint32 entries.
BlackBoxMap load_table_map(const std::string& path);

/// "fsr:m=<k>;g=<ANF>", "perm:seed=<u64>;n=<k>" or "table:<path>".
BlackBoxMap parse_map_spec(std::string_view spec);

std::uint64_t state_to_uint(const gf2::BitVec& x);
gf2::BitVec state_from_uint(std::uint64_t v, std::size_t n);

/// y, F(y), F^2(y), ... with `steps` elements.
VectorSequence iterate_map(const BlackBoxMap& f, const gf2::BitVec& y, std::size_t steps);

struct LocalInverseResult {
  std::optional<gf2::BitVec> candidate;
  bool verified = false;
  PciReport pci_used;
  std::size_t length = 0;
};

LocalInverseResult local_invert(const BlackBoxMap& f, const gf2::BitVec& y, std::size_t steps, unsigned d,
                                bool allow_constant = false);

}  // namespace seqinv
