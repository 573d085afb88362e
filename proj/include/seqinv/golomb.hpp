#pragma once

// Feedback shift registers with feedback f = X0 + g(X1..X_{m-1}).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqinv/hankel.hpp"
#include "seqinv/monomial.hpp"

namespace seqinv {

struct FsrSpec {
  unsigned order = 0;
  Polynomial g;  // over X1..X_{m-1}; a constant term is allowed

  /// f = X0 + g as a polynomial in X0..X_{m-1}.
  Polynomial feedback() const;
  std::string to_string() const;  // "m=<k>; g=<ANF>"
};

/// Validates that g has order `order` and does not use X0.
FsrSpec make_fsr_spec(unsigned order, Polynomial g);
/// Parses "m=<k>; g=<ANF>" (also accepts ',' or ';' separators).
FsrSpec parse_fsr_spec(std::string_view text);

/// (x0, ..., x_{m-1}) -> (x1, ..., x_{m-1}, f(x)).
gf2::BitVec fsr_step(const FsrSpec& spec, const gf2::BitVec& state);

/// s_0..s_{m-1} = seed, then s_{m+j} = f(s_j..s_{j+m-1}).
BitSequence generate(const FsrSpec& spec, const gf2::BitVec& seed_state, std::size_t length);

struct GolombSolution {
  FsrSpec spec;
  gf2::BitVec inverse;  // one bit per coordinate
};

struct GolombResult {
  bool consistent = false;
  std::vector<GolombSolution> family;
  std::size_t kernel_dimension = 0;
  bool truncated = false;
  std::size_t rank = 0;
};

GolombResult solve_golomb(const VectorSequence& vs, unsigned m, unsigned d, std::uint64_t limit = 1024);
GolombResult solve_golomb(const BitSequence& s, unsigned m, unsigned d, std::uint64_t limit = 1024);

inline constexpr unsigned nonsingular_check_cap = 20;

/// Exhaustive bijectivity test of the state map of an order-m FSR with
/// feedback f. Throws std::invalid_argument for m above `cap`.
bool is_nonsingular_fsr(const Polynomial& f, unsigned m, unsigned cap = nonsingular_check_cap);
bool is_nonsingular_fsr(const FsrSpec& spec, unsigned cap = nonsingular_check_cap);

}  // namespace seqinv
