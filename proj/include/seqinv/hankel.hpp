#pragma once

// Hankel systems of recurrence relations over a monomial basis.
//
// For order m the candidate polynomial is f = X0 * h + g with h, g over
// X1..X_{m-1}. Row j of the system is the relation s_{m+j} = f(s_j..s_{j+m-1})
// written as a linear equation in the coefficients of h and g.

#include <cstddef>
#include <string>
#include <vector>

#include "seqinv/gf2.hpp"
#include "seqinv/monomial.hpp"

namespace seqinv {

using BitSequence = gf2::BitVec;

/// n coordinate sequences of a common length M.
class VectorSequence {
 public:
  VectorSequence() = default;
  explicit VectorSequence(std::vector<BitSequence> coords);
  static VectorSequence from_scalar(const BitSequence& s) { return VectorSequence({s}); }
  /// One string per coordinate.
  static VectorSequence from_strings(const std::vector<std::string>& lines);
  /// states[t] is element t; coordinate i takes bit i of each state.
  static VectorSequence from_states(const std::vector<gf2::BitVec>& states);

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::size_t length() const noexcept { return coords_.empty() ? 0 : coords_.front().size(); }
  const BitSequence& coord(std::size_t i) const { return coords_.at(i); }
  const std::vector<BitSequence>& coords() const noexcept { return coords_; }
  /// The n-bit element at time t.
  gf2::BitVec element(std::size_t t) const;
  VectorSequence prefix(std::size_t len) const;

 private:
  std::vector<BitSequence> coords_;
};

/// Ordered monomial set over X0..X_{m-1}, m = 1 + largest index used.
class MonomialSet {
 public:
  explicit MonomialSet(std::vector<Monomial> monomials);
  static MonomialSet from_basis(const BasisSplit& basis);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return monomials_.size(); }

 private:
  std::vector<Monomial> monomials_;
  unsigned order_ = 1;
};

struct HankelSystem {
  unsigned m = 0;
  unsigned d = 0;  // 0 for a custom monomial set
  bool allow_constant = false;
  std::size_t n = 0;  // coordinates
  std::size_t M = 0;  // sequence length

  // Column labels. h column k stands for X0 * h_terms[k]; h_terms never
  // contain X0, so the bare X0 appears as the constant.
  std::vector<Monomial> h_terms;
  std::vector<Monomial> g_terms;

  gf2::BitMatrix h1;  // n * (M - m) rows
  gf2::BitMatrix h2;
  gf2::BitVec rhs;
  gf2::BitMatrix vh;  // one row per coordinate
  gf2::BitMatrix vg;
  gf2::BitVec anchor;  // s_{m-1} of each coordinate

  std::size_t h_cols() const noexcept { return h_terms.size(); }
  std::size_t g_cols() const noexcept { return g_terms.size(); }
  std::size_t cols() const noexcept { return h_terms.size() + g_terms.size(); }
  std::size_t rows() const noexcept { return rhs.size(); }

  /// [h1 | h2]
  gf2::BitMatrix matrix() const;
  /// [[h1 h2], [vh 0]] with right-hand side (rhs, 1...1).
  gf2::BitMatrix augmented() const;
  gf2::BitVec augmented_rhs() const;

  /// Full monomials of f in coefficient order: X0 * h_terms, then g_terms.
  Polynomial basis_polynomial() const;
  std::string polynomial_text(const gf2::BitVec& coeffs) const;
};

/// (s_j, ..., s_{j+m-1}).
gf2::BitVec window(const BitSequence& s, std::size_t j, std::size_t m);

HankelSystem build_system(const BitSequence& s, unsigned m, unsigned d, bool allow_constant);
HankelSystem build_system_vector(const VectorSequence& vs, unsigned m, unsigned d, bool allow_constant);
HankelSystem build_system_custom(const VectorSequence& vs, const MonomialSet& mset);
HankelSystem build_system_custom(const BitSequence& s, const MonomialSet& mset);

/// Comma separated monomials, e.g. "x0*x1, x2, 1".
MonomialSet parse_monomial_set(std::string_view text);

}  // namespace seqinv
