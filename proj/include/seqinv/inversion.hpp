#pragma once

// Associated polynomials, inverses and solution counts for a Hankel system.
//
// Coefficient vectors are (a, b) concatenated: the first h_cols() bits are the
// coefficients of h, the rest those of g.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqinv/gf2.hpp"
#include "seqinv/hankel.hpp"

namespace seqinv {

enum class InversionStatus {
  invertible,                // RRs and <vh, a> = 1 both hold for some f
  associated_not_invertible, // RRs solvable, but every solution has h(S) = 0
  no_associated,             // RRs alone are inconsistent
};

std::string to_string(InversionStatus s);

struct AssociatedFamily {
  std::shared_ptr<const HankelSystem> system;
  std::optional<gf2::BitVec> particular;
  std::vector<gf2::BitVec> kernel;
  /// Whether the <vh, a> = 1 rows were part of the solved system.
  bool constrained = false;

  bool empty() const noexcept { return !particular.has_value(); }
  std::size_t dimension() const noexcept { return kernel.size(); }
  /// Membership test: coeffs solves the same equations.
  bool contains(const gf2::BitVec& coeffs) const;
};

struct CountBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  /// Exact number of invertible associated polynomials in the basis.
  std::uint64_t exact = 0;
  /// Some value hit 2^64 - 1.
  bool saturated = false;
  std::size_t rank = 0;  // rank of [h1 | h2]
};

struct InversionSolution {
  gf2::BitVec inverse;  // one bit per coordinate
  gf2::BitVec coeffs;   // canonical (a, b)
  AssociatedFamily family;
  bool common_inverse = false;
  CountBounds counts;

  std::string polynomial_text() const { return family.system->polynomial_text(coeffs); }
};

struct ProjectionDecomposition {
  gf2::BitMatrix h11, h12, h22;
  gf2::BitVec s1, s2;
  gf2::BitMatrix transform;
};

/// Particular solution of a * x = rhs used as the family representative:
/// RREF with pivots taken from the last column backwards and every free
/// variable zero. Higher-degree monomials are preferred as pivots.
std::optional<gf2::BitVec> canonical_coefficients(const gf2::BitMatrix& a, const gf2::BitVec& rhs);

/// s_{m-1} XOR <vg, b> for each coordinate.
gf2::BitVec inverse_of(const HankelSystem& sys, const gf2::BitVec& coeffs);
/// <vh_i, a> = 1 for every coordinate.
bool has_unique_inverse(const HankelSystem& sys, const gf2::BitVec& coeffs);

AssociatedFamily solve_associated(const HankelSystem& sys);
AssociatedFamily solve_associated(std::shared_ptr<const HankelSystem> sys);

InversionStatus inversion_status(const HankelSystem& sys);
std::optional<InversionSolution> solve_invertible(const HankelSystem& sys);
std::optional<InversionSolution> solve_invertible(std::shared_ptr<const HankelSystem> sys);

ProjectionDecomposition project(const HankelSystem& sys);
bool inverse_exists(const HankelSystem& sys);
/// Throws std::logic_error if no inverse exists.
bool common_inverse_check(const HankelSystem& sys);
/// Throws std::logic_error if no inverse exists.
CountBounds count_bounds(const HankelSystem& sys);

struct FamilyMember {
  gf2::BitVec coeffs;
  std::optional<gf2::BitVec> inverse;  // absent when some <vh_i, a> = 0
};

struct FamilyEnumeration {
  std::vector<FamilyMember> members;
  bool truncated = false;
};

inline constexpr std::uint64_t default_family_limit = std::uint64_t{1} << 20;

/// particular XOR (subset of kernel), subsets taken in binary counting order
/// over the kernel basis. Throws if the family is empty.
FamilyEnumeration enumerate_family(const AssociatedFamily& fam, std::uint64_t limit = default_family_limit);

}  // namespace seqinv
