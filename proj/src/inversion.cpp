#include "seqinv/inversion.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace seqinv {

std::string to_string(InversionStatus s) {
  switch (s) {
    case InversionStatus::invertible:
      return "invertible";
    case InversionStatus::associated_not_invertible:
      return "associated_not_invertible";
    case InversionStatus::no_associated:
      return "no_associated";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t saturated_value = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow2(std::size_t e, bool& saturated) {
  if (e >= 64) {
    saturated = true;
    return saturated_value;
  }
  return std::uint64_t{1} << e;
}

gf2::BitVec b_part(const HankelSystem& sys, const gf2::BitVec& coeffs) {
  return coeffs.slice(sys.h_cols(), sys.g_cols());
}

AssociatedFamily family_for(std::shared_ptr<const HankelSystem> sys, bool constrained) {
  AssociatedFamily fam;
  const auto a = constrained ? sys->augmented() : sys->matrix();
  const auto rhs = constrained ? sys->augmented_rhs() : sys->rhs;
  fam.particular = canonical_coefficients(a, rhs);
  if (fam.particular) fam.kernel = gf2::kernel_basis(a);
  fam.constrained = constrained;
  fam.system = std::move(sys);
  return fam;
}

}  // namespace

std::optional<gf2::BitVec> canonical_coefficients(const gf2::BitMatrix& a, const gf2::BitVec& rhs) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> reversed(n);
  for (std::size_t c = 0; c < n; ++c) reversed[c] = n - 1 - c;
  const auto y = gf2::solve(a.select_columns(reversed), rhs);
  if (!y) return std::nullopt;
  gf2::BitVec x(n);
  for (std::size_t c = 0; c < n; ++c) x.set(n - 1 - c, y->get(c));
  return x;
}

bool AssociatedFamily::contains(const gf2::BitVec& coeffs) const {
  if (!particular || coeffs.size() != system->cols()) return false;
  if (system->matrix() * coeffs != system->rhs) return false;
  return !constrained || has_unique_inverse(*system, coeffs);
}

gf2::BitVec inverse_of(const HankelSystem& sys, const gf2::BitVec& coeffs) {
  return sys.anchor ^ (sys.vg * b_part(sys, coeffs));
}

bool has_unique_inverse(const HankelSystem& sys, const gf2::BitVec& coeffs) {
  const auto a = coeffs.slice(0, sys.h_cols());
  return (sys.vh * a) == gf2::BitVec(sys.n, true);
}

AssociatedFamily solve_associated(std::shared_ptr<const HankelSystem> sys) { return family_for(std::move(sys), false); }

AssociatedFamily solve_associated(const HankelSystem& sys) {
  return solve_associated(std::make_shared<const HankelSystem>(sys));
}

InversionStatus inversion_status(const HankelSystem& sys) {
  if (gf2::is_consistent(sys.augmented(), sys.augmented_rhs())) return InversionStatus::invertible;
  if (gf2::is_consistent(sys.matrix(), sys.rhs)) return InversionStatus::associated_not_invertible;
  return InversionStatus::no_associated;
}

std::optional<InversionSolution> solve_invertible(std::shared_ptr<const HankelSystem> sys) {
  auto fam = family_for(sys, true);
  if (!fam.particular) return std::nullopt;
  InversionSolution sol;
  sol.coeffs = *fam.particular;
  sol.inverse = inverse_of(*sys, sol.coeffs);
  sol.common_inverse = common_inverse_check(*sys);
  sol.counts = count_bounds(*sys);
  sol.family = std::move(fam);
  return sol;
}

std::optional<InversionSolution> solve_invertible(const HankelSystem& sys) {
  return solve_invertible(std::make_shared<const HankelSystem>(sys));
}

ProjectionDecomposition project(const HankelSystem& sys) {
  const auto a = sys.augmented();
  const auto rhs = sys.augmented_rhs();
  const std::size_t hc = sys.h_cols();
  const auto rr = gf2::rref_with_transform(a, hc);
  const std::size_t p = rr.pivots.size();
  const auto s = rr.transform * rhs;

  ProjectionDecomposition out;
  out.h11 = gf2::BitMatrix(p, hc);
  out.h12 = gf2::BitMatrix(p, sys.g_cols());
  out.h22 = gf2::BitMatrix(a.rows() - p, sys.g_cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& row = rr.echelon.row(r);
    if (r < p) {
      out.h11.row(r) = row.slice(0, hc);
      out.h12.row(r) = row.slice(hc, sys.g_cols());
    } else {
      out.h22.row(r - p) = row.slice(hc, sys.g_cols());
    }
  }
  out.s1 = s.slice(0, p);
  out.s2 = s.slice(p, a.rows() - p);
  out.transform = rr.transform;
  return out;
}

bool inverse_exists(const HankelSystem& sys) {
  const auto pd = project(sys);
  return gf2::is_consistent(pd.h22, pd.s2);
}

bool common_inverse_check(const HankelSystem& sys) {
  const auto pd = project(sys);
  if (!gf2::is_consistent(pd.h22, pd.s2)) throw std::logic_error("common_inverse_check: no inverse exists");
  return gf2::rank(pd.h22) == gf2::rank(gf2::vstack(pd.h22, sys.vg));
}

CountBounds count_bounds(const HankelSystem& sys) {
  const auto a = sys.augmented();
  if (!gf2::is_consistent(a, sys.augmented_rhs())) throw std::logic_error("count_bounds: no inverse exists");
  CountBounds cb;
  cb.rank = gf2::rank(sys.matrix());
  const std::size_t cols = sys.cols();
  cb.upper = pow2(cols - cb.rank, cb.saturated);
  // Each coordinate contributes one inversion row; for n = 1 this is r + 1.
  const std::size_t extra = cb.rank + sys.n;
  cb.lower = cols > extra ? pow2(cols - extra, cb.saturated) : 1;
  cb.exact = pow2(cols - gf2::rank(a), cb.saturated);
  return cb;
}

FamilyEnumeration enumerate_family(const AssociatedFamily& fam, std::uint64_t limit) {
  if (!fam.particular) throw std::logic_error("enumerate_family: family is empty");
  FamilyEnumeration out;
  const std::size_t k = fam.kernel.size();
  const std::uint64_t total = k >= 64 ? saturated_value : (std::uint64_t{1} << k);
  const std::uint64_t count = std::min(total, limit);
  out.truncated = count < total;
  out.members.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t t = 0; t < count; ++t) {
    gf2::BitVec c = *fam.particular;
    for (std::size_t i = 0; i < k && i < 64; ++i) {
      if ((t >> i) & 1U) c ^= fam.kernel[i];
    }
    FamilyMember member{c, std::nullopt};
    if (has_unique_inverse(*fam.system, c)) member.inverse = inverse_of(*fam.system, c);
    out.members.push_back(std::move(member));
  }
  return out;
}

}  // namespace seqinv
