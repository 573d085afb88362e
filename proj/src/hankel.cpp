#include "seqinv/hankel.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqinv {

VectorSequence::VectorSequence(std::vector<BitSequence> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("vector sequence needs at least one coordinate");
  for (const auto& c : coords_) {
    if (c.size() != coords_.front().size()) throw std::invalid_argument("coordinate sequences differ in length");
  }
  if (coords_.front().empty()) throw std::invalid_argument("sequence must not be empty");
}

VectorSequence VectorSequence::from_strings(const std::vector<std::string>& lines) {
  std::vector<BitSequence> coords;
  coords.reserve(lines.size());
  for (const auto& l : lines) coords.push_back(gf2::BitVec::from_string(l));
  return VectorSequence(std::move(coords));
}

VectorSequence VectorSequence::from_states(const std::vector<gf2::BitVec>& states) {
  if (states.empty()) throw std::invalid_argument("no states given");
  const std::size_t n = states.front().size();
  std::vector<BitSequence> coords(n, BitSequence(states.size()));
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (states[t].size() != n) throw std::invalid_argument("states differ in width");
    for (std::size_t i = 0; i < n; ++i) {
      if (states[t].get(i)) coords[i].set(t);
    }
  }
  return VectorSequence(std::move(coords));
}

gf2::BitVec VectorSequence::element(std::size_t t) const {
  gf2::BitVec e(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) e.set(i, coords_[i].get(t));
  return e;
}

VectorSequence VectorSequence::prefix(std::size_t len) const {
  if (len == 0 || len > length()) throw std::out_of_range("prefix length out of range");
  std::vector<BitSequence> coords;
  for (const auto& c : coords_) coords.push_back(c.slice(0, len));
  return VectorSequence(std::move(coords));
}

MonomialSet::MonomialSet(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  if (monomials_.empty()) throw std::invalid_argument("monomial set is empty");
  unsigned order = 1;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    order = std::max(order, monomials_[i].order());
    for (std::size_t j = 0; j < i; ++j) {
      if (monomials_[i] == monomials_[j]) throw std::invalid_argument("duplicate monomial " + monomials_[i].to_string());
    }
  }
  order_ = order;
}

MonomialSet MonomialSet::from_basis(const BasisSplit& basis) {
  std::vector<Monomial> all;
  for (const auto& mu : basis.h_basis) all.push_back(mu.with(0));
  all.insert(all.end(), basis.g_basis.begin(), basis.g_basis.end());
  return MonomialSet(std::move(all));
}

gf2::BitMatrix HankelSystem::matrix() const { return gf2::hstack(h1, h2); }

gf2::BitMatrix HankelSystem::augmented() const {
  return gf2::vstack(matrix(), gf2::hstack(vh, gf2::BitMatrix(vh.rows(), g_cols())));
}

gf2::BitVec HankelSystem::augmented_rhs() const { return gf2::BitVec::concat(rhs, gf2::BitVec(n, true)); }

Polynomial HankelSystem::basis_polynomial() const {
  Polynomial p{m, {}};
  for (const auto& mu : h_terms) p.support.push_back(mu.with(0));
  p.support.insert(p.support.end(), g_terms.begin(), g_terms.end());
  return p;
}

std::string HankelSystem::polynomial_text(const gf2::BitVec& coeffs) const {
  return anf_to_string(basis_polynomial(), coeffs);
}

gf2::BitVec window(const BitSequence& s, std::size_t j, std::size_t m) {
  if (j + m > s.size()) throw std::out_of_range("window runs past the end of the sequence");
  return s.slice(j, m);
}

namespace {

HankelSystem assemble(const VectorSequence& vs, unsigned m, std::vector<Monomial> h_terms,
                      std::vector<Monomial> g_terms) {
  const std::size_t M = vs.length();
  if (M <= m) throw std::invalid_argument("sequence length must exceed the order m");
  HankelSystem sys;
  sys.m = m;
  sys.n = vs.dimension();
  sys.M = M;
  sys.h_terms = std::move(h_terms);
  sys.g_terms = std::move(g_terms);

  const std::size_t per = M - m;
  const std::size_t rows = sys.n * per;
  sys.h1 = gf2::BitMatrix(rows, sys.h_cols());
  sys.h2 = gf2::BitMatrix(rows, sys.g_cols());
  sys.rhs = gf2::BitVec(rows);
  sys.vh = gf2::BitMatrix(sys.n, sys.h_cols());
  sys.vg = gf2::BitMatrix(sys.n, sys.g_cols());
  sys.anchor = gf2::BitVec(sys.n);

  for (std::size_t i = 0; i < sys.n; ++i) {
    const auto& s = vs.coord(i);
    for (std::size_t j = 0; j < per; ++j) {
      const std::size_t r = i * per + j;
      if (s.get(j)) {
        for (std::size_t k = 0; k < sys.h_cols(); ++k) {
          if (sys.h_terms[k].eval_at(s, j)) sys.h1.set(r, k);
        }
      }
      for (std::size_t k = 0; k < sys.g_cols(); ++k) {
        if (sys.g_terms[k].eval_at(s, j)) sys.h2.set(r, k);
      }
      if (s.get(m + j)) sys.rhs.set(r);
    }
    // X_k is bound to s_{k-1}: the window that follows the unknown s_{-1}.
    gf2::BitVec w(m);
    for (std::size_t k = 1; k < m; ++k) w.set(k, s.get(k - 1));
    for (std::size_t k = 0; k < sys.h_cols(); ++k) sys.vh.set(i, k, sys.h_terms[k].eval(w));
    for (std::size_t k = 0; k < sys.g_cols(); ++k) sys.vg.set(i, k, sys.g_terms[k].eval(w));
    sys.anchor.set(i, s.get(m - 1));
  }
  return sys;
}

}  // namespace

HankelSystem build_system_vector(const VectorSequence& vs, unsigned m, unsigned d, bool allow_constant) {
  auto basis = enumerate_basis(m, d, allow_constant);
  auto sys = assemble(vs, m, std::move(basis.h_basis), std::move(basis.g_basis));
  sys.d = d;
  sys.allow_constant = allow_constant;
  return sys;
}

HankelSystem build_system(const BitSequence& s, unsigned m, unsigned d, bool allow_constant) {
  return build_system_vector(VectorSequence::from_scalar(s), m, d, allow_constant);
}

HankelSystem build_system_custom(const VectorSequence& vs, const MonomialSet& mset) {
  std::vector<Monomial> h_terms, g_terms;
  bool has_constant = false;
  for (const auto& mono : mset.monomials()) {
    if (mono.contains(0)) {
      h_terms.push_back(mono.without(0));
    } else {
      has_constant = has_constant || mono.is_constant();
      g_terms.push_back(mono);
    }
  }
  auto sys = assemble(vs, mset.order(), std::move(h_terms), std::move(g_terms));
  sys.allow_constant = has_constant;
  return sys;
}

HankelSystem build_system_custom(const BitSequence& s, const MonomialSet& mset) {
  return build_system_custom(VectorSequence::from_scalar(s), mset);
}

MonomialSet parse_monomial_set(std::string_view text) {
  std::vector<Monomial> monos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    // No bound on the index here; the set's order follows from its terms.
    monos.push_back(parse_monomial(text.substr(pos, comma - pos), 64));
    pos = comma + 1;
  }
  return MonomialSet(std::move(monos));
}

}  // namespace seqinv
