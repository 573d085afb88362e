#pragma once

// Monomials and algebraic normal form polynomials over X0..X_{m-1}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqinv/gf2.hpp"

namespace seqinv {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Product of distinct variables X_i. The empty product is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  /// Indices must be strictly ascending.
  explicit Monomial(std::vector<unsigned> vars);
  Monomial(std::initializer_list<unsigned> vars) : Monomial(std::vector<unsigned>(vars)) {}

  static Monomial constant() { return Monomial{}; }
  static Monomial variable(unsigned i) { return Monomial{i}; }

  const std::vector<unsigned>& vars() const noexcept { return vars_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(vars_.size()); }
  bool is_constant() const noexcept { return vars_.empty(); }
  bool contains(unsigned var) const noexcept;
  /// 1 + largest index, 0 for the constant.
  unsigned order() const noexcept { return vars_.empty() ? 0 : vars_.back() + 1; }

  Monomial without(unsigned var) const;
  Monomial with(unsigned var) const;

  /// AND of window[i] over the variables; throws std::out_of_range if an
  /// index is not inside the window.
  bool eval(const gf2::BitVec& window) const;

  /// Evaluates with X_i bound to bits[offset + i].
  bool eval_at(const gf2::BitVec& bits, std::size_t offset) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Total order: degree first, then lexicographic on the index tuple.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<unsigned> vars_;
};

/// Monomials with all indices in [first_var, last_var] and degree in
/// [min_degree, max_degree], in canonical order.
std::vector<Monomial> monomials_between(unsigned first_var, unsigned last_var, unsigned min_degree,
                                        unsigned max_degree);

/// A polynomial given by its support. Coefficient vectors in the API select
/// a subset of `support`, in support order.
struct Polynomial {
  unsigned order = 0;
  std::vector<Monomial> support;

  bool has_constant() const noexcept;
  bool weakly_homogeneous() const noexcept { return !has_constant(); }
  unsigned degree() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Builds a polynomial from terms, cancelling repeated terms in pairs and
/// sorting the rest into canonical order. Throws if a term does not fit
/// `order` variables.
Polynomial make_polynomial(unsigned order, std::vector<Monomial> terms);

/// Terms of `p` whose coefficient is set.
Polynomial select_terms(const Polynomial& p, const gf2::BitVec& coeffs);

bool eval_monomial(const Monomial& mono, const gf2::BitVec& window);
bool eval_poly(const Polynomial& p, const gf2::BitVec& coeffs, const gf2::BitVec& window);
bool eval_poly(const Polynomial& p, const gf2::BitVec& window);

/// The h/g split of P(m, d): f = X0 * h(X1..X_{m-1}) + g(X1..X_{m-1}).
struct BasisSplit {
  unsigned order = 0;
  unsigned degree = 0;
  bool allow_constant = false;
  std::vector<Monomial> h_basis;  // degree <= d - 1, constant included
  std::vector<Monomial> g_basis;  // degree in [1, d], plus constant if allowed

  std::size_t size() const noexcept { return h_basis.size() + g_basis.size(); }
};

BasisSplit enumerate_basis(unsigned m, unsigned d, bool allow_constant);

/// sum_{j=1..d} C(m, j), saturating at UINT64_MAX.
std::uint64_t term_count(unsigned m, unsigned d);
std::uint64_t binomial(unsigned n, unsigned k);

std::string anf_to_string(const Polynomial& p, const gf2::BitVec& coeffs);
std::string anf_to_string(const Polynomial& p);

struct ParsedAnf {
  Polynomial poly;
  gf2::BitVec coeffs;  // all ones over poly.support
};

/// Grammar: poly := term ("+" term)*, term := "1" | var ("*" var)*,
/// var := "x" decimal. "0" denotes the zero polynomial. Whitespace is
/// ignored. Throws ParseError on malformed input or an index >= m.
ParsedAnf parse_anf(std::string_view text, unsigned m);

/// Parses a single monomial term such as "x0*x2" or "1".
Monomial parse_monomial(std::string_view text, unsigned m);

}  // namespace seqinv
