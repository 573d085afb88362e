#include "seqinv/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace seqinv {

Monomial::Monomial(std::vector<unsigned> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 1; i < vars_.size(); ++i) {
    if (vars_[i - 1] >= vars_[i]) throw std::invalid_argument("monomial indices must be strictly ascending");
  }
}

bool Monomial::contains(unsigned var) const noexcept {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

Monomial Monomial::without(unsigned var) const {
  std::vector<unsigned> v;
  v.reserve(vars_.size());
  for (auto x : vars_) {
    if (x != var) v.push_back(x);
  }
  return Monomial(std::move(v));
}

Monomial Monomial::with(unsigned var) const {
  if (contains(var)) return *this;
  std::vector<unsigned> v = vars_;
  v.insert(std::upper_bound(v.begin(), v.end(), var), var);
  return Monomial(std::move(v));
}

bool Monomial::eval(const gf2::BitVec& window) const {
  if (!vars_.empty() && vars_.back() >= window.size()) {
    throw std::out_of_range("monomial variable index outside the window");
  }
  return eval_at(window, 0);
}

bool Monomial::eval_at(const gf2::BitVec& bits, std::size_t offset) const {
  for (auto v : vars_) {
    if (!bits.get(offset + v)) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += '*';
    s += 'x';
    s += std::to_string(vars_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0) return c;
  return a.vars_ <=> b.vars_;
}

std::vector<Monomial> monomials_between(unsigned first_var, unsigned last_var, unsigned min_degree,
                                        unsigned max_degree) {
  std::vector<Monomial> out;
  const unsigned width = last_var >= first_var ? last_var - first_var + 1 : 0;
  for (unsigned k = min_degree; k <= max_degree && k <= width; ++k) {
    if (k == 0) {
      out.emplace_back();
      continue;
    }
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = first_var + i;
    while (true) {
      out.emplace_back(idx);
      // Advance to the next k-combination in lexicographic order.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && idx[i] == last_var - (k - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

bool Polynomial::has_constant() const noexcept {
  return std::any_of(support.begin(), support.end(), [](const Monomial& t) { return t.is_constant(); });
}

unsigned Polynomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : support) d = std::max(d, t.degree());
  return d;
}

Polynomial make_polynomial(unsigned order, std::vector<Monomial> terms) {
  for (const auto& t : terms) {
    if (t.order() > order) throw std::invalid_argument("term " + t.to_string() + " does not fit the polynomial order");
  }
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> support;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) support.push_back(terms[i]);
    i = j;
  }
  return Polynomial{order, std::move(support)};
}

Polynomial select_terms(const Polynomial& p, const gf2::BitVec& coeffs) {
  if (coeffs.size() != p.support.size()) throw std::invalid_argument("coefficient vector length differs from support size");
  Polynomial out{p.order, {}};
  for (std::size_t k = 0; k < p.support.size(); ++k) {
    if (coeffs.get(k)) out.support.push_back(p.support[k]);
  }
  return out;
}

bool eval_monomial(const Monomial& mono, const gf2::BitVec& window) { return mono.eval(window); }

bool eval_poly(const Polynomial& p, const gf2::BitVec& coeffs, const gf2::BitVec& window) {
  if (coeffs.size() != p.support.size()) throw std::invalid_argument("coefficient vector length differs from support size");
  if (window.size() != p.order) throw std::invalid_argument("window length differs from polynomial order");
  bool acc = false;
  for (std::size_t k = 0; k < p.support.size(); ++k) {
    if (coeffs.get(k)) acc ^= p.support[k].eval(window);
  }
  return acc;
}

bool eval_poly(const Polynomial& p, const gf2::BitVec& window) {
  return eval_poly(p, gf2::BitVec(p.support.size(), true), window);
}

BasisSplit enumerate_basis(unsigned m, unsigned d, bool allow_constant) {
  if (d < 1 || d > m) throw std::invalid_argument("enumerate_basis requires 1 <= d <= m");
  BasisSplit split{m, d, allow_constant, {}, {}};
  // Variables X1..X_{m-1}; an empty range when m == 1.
  split.h_basis = monomials_between(1, m - 1, 0, d - 1);
  split.g_basis = monomials_between(1, m - 1, allow_constant ? 0 : 1, d);
  return split;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // c * (n - k + i) / i is exact at every step.
    const std::uint64_t num = n - k + i;
    if (c > max / num) return max;
    c = c * num / i;
  }
  return c;
}

std::uint64_t term_count(unsigned m, unsigned d) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (unsigned j = 1; j <= d && j <= m; ++j) {
    const auto c = binomial(m, j);
    if (c == max || total > max - c) return max;
    total += c;
  }
  return total;
}

std::string anf_to_string(const Polynomial& p, const gf2::BitVec& coeffs) {
  const auto terms = select_terms(p, coeffs);
  std::vector<Monomial> sorted = terms.support;
  // Highest degree first, lexicographic within a degree: "x0*x2 + x1*x2 + x0 + 1".
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.vars() < b.vars();
  });
  if (sorted.empty()) return "0";
  std::string s;
  for (const auto& t : sorted) {
    if (!s.empty()) s += " + ";
    s += t.to_string();
  }
  return s;
}

std::string anf_to_string(const Polynomial& p) { return anf_to_string(p, gf2::BitVec(p.support.size(), true)); }

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Monomial parse_term(std::string_view term, unsigned m) {
  if (term.empty()) throw ParseError("empty term in ANF expression");
  if (term == "1") return Monomial{};
  std::vector<unsigned> vars;
  std::size_t pos = 0;
  while (true) {
    const auto star = term.find('*', pos);
    const auto factor = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X')) {
      throw ParseError("malformed factor '" + std::string(factor) + "'");
    }
    unsigned idx = 0;
    const auto digits = factor.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed variable index in '" + std::string(factor) + "'");
    }
    if (idx >= m) throw ParseError("variable x" + std::to_string(idx) + " out of range for order " + std::to_string(m));
    vars.push_back(idx);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  // x*x == x over GF(2).
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return Monomial(std::move(vars));
}

}  // namespace

Monomial parse_monomial(std::string_view text, unsigned m) { return parse_term(strip_spaces(text), m); }

ParsedAnf parse_anf(std::string_view text, unsigned m) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) throw ParseError("empty ANF expression");
  std::vector<Monomial> terms;
  if (compact != "0") {
    std::size_t pos = 0;
    while (true) {
      const auto plus = compact.find('+', pos);
      const auto term = std::string_view(compact).substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
      terms.push_back(parse_term(term, m));
      if (plus == std::string::npos) break;
      pos = plus + 1;
    }
  }
  auto poly = make_polynomial(m, std::move(terms));
  gf2::BitVec coeffs(poly.support.size(), true);
  return ParsedAnf{std::move(poly), std::move(coeffs)};
}

}  // namespace seqinv
