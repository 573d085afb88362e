#include "seqinv/golomb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "seqinv/inversion.hpp"

namespace seqinv {

Polynomial FsrSpec::feedback() const {
  auto terms = g.support;
  terms.push_back(Monomial::variable(0));
  return make_polynomial(order, std::move(terms));
}

std::string FsrSpec::to_string() const { return "m=" + std::to_string(order) + "; g=" + anf_to_string(g); }

FsrSpec make_fsr_spec(unsigned order, Polynomial g) {
  if (order < 1) throw std::invalid_argument("FSR order must be at least 1");
  for (const auto& t : g.support) {
    if (t.contains(0)) throw std::invalid_argument("g must not involve x0");
    if (t.order() > order) throw std::invalid_argument("term " + t.to_string() + " exceeds the FSR order");
  }
  g = make_polynomial(order, std::move(g.support));
  return FsrSpec{order, std::move(g)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FsrSpec parse_fsr_spec(std::string_view text) {
  std::optional<unsigned> m;
  std::optional<std::string> g_text;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto sep = text.find_first_of(";,", pos);
    if (sep == std::string_view::npos) sep = text.size();
    const auto field = trim(text.substr(pos, sep - pos));
    pos = sep + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("FSR spec field without '=': " + std::string(field));
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "m") {
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size()) throw ParseError("bad FSR order '" + std::string(value) + "'");
      m = v;
    } else if (key == "g") {
      g_text = std::string(value);
    } else {
      throw ParseError("unknown FSR spec key '" + std::string(key) + "'");
    }
  }
  if (!m || !g_text) throw ParseError("FSR spec needs both m and g");
  auto parsed = parse_anf(*g_text, *m);
  try {
    return make_fsr_spec(*m, std::move(parsed.poly));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

gf2::BitVec fsr_step(const FsrSpec& spec, const gf2::BitVec& state) {
  if (state.size() != spec.order) throw std::invalid_argument("state length differs from FSR order");
  const bool fb = state.get(0) ^ eval_poly(spec.g, state);
  gf2::BitVec next = state.slice(1, spec.order - 1);
  next.push_back(fb);
  return next;
}

BitSequence generate(const FsrSpec& spec, const gf2::BitVec& seed_state, std::size_t length) {
  if (seed_state.size() != spec.order) throw std::invalid_argument("seed length differs from FSR order");
  if (length < spec.order) throw std::invalid_argument("output length shorter than the FSR order");
  BitSequence s = seed_state;
  s.resize(length);
  for (std::size_t j = 0; j + spec.order < length; ++j) {
    bool fb = s.get(j);
    for (const auto& t : spec.g.support) fb ^= t.eval_at(s, j);
    s.set(j + spec.order, fb);
  }
  return s;
}

GolombResult solve_golomb(const VectorSequence& vs, unsigned m, unsigned d, std::uint64_t limit) {
  const auto sys = build_system_vector(vs, m, d, true);
  // s_{m+j} + s_j = g(s_{j+1}, ..., s_{j+m-1})
  gf2::BitVec rhs = sys.rhs;
  const std::size_t per = sys.M - m;
  for (std::size_t i = 0; i < sys.n; ++i) {
    for (std::size_t j = 0; j < per; ++j) {
      if (vs.coord(i).get(j)) rhs.flip(i * per + j);
    }
  }
  GolombResult out;
  out.rank = gf2::rank(sys.h2);
  const auto particular = canonical_coefficients(sys.h2, rhs);
  if (!particular) return out;
  out.consistent = true;
  const auto kernel = gf2::kernel_basis(sys.h2);
  out.kernel_dimension = kernel.size();
  const std::uint64_t total = kernel.size() >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << kernel.size();
  const std::uint64_t count = std::min(total, limit);
  out.truncated = count < total;
  const Polynomial g_basis{m, sys.g_terms};
  for (std::uint64_t t = 0; t < count; ++t) {
    gf2::BitVec b = *particular;
    for (std::size_t k = 0; k < kernel.size() && k < 64; ++k) {
      if ((t >> k) & 1U) b ^= kernel[k];
    }
    GolombSolution sol;
    sol.spec = make_fsr_spec(m, select_terms(g_basis, b));
    sol.inverse = sys.anchor ^ (sys.vg * b);
    out.family.push_back(std::move(sol));
  }
  return out;
}

GolombResult solve_golomb(const BitSequence& s, unsigned m, unsigned d, std::uint64_t limit) {
  return solve_golomb(VectorSequence::from_scalar(s), m, d, limit);
}

bool is_nonsingular_fsr(const Polynomial& f, unsigned m, unsigned cap) {
  if (m < 1) throw std::invalid_argument("FSR order must be at least 1");
  if (m > cap) throw std::invalid_argument("exhaustive non-singularity check is capped at m = " + std::to_string(cap));
  std::vector<std::uint32_t> masks;
  for (const auto& t : f.support) {
    if (t.order() > m) throw std::invalid_argument("feedback term exceeds the FSR order");
    std::uint32_t mask = 0;
    for (auto v : t.vars()) mask |= std::uint32_t{1} << v;
    masks.push_back(mask);
  }
  const std::uint32_t states = std::uint32_t{1} << m;
  std::vector<bool> hit(states, false);
  for (std::uint32_t x = 0; x < states; ++x) {
    std::uint32_t fb = 0;
    for (auto mask : masks) fb ^= (x & mask) == mask;
    const std::uint32_t y = (x >> 1) | (fb << (m - 1));
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool is_nonsingular_fsr(const FsrSpec& spec, unsigned cap) { return is_nonsingular_fsr(spec.feedback(), spec.order, cap); }

}  // namespace seqinv
