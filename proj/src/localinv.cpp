#include "seqinv/localinv.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <random>
#include <stdexcept>

namespace seqinv {

gf2::BitVec BlackBoxMap::operator()(const gf2::BitVec& x) const {
  if (x.size() != n) throw std::invalid_argument("state width differs from map dimension");
  return apply(x);
}

std::uint64_t state_to_uint(const gf2::BitVec& x) { return x.to_uint(); }

gf2::BitVec state_from_uint(std::uint64_t v, std::size_t n) { return gf2::BitVec::from_uint(v, n); }

BlackBoxMap make_fsr_map(const FsrSpec& spec) {
  return BlackBoxMap{spec.order, [spec](const gf2::BitVec& x) { return fsr_step(spec, x); }};
}

BlackBoxMap make_table_map(std::vector<std::uint32_t> table) {
  unsigned n = 0;
  while (n <= max_table_bits && (std::size_t{1} << n) < table.size()) ++n;
  if (n > max_table_bits || (std::size_t{1} << n) != table.size()) {
    throw std::invalid_argument("table size must be 2^n with n <= " + std::to_string(max_table_bits));
  }
  for (auto v : table) {
    if (v >= table.size()) throw std::invalid_argument("table entry out of range");
  }
  auto shared = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
  return BlackBoxMap{n, [shared, n](const gf2::BitVec& x) { return state_from_uint((*shared)[x.to_uint()], n); }};
}

std::vector<std::uint32_t> random_permutation(std::uint64_t seed, unsigned n) {
  if (n < 1 || n > max_table_bits) throw std::invalid_argument("permutation maps need 1 <= n <= 24");
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> table(size);
  for (std::uint32_t i = 0; i < size; ++i) table[i] = i;
  // Fisher-Yates with rejection-sampled draws. std distributions are not
  // reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = size - 1; i > 0; --i) {
    const std::uint64_t bound = std::uint64_t{i} + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(table[i], table[static_cast<std::uint32_t>(r % bound)]);
  }
  return table;
}

BlackBoxMap make_permutation_map(std::uint64_t seed, unsigned n) { return make_table_map(random_permutation(seed, n)); }

BlackBoxMap load_table_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open table file " + path);
  std::vector<std::uint32_t> table;
  unsigned char buf[4];
  while (in.read(reinterpret_cast<char*>(buf), 4)) {
    table.push_back(std::uint32_t{buf[0]} | std::uint32_t{buf[1]} << 8 | std::uint32_t{buf[2]} << 16 |
                    std::uint32_t{buf[3]} << 24);
  }
  if (in.gcount() != 0) throw std::invalid_argument("table file length is not a multiple of 4 bytes");
  return make_table_map(std::move(table));
}

BlackBoxMap parse_map_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("map spec needs a kind prefix");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "fsr") return make_fsr_map(parse_fsr_spec(rest));
  if (kind == "table") return load_table_map(std::string(rest));
  if (kind != "perm") throw ParseError("unknown map kind '" + std::string(kind) + "'");

  std::optional<std::uint64_t> seed;
  std::optional<unsigned> n;
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto sep = rest.find_first_of(";,", pos);
    if (sep == std::string_view::npos) sep = rest.size();
    const auto field = rest.substr(pos, sep - pos);
    pos = sep + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("perm spec field without '='");
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) throw ParseError("bad number in perm spec");
    if (key == "seed") {
      seed = v;
    } else if (key == "n") {
      n = static_cast<unsigned>(v);
    } else {
      throw ParseError("unknown perm spec key '" + std::string(key) + "'");
    }
  }
  if (!seed || !n) throw ParseError("perm spec needs seed and n");
  try {
    return make_permutation_map(*seed, *n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

VectorSequence iterate_map(const BlackBoxMap& f, const gf2::BitVec& y, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("iterate_map needs at least 2 steps");
  std::vector<gf2::BitVec> states;
  states.reserve(steps);
  states.push_back(y);
  while (states.size() < steps) states.push_back(f(states.back()));
  return VectorSequence::from_states(states);
}

LocalInverseResult local_invert(const BlackBoxMap& f, const gf2::BitVec& y, std::size_t steps, unsigned d,
                                bool allow_constant) {
  LocalInverseResult res;
  const auto vs = iterate_map(f, y, steps);
  res.length = vs.length();
  res.pci_used = pci(vs, d, allow_constant);
  if (res.pci_used.status == PciStatus::found) {
    res.candidate = res.pci_used.solution->inverse;
    res.verified = f(*res.candidate) == y;
  }
  return res;
}

}  // namespace seqinv
