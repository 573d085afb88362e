#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "seqinv/inversion.hpp"
#include "seqinv/golomb.hpp"

using namespace seqinv;
using gf2::BitVec;

namespace {

FsrSpec spec_of(const std::string& text) { return parse_fsr_spec(text); }

// Random g over X1..X_{m-1} with degree <= d, possibly with a constant.
Polynomial random_g(std::mt19937_64& rng, unsigned m, unsigned d) {
  std::vector<Monomial> terms;
  for (const auto& t : monomials_between(1, m - 1, 0, d)) {
    if (rng() % 3 == 0) terms.push_back(t);
  }
  return make_polynomial(m, terms);
}

oracle::Poly vars_of(const Polynomial& p) {
  oracle::Poly out;
  for (const auto& t : p.support) out.push_back(t.vars());
  return out;
}

}  // namespace

TEST_CASE("specs") {
  auto s = spec_of("m=3; g=x1 + x2 + x1*x2");
  CHECK(s.order == 3);
  CHECK(s.to_string() == "m=3; g=x1*x2 + x1 + x2");
  CHECK(anf_to_string(s.feedback()) == "x1*x2 + x0 + x1 + x2");
  CHECK(spec_of("m=2,g=0").g.support.empty());
  CHECK_THROWS(spec_of("m=3; g=x0 + x1"));
  CHECK_THROWS(spec_of("m=3; g=x3"));
  CHECK_THROWS(spec_of("g=x1"));
  CHECK_THROWS(spec_of("m=; g=x1"));
}

TEST_CASE("fsr steps and generation") {
  auto s = spec_of("m=3; g=x1 + x2 + x1*x2");
  CHECK(fsr_step(s, BitVec::from_string("100")).to_string() == "001");
  CHECK(fsr_step(spec_of("m=3; g=0"), BitVec::from_string("101")).to_string() == "011");
  CHECK(generate(s, BitVec::from_string("100"), 8).to_string() == "10011100");
  CHECK(generate(spec_of("m=2; g=0"), BitVec::from_string("01"), 6).to_string() == "010101");
  CHECK_THROWS(fsr_step(s, BitVec::from_string("10")));
  CHECK_THROWS(generate(s, BitVec::from_string("100"), 2));

  std::mt19937_64 rng(50);
  for (int t = 0; t < 200; ++t) {
    const unsigned m = 2 + rng() % 6;
    auto spec = make_fsr_spec(m, random_g(rng, m, 1 + rng() % (m - 1)));
    auto seed = oracle::random_bitvec(rng, m);
    auto out = generate(spec, seed, 50);
    CHECK(oracle::bits_of(out) == oracle::fsr_run(vars_of(spec.g), oracle::bits_of(seed), 50));
    // The state returns to the seed: the map is a permutation.
    auto state = fsr_step(spec, seed);
    std::size_t k = 1;
    while (!(state == seed) && k <= (1U << m)) {
      state = fsr_step(spec, state);
      ++k;
    }
    CHECK(k <= (1U << m));
  }
}

TEST_CASE("golomb example") {
  auto r = solve_golomb(BitVec::from_string("10011100"), 3, 2);
  REQUIRE(r.consistent);
  const auto target = spec_of("m=3; g=x1 + x2 + x1*x2");
  bool found = false;
  for (const auto& sol : r.family) {
    if (sol.spec.g == target.g) {
      found = true;
      CHECK(sol.inverse.to_string() == "1");
    }
    CHECK(is_nonsingular_fsr(sol.spec));
  }
  CHECK(found);
  CHECK(r.family.size() == (std::size_t{1} << r.kernel_dimension));

  // A constant sequence with a lone flip has no Golomb recurrence of order 1.
  CHECK_FALSE(solve_golomb(BitVec::from_string("0001"), 1, 1).consistent);
}

TEST_CASE("nonsingularity") {
  auto x1 = parse_anf("x1", 2);
  CHECK_FALSE(is_nonsingular_fsr(x1.poly, 2));
  CHECK(is_nonsingular_fsr(parse_anf("x0 + x1*x2", 3).poly, 3));
  CHECK_THROWS_AS(is_nonsingular_fsr(parse_anf("x0", 21).poly, 21), std::invalid_argument);

  std::mt19937_64 rng(51);
  for (unsigned m = 1; m <= 12; ++m) {
    for (int t = 0; t < 3; ++t) {
      CHECK(is_nonsingular_fsr(make_fsr_spec(m, m == 1 ? make_polynomial(1, {}) : random_g(rng, m, std::min(m - 1, 3U)))));
    }
  }
  // Random f over 8 variables against image counting.
  const auto all = monomials_between(0, 7, 0, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Monomial> terms;
    for (const auto& mm : all) {
      if (rng() % 4 == 0) terms.push_back(mm);
    }
    if (t % 2 == 0) terms.push_back(Monomial{0});
    auto f = make_polynomial(8, terms);
    const auto fv = vars_of(f);
    std::set<unsigned> image;
    for (unsigned x = 0; x < 256; ++x) {
      oracle::Bits w(8);
      for (unsigned i = 0; i < 8; ++i) w[i] = x >> i & 1U;
      unsigned y = 0;
      for (unsigned i = 1; i < 8; ++i) y |= unsigned(w[i]) << (i - 1);
      y |= unsigned(oracle::eval(fv, w)) << 7;
      image.insert(y);
    }
    CHECK(is_nonsingular_fsr(f, 8) == (image.size() == 256));
  }
}

TEST_CASE("generate then solve recovers the register") {
  std::mt19937_64 rng(52);
  int recovered = 0;
  for (int t = 0; t < 150; ++t) {
    const unsigned m = 2 + rng() % 5, d = 1 + rng() % (m - 1);
    auto spec = make_fsr_spec(m, random_g(rng, m, d));
    const std::size_t cols = enumerate_basis(m, d, true).g_basis.size();
    auto s = generate(spec, oracle::random_bitvec(rng, m), std::max<std::size_t>(4 * cols, m + 2));
    auto r = solve_golomb(s, m, d, 1U << 16);
    REQUIRE(r.consistent);
    const auto bits = oracle::bits_of(s);
    bool has_target = false;
    for (const auto& sol : r.family) {
      has_target = has_target || sol.spec.g == spec.g;
      // Running one step from (s_{-1}, s_0..s_{m-2}) reproduces s_{m-1}.
      BitVec state(m);
      state.set(0, sol.inverse.get(0));
      for (unsigned i = 1; i < m; ++i) state.set(i, s.get(i - 1));
      CHECK(fsr_step(sol.spec, state) == s.slice(0, m));
      CHECK(oracle::bits_of(generate(sol.spec, s.slice(0, m), s.size())) == bits);
    }
    if (!r.truncated) CHECK(has_target);
    recovered += has_target;

    // The generating order always admits an invertible associated polynomial.
    CHECK(inverse_exists(build_system(s, m, d, true)));
  }
  CHECK(recovered > 100);
}

TEST_CASE("vector golomb solving") {
  auto vs = VectorSequence::from_strings({"0111000", "1110001"});
  auto r = solve_golomb(vs, 3, 1);
  REQUIRE(r.consistent);
  bool saw = false;
  for (const auto& sol : r.family) {
    if (anf_to_string(sol.spec.g) == "1") {
      saw = true;
      CHECK(sol.inverse.to_string() == "00");
    }
  }
  CHECK(saw);
}
