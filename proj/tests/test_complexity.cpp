#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqinv/complexity.hpp"
#include "seqinv/golomb.hpp"

using namespace seqinv;
using gf2::BitVec;

namespace {

BitVec repeat(const std::string& period, std::size_t length) {
  std::string s;
  while (s.size() < length) s += period;
  return BitVec::from_string(s.substr(0, length));
}

}  // namespace

TEST_CASE("berlekamp-massey small cases") {
  CHECK(berlekamp_massey(BitVec::from_string("0001")) == 4);
  CHECK(berlekamp_massey(repeat("110", 24)) == 2);
  CHECK(berlekamp_massey(BitVec(16)) == 0);
  CHECK(berlekamp_massey(BitVec::from_string("1")) == 1);
  CHECK(berlekamp_massey(BitVec(0)) == 0);
}

TEST_CASE("berlekamp-massey agrees with the textbook version") {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 500; ++t) {
    auto s = oracle::random_bitvec(rng, 1 + rng() % 150);
    CHECK(berlekamp_massey(s) == oracle::linear_complexity(oracle::bits_of(s)));
  }
}

TEST_CASE("lc inverse") {
  auto r = lc_inverse(repeat("110", 24));
  REQUIRE(r);
  CHECK(r->m == 2);
  CHECK(r->polynomial == "x0 + x1");
  CHECK(r->inverse == false);

  auto z = lc_inverse(BitVec(16));
  REQUIRE(z);
  CHECK(z->m == 1);
  CHECK(z->inverse == false);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = 1 + rng() % 32;
    auto period = oracle::random_bitvec(rng, p);
    std::string ps = period.to_string();
    auto s = repeat(ps, 2 * p);
    auto res = lc_inverse(s);
    if (!res) continue;
    CHECK(res->inverse == s.get(p - 1));
    CHECK(res->m == std::max<std::size_t>(1, berlekamp_massey(s)));
  }
}

TEST_CASE("moc examples") {
  CHECK(moc(BitVec::from_string("0111000")).value == 3);
  CHECK(moc(BitVec::from_string("010101")).value == 1);
  CHECK(moc(BitVec(10)).value == 1);
  auto deg = moc(BitVec::from_string("01"));
  CHECK(deg.value == 1);
  CHECK(deg.degenerate);
  CHECK(moc(BitVec::from_string("00000001")).degenerate);
  CHECK_THROWS(moc(BitVec::from_string("1")));
}

TEST_CASE("moc agrees with pairwise window comparison") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 400; ++t) {
    auto s = oracle::random_bitvec(rng, 2 + rng() % 120);
    auto r = moc(s);
    CHECK(r.value == oracle::moc_direct(oracle::bits_of(s)));
    CHECK(r.degenerate == (r.value == s.size() - 1));
    // Extending the sequence never lowers the measure.
    if (s.size() > 3) CHECK(moc(s.slice(0, s.size() - 1)).value <= r.value);
  }
}

TEST_CASE("vector moc uses joint windows") {
  auto vs = VectorSequence::from_strings({"0111000", "0111000"});
  CHECK(moc(vs).value == 3);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t M = 4 + rng() % 40;
    auto a = oracle::random_bitvec(rng, M), b = oracle::random_bitvec(rng, M);
    auto joint = moc(VectorSequence({a, b})).value;
    CHECK(joint <= std::max(moc(a).value, moc(b).value));
  }
}

TEST_CASE("pci examples") {
  auto r = pci(repeat("011", 24), 1);
  REQUIRE(r.status == PciStatus::found);
  CHECK(*r.m == 2);
  REQUIRE(r.solution);
  CHECK(r.solution->inverse.to_string() == "1");

  auto z = pci(BitVec(16), 1);
  REQUIRE(z.status == PciStatus::found);
  CHECK(*z.m == 1);
  CHECK(z.solution->inverse.to_string() == "0");

  auto none = pci(BitVec::from_string("011"), 3);
  CHECK(none.status == PciStatus::no_feasible_m);
  CHECK_FALSE(none.feasible_range);
  CHECK(to_string(PciStatus::found) == "found");
}

TEST_CASE("pci order bounded by lc and moc") {
  std::mt19937_64 rng(44);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    const unsigned m = 3 + rng() % 3;
    oracle::Poly g;
    for (unsigned a = 1; a < m; ++a) {
      if (rng() & 1U) g.push_back({a});
      for (unsigned b = a + 1; b < m; ++b) {
        if (rng() % 3 == 0) g.push_back({a, b});
      }
    }
    oracle::Bits seed(m);
    for (auto& x : seed) x = rng() & 1U;
    const auto bits = oracle::fsr_run(g, seed, 64);
    const auto s = oracle::to_bitvec(bits);
    auto r = pci(s, 2);
    if (r.status != PciStatus::found) continue;
    ++found;
    CHECK(moc(s).value <= *r.m);
    // Orders below d are outside the search, so the LC bound needs LC >= d.
    if (berlekamp_massey(s) >= 2) CHECK(*r.m <= berlekamp_massey(s));
    // The reported inverse satisfies the chosen polynomial.
    const auto& sys = *r.solution->family.system;
    CHECK(sys.augmented() * r.solution->coeffs == sys.augmented_rhs());
    // Feasibility of the chosen order.
    CHECK(r.feasible_range->first <= *r.m);
    CHECK(*r.m <= r.feasible_range->second);
    CHECK(s.size() - *r.m >= r.n_c);
  }
  CHECK(found > 100);
}

TEST_CASE("rank profile matches dense elimination") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 60; ++t) {
    // Short periods make the early stop kick in.
    const std::size_t period = 3 + rng() % 30;
    auto base = oracle::random_bitvec(rng, period);
    BitVec s(40 + rng() % 40);
    for (std::size_t i = 0; i < s.size(); ++i) s.set(i, base.get(i % period));
    const unsigned d = 1 + rng() % 2;
    auto r = pci(s, d, t % 2 == 0);
    REQUIRE(r.feasible_range);
    CHECK(r.rank_profile.size() == r.feasible_range->second - r.feasible_range->first + 1);
    std::size_t best = 0;
    for (const auto& e : r.rank_profile) {
      auto sys = build_system(s, e.m, d, r.allow_constant);
      const auto dense = oracle::dense_rank(oracle::dense(sys.matrix()));
      if (e.exact) {
        CHECK(e.rank == dense);
      } else {
        CHECK(dense <= e.rank);
        CHECK(e.rank <= r.max_rank);
      }
      best = std::max(best, dense);
    }
    CHECK(best == r.max_rank);
    // Same answer as scanning every order.
    std::optional<unsigned> want;
    for (const auto& e : r.rank_profile) {
      auto sys = build_system(s, e.m, d, r.allow_constant);
      if (oracle::dense_rank(oracle::dense(sys.matrix())) != best) continue;
      if (!gf2::is_consistent(sys.augmented(), sys.augmented_rhs())) continue;
      want = e.m;
      break;
    }
    CHECK(r.m == want);
  }
}

TEST_CASE("monomial-set complexity") {
  auto s = BitVec::from_string("0111000");
  auto full = complexity_relative(s, MonomialSet::from_basis(enumerate_basis(3, 2, false)));
  auto sys = build_system(s, 3, 2, false);
  REQUIRE(full.defined);
  CHECK(full.order == 3);
  CHECK(full.rank == oracle::dense_rank(oracle::dense(sys.matrix())));
  CHECK(full.value == doctest::Approx(std::sqrt(3.0 * full.rank)));

  auto zero = complexity_relative(BitVec(8), MonomialSet({Monomial{0}}));
  CHECK(zero.defined);
  CHECK(zero.rank == 0);
  CHECK(zero.value == 0.0);

  // x_{j+1} = x_j fails on 01: inconsistent.
  auto bad = complexity_relative(BitVec::from_string("0101"), MonomialSet({Monomial{0}}));
  CHECK_FALSE(bad.defined);
}
