#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seqinv/gf2.hpp"

using namespace seqinv::gf2;

TEST_CASE("bitvec basics") {
  auto v = BitVec::from_string("1011");
  CHECK(v.size() == 4);
  CHECK(v.get(0));
  CHECK_FALSE(v.get(1));
  CHECK(v.to_string() == "1011");
  CHECK(v.count() == 3);
  CHECK(v.find_next(1) == 2);
  CHECK(BitVec::from_uint(0b1101, 4).to_string() == "1011");
  CHECK(BitVec::from_uint(0b1101, 4).to_uint() == 0b1101);
  CHECK_THROWS_AS(BitVec::from_string("10a"), std::invalid_argument);
  CHECK_THROWS(v.get(4));

  BitVec ones(70, true);
  CHECK(ones.count() == 70);
  CHECK(ones.words()[1] == (BitVec::word_type{1} << 6) - 1);
  ones.resize(65);
  CHECK(ones.count() == 65);
  ones.resize(130);
  CHECK(ones.count() == 65);
  CHECK(BitVec::concat(BitVec::from_string("10"), BitVec::from_string("011")).to_string() == "10011");
  CHECK(BitVec::from_string("110101").slice(2, 3).to_string() == "010");
  CHECK(BitVec::from_string("11").dot(BitVec::from_string("11")) == false);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(BitMatrix::identity(3)) == 3);
  CHECK(rank(BitMatrix::from_strings({"11", "11"})) == 1);
  CHECK(rank(BitMatrix(4, 6)) == 0);
  CHECK(rank(BitMatrix(0, 0)) == 0);
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 140;
    auto a = oracle::random_matrix(rng, r, c);
    // Force some dependent rows.
    if (r > 2) a.row(r - 1) = a.row(0) ^ a.row(1);
    CHECK(rank(a) == oracle::dense_rank(oracle::dense(a)));
    CHECK(rank(unique_rows(a)) == rank(a));
  }
}

TEST_CASE("rref with transform") {
  auto id = rref_with_transform(BitMatrix::identity(3));
  CHECK(id.echelon == BitMatrix::identity(3));
  CHECK(id.transform == BitMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto ones = rref_with_transform(BitMatrix::from_strings({"11", "11"}));
  CHECK(ones.echelon == BitMatrix::from_strings({"11", "00"}));
  CHECK(ones.pivots == std::vector<std::size_t>{0});

  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 80;
    auto a = oracle::random_matrix(rng, rows, cols);
    auto rr = rref_with_transform(a);
    CHECK(rr.transform * a == rr.echelon);
    CHECK(rank(rr.transform) == rows);
    CHECK(rr.pivots.size() == rank(a));
    CHECK(std::is_sorted(rr.pivots.begin(), rr.pivots.end()));
    // Reduced: each pivot column is a unit vector.
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      for (std::size_t r = 0; r < rows; ++r) CHECK(rr.echelon.get(r, rr.pivots[i]) == (r == i));
      CHECK(rr.echelon.row(i).find_next(0) == rr.pivots[i]);
    }
  }
}

TEST_CASE("rref restricted to leading pivot columns") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 2 + rng() % 10, cols = 2 + rng() % 20, lead = rng() % cols;
    auto a = oracle::random_matrix(rng, rows, cols);
    auto rr = rref_with_transform(a, lead);
    CHECK(rr.transform * a == rr.echelon);
    CHECK(rank(rr.transform) == rows);
    for (auto p : rr.pivots) CHECK(p < lead);
    for (std::size_t r = rr.pivots.size(); r < rows; ++r) {
      for (std::size_t c = 0; c < lead; ++c) CHECK_FALSE(rr.echelon.get(r, c));
    }
  }
}

TEST_CASE("solve") {
  CHECK(solve(BitMatrix::identity(3), BitVec::from_string("101")) == BitVec::from_string("101"));
  CHECK(solve(BitMatrix::from_strings({"11"}), BitVec::from_string("1")) == BitVec::from_string("10"));
  CHECK_FALSE(solve(BitMatrix(2, 2), BitVec::from_string("10")).has_value());
  CHECK_THROWS_AS(solve(BitMatrix(2, 2), BitVec(3)), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 15, cols = 1 + rng() % 90;
    auto a = oracle::random_matrix(rng, rows, cols);
    auto x0 = oracle::random_bitvec(rng, cols);
    auto rhs = a * x0;
    auto x = solve(a, rhs);
    REQUIRE(x.has_value());
    CHECK(a * *x == rhs);
    // Free variables are zero: support only on pivot columns.
    auto pivots = rref_with_transform(a).pivots;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) CHECK_FALSE(x->get(c));
    }
    // Consistency matches the rank test.
    auto b = oracle::random_bitvec(rng, rows);
    std::vector<oracle::Bits> d = oracle::dense(a);
    for (std::size_t r = 0; r < rows; ++r) d[r].push_back(b.get(r));
    CHECK(is_consistent(a, b) == (oracle::dense_rank(d) == rank(a)));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(BitMatrix::identity(3)).empty());
  auto z = kernel_basis(BitMatrix(1, 2));
  REQUIRE(z.size() == 2);
  CHECK(rank(BitMatrix::from_rows(z, 2)) == 2);
  auto p = kernel_basis(BitMatrix::from_strings({"11"}));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == BitVec::from_string("11"));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 70;
    auto a = oracle::random_matrix(rng, rows, cols);
    auto k = kernel_basis(a);
    CHECK(k.size() + rank(a) == cols);
    for (const auto& v : k) CHECK((a * v).none());
    if (!k.empty()) CHECK(rank(BitMatrix::from_rows(k, cols)) == k.size());
  }
}

TEST_CASE("matrix helpers") {
  auto a = BitMatrix::from_strings({"101", "011"});
  CHECK(a.transpose() == BitMatrix::from_strings({"10", "01", "11"}));
  CHECK(a.column(2).to_string() == "11");
  CHECK(hstack(a, BitMatrix::from_strings({"1", "0"})) == BitMatrix::from_strings({"1011", "0110"}));
  CHECK(vstack(a, BitMatrix::from_strings({"111"})).rows() == 3);
  CHECK_THROWS(hstack(a, BitMatrix(3, 1)));
  CHECK_THROWS(vstack(a, BitMatrix(1, 2)));
  const std::vector<std::size_t> cols{2, 0};
  CHECK(a.select_columns(cols) == BitMatrix::from_strings({"11", "10"}));
  CHECK(a * BitVec::from_string("111") == BitVec::from_string("00"));
  CHECK(unique_rows(BitMatrix::from_strings({"10", "01", "10"})).rows() == 2);
}

TEST_CASE("slices match bitwise extraction") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 500; ++t) {
    auto v = oracle::random_bitvec(rng, 1 + rng() % 300);
    const std::size_t begin = rng() % v.size(), len = rng() % (v.size() - begin + 1);
    auto s = v.slice(begin, len);
    REQUIRE(s.size() == len);
    for (std::size_t i = 0; i < len; ++i) CHECK(s.get(i) == v.get(begin + i));
    BitVec copy(len);
    for (std::size_t i = 0; i < len; ++i) copy.set(i, v.get(begin + i));
    CHECK(s == copy);
  }
}
