#include <doctest.h>

#include <algorithm>
#include <random>

#include "crsym/linsolve.hpp"

using namespace crsym;

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace

TEST_CASE("kernel vectors annihilate every inserted row") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    size_t ncols = 5;
    std::vector<std::vector<Rat>> rows;
    LinSys sys(ncols);
    for (int r = 0; r < 4; ++r) {
      std::vector<Rat> row(ncols);
      for (auto& x : row) x = Rat(c(rng), 1 + (trial % 3));
      rows.push_back(row);
      sys.add_row(row);
    }
    auto ker = sys.kernel_basis();
    CHECK(sys.rank() + ker.size() == ncols);
    for (const auto& v : ker)
      for (const auto& row : rows) CHECK(dot(row, v) == 0);
  }
}

TEST_CASE("kernel basis is canonical and order-independent") {
  std::vector<std::vector<Rat>> rows = {
      {Rat(1), Rat(2), Rat(3), Rat(0)},
      {Rat(0), Rat(1), Rat(1), Rat(1)},
      {Rat(2), Rat(5), Rat(7), Rat(1)},  // dependent on the first two
  };
  std::vector<size_t> perm = {0, 1, 2};
  std::vector<std::vector<std::vector<Rat>>> kernels;
  std::sort(perm.begin(), perm.end());
  do {
    LinSys sys(4);
    for (size_t idx : perm) sys.add_row(rows[idx]);
    CHECK(sys.rank() == 2);
    kernels.push_back(sys.kernel_basis());
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (size_t k = 1; k < kernels.size(); ++k) CHECK(kernels[k] == kernels[0]);
  // Primitive integer vectors, first nonzero entry positive.
  for (const auto& v : kernels[0]) {
    bool seen = false;
    for (const auto& x : v) {
      CHECK(rat_den(x) == 1);
      if (!seen && x != 0) {
        CHECK(x > 0);
        seen = true;
      }
    }
    CHECK(seen);
  }
}

TEST_CASE("full-rank system has trivial kernel") {
  LinSys sys(3);
  sys.add_row({Rat(1), Rat(1, 2), Rat(0)});
  sys.add_row({Rat(0), Rat(1), Rat(3)});
  sys.add_row({Rat(0), Rat(0), Rat(7, 5)});
  CHECK(sys.rank() == 3);
  CHECK(sys.kernel_basis().empty());
}

TEST_CASE("solve_linear") {
  // x + y = 3, x - y = 1  ->  x = 2, y = 1.
  auto sol = solve_linear({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}},
                          {Rat(3), Rat(1)}, 2);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);

  // Inconsistent.
  CHECK(!solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)}, 2)
             .has_value());

  // Underdetermined: free variable set to zero.
  auto under = solve_linear({{Rat(2), Rat(0), Rat(4)}}, {Rat(6)}, 3);
  REQUIRE(under.has_value());
  CHECK(dot({Rat(2), Rat(0), Rat(4)}, *under) == 6);

  // Rational pivots.
  auto frac = solve_linear({{Rat(1, 3), Rat(0)}, {Rat(0), Rat(2, 7)}},
                           {Rat(1), Rat(1)}, 2);
  REQUIRE(frac.has_value());
  CHECK((*frac)[0] == 3);
  CHECK((*frac)[1] == Rat(7, 2));
}

TEST_CASE("in_span") {
  std::vector<std::vector<Rat>> basis = {{Rat(1), Rat(0), Rat(1)},
                                         {Rat(0), Rat(1), Rat(1)}};
  CHECK(in_span(basis, {Rat(2), Rat(3), Rat(5)}));
  CHECK(in_span(basis, {Rat(0), Rat(0), Rat(0)}));
  CHECK(!in_span(basis, {Rat(0), Rat(0), Rat(1)}));
  CHECK(!in_span({}, {Rat(1)}));
  CHECK(in_span({}, {Rat(0)}));
}
