#include "doctest.h"

#include <stdexcept>

#include <random>
#include <vector>

#include "spectile/intpoly.hpp"
#include "spectile/tileset.hpp"

using spectile::IntPoly;
using spectile::TileSet;

namespace {

IntPoly from_coeffs(std::vector<long long> cs) {
  IntPoly p;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (cs[k] != 0) p = p + IntPoly::monomial(k, mpz_class(static_cast<long>(cs[k])));
  return p;
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> coeff_dist(-max_abs, max_abs);
  const int d = deg_dist(rng);
  std::vector<long long> cs(static_cast<std::size_t>(d) + 1);
  for (auto& c : cs) c = coeff_dist(rng);
  return from_coeffs(std::move(cs));
}

}  // namespace

TEST_CASE("zero polynomial conventions") {
  IntPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0) == 0);
  CHECK(z.coeff(17) == 0);
  CHECK_FALSE(z.is_monic());
  CHECK(z == IntPoly::constant(0));
  CHECK(z.eval(5) == 0);
}

TEST_CASE("constructors and accessors") {
  const auto p = IntPoly::monomial(3, -2) + IntPoly::one();
  CHECK(p.degree() == 3);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(3) == -2);
  CHECK(p.coeff(9) == 0);
  CHECK_FALSE(p.is_monic());
  CHECK(IntPoly::xn_minus_one(4).is_monic());
  CHECK(IntPoly::all_ones(3) == from_coeffs({1, 1, 1}));
  CHECK(IntPoly::all_ones(1) == IntPoly::one());
}

TEST_CASE("mask polynomial of a tile set") {
  const auto m = spectile::mask_poly(TileSet({0, 1, 6, 7}));
  CHECK(m.degree() == 7);
  CHECK(m == from_coeffs({1, 1, 0, 0, 0, 0, 1, 1}));
  CHECK(m.eval(1) == 4);  // value at 1 counts the elements
  CHECK(spectile::mask_poly(TileSet({0})) == IntPoly::one());
}

TEST_CASE("arithmetic basics") {
  const auto a = from_coeffs({1, 2});        // 1 + 2x
  const auto b = from_coeffs({3, 0, 1});     // 3 + x^2
  CHECK(a + b == from_coeffs({4, 2, 1}));
  CHECK(a - a == IntPoly());
  CHECK(a * b == from_coeffs({3, 6, 1, 2}));
  CHECK(a * IntPoly() == IntPoly());
  CHECK(IntPoly::xn_minus_one(2) == from_coeffs({-1, 0, 1}));
}

TEST_CASE("evaluation uses exact big integers") {
  // (x+1)^5 at x = 10^6 stays exact
  auto p = IntPoly::one();
  const auto xp1 = from_coeffs({1, 1});
  for (int i = 0; i < 5; ++i) p = p * xp1;
  mpz_class x = 1000000;
  mpz_class expect = x + 1;
  mpz_class acc = 1;
  for (int i = 0; i < 5; ++i) acc *= expect;
  CHECK(p.eval(x) == acc);
}

TEST_CASE("division with remainder: frozen examples") {
  // (1 + x + x^3) / (1 + x + x^2) = (x - 1) remainder (x + 2)
  const auto num = from_coeffs({1, 1, 0, 1});
  const auto den = from_coeffs({1, 1, 1});
  const auto dr = spectile::poly_divrem(num, den);
  CHECK(dr.quotient == from_coeffs({-1, 1}));
  CHECK(dr.remainder == from_coeffs({2, 1}));

  // mask of {0,1,6,7} divides exactly by x^2 + 1
  const auto mask = spectile::mask_poly(TileSet({0, 1, 6, 7}));
  const auto dr2 = spectile::poly_divrem(mask, from_coeffs({1, 0, 1}));
  CHECK(dr2.remainder.is_zero());
  CHECK(dr2.quotient == from_coeffs({1, 1, -1, -1, 1, 1}));
}

TEST_CASE("division recombines: quotient*divisor + remainder") {
  std::mt19937 rng(7011u);
  for (int trial = 0; trial < 200; ++trial) {
    const auto num = random_poly(rng, 12, 9);
    auto den = random_poly(rng, 6, 9);
    // force a monic divisor of degree >= 1
    den = den + IntPoly::monomial(den.degree() < 1 ? 1 : den.degree() + 1, 1);
    const auto dr = spectile::poly_divrem(num, den);
    CHECK(dr.quotient * den + dr.remainder == num);
    CHECK(dr.remainder.degree() < den.degree());
  }
}

TEST_CASE("division rejects bad divisors") {
  CHECK_THROWS_AS((void)spectile::poly_divrem(IntPoly::one(), IntPoly()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)spectile::poly_divrem(IntPoly::one(), from_coeffs({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("cyclic reduction folds exponents") {
  CHECK(spectile::poly_mod_cyclic(IntPoly::monomial(7), 4) == IntPoly::monomial(3));
  CHECK(spectile::poly_mod_cyclic(IntPoly::monomial(8), 4) == IntPoly::one());
  const auto mask = spectile::mask_poly(TileSet({0, 1, 6, 7}));
  CHECK(spectile::poly_mod_cyclic(mask, 4) == spectile::IntPoly::all_ones(4));
  CHECK_THROWS_AS((void)spectile::poly_mod_cyclic(mask, 0), std::invalid_argument);
}

TEST_CASE("cyclic reduction is a ring homomorphism") {
  std::mt19937 rng(7012u);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 15, 5);
    const auto q = random_poly(rng, 15, 5);
    for (long long m : {1LL, 3LL, 8LL}) {
      const auto lhs = spectile::poly_mod_cyclic(p * q, m);
      const auto rhs = spectile::poly_mod_cyclic(
          spectile::poly_mod_cyclic(p, m) * spectile::poly_mod_cyclic(q, m), m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("printing") {
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly::one().str() == "1");
  const auto mask = spectile::mask_poly(TileSet({0, 1, 6, 7}));
  CHECK(mask.str() == "x^7 + x^6 + x + 1");
  CHECK(from_coeffs({-1, 0, 1}).str() == "x^2 - 1");
  CHECK(from_coeffs({0, -2}).str() == "-2x");
}

TEST_CASE("tile set validation") {
  CHECK_THROWS_AS(TileSet({}), std::invalid_argument);
  CHECK_THROWS_AS(TileSet({1, 2}), std::invalid_argument);   // 0 missing
  CHECK_THROWS_AS(TileSet({0, -1}), std::invalid_argument);  // negative
  CHECK_THROWS_AS(TileSet({0, 3, 3}), std::invalid_argument);
  const TileSet a({7, 0, 1, 6});  // order does not matter
  CHECK(a.elements() == std::vector<long long>{0, 1, 6, 7});
  CHECK(a.size() == 4);
  CHECK(a.span() == 8);
  CHECK(a.str() == "{0,1,6,7}");
  CHECK(a.scaled(3) == TileSet({0, 3, 18, 21}));
  CHECK_THROWS_AS((void)a.scaled(0), std::invalid_argument);
}
