#include "doctest.h"

#include <stdexcept>

#include <complex>
#include <vector>

#include "spectile/spectrum.hpp"
#include "spectile/tiling.hpp"

using spectile::Reduced;
using spectile::Spectrum;
using spectile::TileSet;

namespace {

Spectrum make(std::initializer_list<std::pair<long long, long long>> qs) {
  std::vector<Reduced> v;
  for (const auto& [n, d] : qs) v.emplace_back(n, d);
  return Spectrum(std::move(v));
}

}  // namespace

TEST_CASE("spectrum container invariants") {
  const auto s = make({{1, 2}, {0, 1}, {1, 4}});
  CHECK(s.size() == 3);
  CHECK(s.values() == std::vector<Reduced>{Reduced(0, 1), Reduced(1, 4), Reduced(1, 2)});
  CHECK(s.str() == "{0/1, 1/4, 1/2}");
  CHECK(Spectrum::trivial().size() == 1);
  CHECK_THROWS_AS(Spectrum({}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({Reduced(1, 2)}), std::invalid_argument);  // 0 missing
  CHECK_THROWS_AS(Spectrum({Reduced(0, 1), Reduced(2, 4), Reduced(1, 2)}),
                  std::invalid_argument);  // duplicate after reduction
}

TEST_CASE("constructed spectrum: frozen examples") {
  CHECK(spectile::construct_spectrum(TileSet({0, 1, 6, 7})) ==
        make({{0, 1}, {1, 4}, {1, 2}, {3, 4}}));
  CHECK(spectile::construct_spectrum(TileSet({0, 1, 2})) == make({{0, 1}, {1, 3}, {2, 3}}));
  CHECK(spectile::construct_spectrum(TileSet({0, 3, 6})) == make({{0, 1}, {1, 9}, {2, 9}}));
  CHECK(spectile::construct_spectrum(TileSet({0})) == Spectrum::trivial());
  CHECK_THROWS_AS((void)spectile::construct_spectrum(TileSet({0, 1, 3})),
                  std::domain_error);  // first condition fails
  CHECK_THROWS_AS((void)spectile::construct_spectrum(TileSet({0, 1, 2, 3, 7, 8})),
                  std::domain_error);  // second condition fails
}

TEST_CASE("constructed spectra verify on known tiles") {
  for (const auto& elems : std::vector<std::vector<long long>>{
           {0, 1}, {0, 2}, {0, 1, 2}, {0, 2, 4}, {0, 3, 6}, {0, 1, 6, 7}, {0, 1, 4, 5},
           {0, 1, 2, 3, 4, 5}}) {
    const TileSet A(elems);
    const auto s = spectile::construct_spectrum(A);
    CHECK(s.size() == A.size());
    CHECK(spectile::verify_spectrum(A, s));
  }
}

TEST_CASE("verification pinpoints the failing difference") {
  const auto check =
      spectile::check_spectrum(TileSet({0, 1, 2}), make({{0, 1}, {1, 2}, {3, 4}}));
  CHECK_FALSE(check.ok);
  CHECK(check.failure == spectile::SpectrumCheck::Failure::RootTestFailed);
  CHECK(check.failed_difference == Reduced(1, 2));
  CHECK(check.i == 0);
  CHECK(check.j == 1);

  const auto wrong_size = spectile::check_spectrum(TileSet({0, 1, 2}), make({{0, 1}, {1, 3}}));
  CHECK_FALSE(wrong_size.ok);
  CHECK(wrong_size.failure == spectile::SpectrumCheck::Failure::CardinalityMismatch);

  CHECK(spectile::check_spectrum(TileSet({0}), Spectrum::trivial()).ok);
}

TEST_CASE("verification accepts a spectrum the construction cannot reach") {
  // {0, 1/12, 1/2, 7/12} works for {0,1,6,7}: all six differences have
  // denominators among {2, 4, 12}
  const TileSet A({0, 1, 6, 7});
  const auto theta = make({{0, 1}, {1, 12}, {1, 2}, {7, 12}});
  CHECK(spectile::verify_spectrum(A, theta));
  CHECK(theta != spectile::construct_spectrum(A));
}

TEST_CASE("admissible modulus") {
  CHECK(spectile::admissible_modulus(TileSet({0, 1, 6, 7}), 1000000) == 12);
  CHECK(spectile::admissible_modulus(TileSet({0, 1, 2}), 1000000) == 3);
  CHECK(spectile::admissible_modulus(TileSet({0, 1, 3}), 1000000) == 1);  // no divisors
  CHECK_FALSE(spectile::admissible_modulus(TileSet({0, 1, 6, 7}), 10).has_value());
}

TEST_CASE("spectrum search: frozen examples") {
  const auto s1 = spectile::spectrum_search(TileSet({0, 1}));
  REQUIRE(s1.has_value());
  CHECK(*s1 == make({{0, 1}, {1, 2}}));

  // lexicographically first clique lands on the twelfths, not the quarters
  const auto s2 = spectile::spectrum_search(TileSet({0, 1, 6, 7}));
  REQUIRE(s2.has_value());
  CHECK(*s2 == make({{0, 1}, {1, 12}, {1, 2}, {7, 12}}));
  CHECK(spectile::verify_spectrum(TileSet({0, 1, 6, 7}), *s2));

  CHECK_FALSE(spectile::spectrum_search(TileSet({0, 1, 3})).has_value());
  CHECK_THROWS_AS((void)spectile::spectrum_search(TileSet({0})), std::invalid_argument);
}

TEST_CASE("search and construction agree on spectrality for small tiles") {
  for (const auto& elems : std::vector<std::vector<long long>>{
           {0, 1}, {0, 2}, {0, 1, 2}, {0, 2, 4}, {0, 1, 6, 7}}) {
    const TileSet A(elems);
    const auto found = spectile::spectrum_search(A);
    REQUIRE(found.has_value());
    CHECK(spectile::verify_spectrum(A, *found));
  }
}

TEST_CASE("scaling a set divides its spectrum") {
  for (const auto& elems :
       std::vector<std::vector<long long>>{{0, 1}, {0, 1, 2}, {0, 1, 6, 7}}) {
    const TileSet A(elems);
    const auto s = spectile::construct_spectrum(A);
    for (long long k : {2LL, 3LL}) {
      std::vector<Reduced> scaled;
      for (const Reduced& q : s.values()) scaled.push_back(q.divided_by(k));
      CHECK(spectile::verify_spectrum(A.scaled(k), Spectrum(std::move(scaled))));
    }
  }
}

TEST_CASE("unit fraction sums have full denominator") {
  using parts_t = std::vector<std::pair<long long, long long>>;
  CHECK(spectile::unit_fraction_order(parts_t{{1, 2}, {1, 3}}) == 6);
  CHECK(spectile::unit_fraction_order(parts_t{{1, 4}}) == 4);
  CHECK(spectile::unit_fraction_order(parts_t{{1, 2}, {2, 3}}) == 6);
  CHECK(spectile::unit_fraction_order(parts_t{{-1, 3}, {1, 5}}) == 15);
  CHECK_THROWS_AS((void)spectile::unit_fraction_order(parts_t{}), std::invalid_argument);
  CHECK_THROWS_AS((void)spectile::unit_fraction_order(parts_t{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((void)spectile::unit_fraction_order(parts_t{{2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS((void)spectile::unit_fraction_order(parts_t{{1, 2}, {1, 4}}),
                  std::invalid_argument);
}

TEST_CASE("prime-power spectrum typing") {
  using spectile::PrimePowerReport;
  const auto quarters = make({{0, 1}, {1, 4}, {1, 2}, {3, 4}});
  CHECK(spectile::prime_power_spectrum_check(TileSet({0, 1, 6, 7}), quarters) ==
        PrimePowerReport{2, 2, true});
  CHECK(spectile::prime_power_spectrum_check(TileSet({0, 1, 2}),
                                             make({{0, 1}, {1, 3}, {2, 3}})) ==
        PrimePowerReport{3, 1, true});
  // mixed denominators 12 and 2: not single-prime-power type
  const auto twelfths = make({{0, 1}, {1, 12}, {1, 2}, {7, 12}});
  CHECK_FALSE(
      spectile::prime_power_spectrum_check(TileSet({0, 1, 6, 7}), twelfths).has_value());
  CHECK_FALSE(
      spectile::prime_power_spectrum_check(TileSet({0}), Spectrum::trivial()).has_value());
  CHECK_THROWS_AS((void)spectile::prime_power_spectrum_check(
                      TileSet({0, 1, 2}), make({{0, 1}, {1, 2}, {3, 4}})),
                  std::invalid_argument);  // unverified candidate rejected
}

TEST_CASE("transform: value at zero and at mask roots") {
  const TileSet A({0, 1, 6, 7});
  CHECK(spectile::chi_hat(A, 0.0) == std::complex<double>(4.0, 0.0));
  for (double xi : {1.0 / 12.0, 7.0 / 12.0, 0.5, 0.25})
    CHECK(std::abs(spectile::chi_hat(A, xi)) < 1e-9);
  // integers are zeros of the interval factor regardless of A
  CHECK(std::abs(spectile::chi_hat(A, 3.0)) < 1e-9);
  // 1/3 is not a root: the transform stays visibly away from zero
  CHECK(std::abs(spectile::chi_hat(A, 1.0 / 3.0)) > 1e-3);
}

TEST_CASE("numeric orthogonality agrees with the exact verdict") {
  const TileSet A({0, 1, 6, 7});
  CHECK(spectile::hadamard_check(A, make({{0, 1}, {1, 4}, {1, 2}, {3, 4}}), 1e-9));
  CHECK(spectile::hadamard_check(A, make({{0, 1}, {1, 12}, {1, 2}, {7, 12}}), 1e-9));
  CHECK_FALSE(spectile::hadamard_check(A, make({{0, 1}, {1, 3}, {1, 2}, {2, 3}}), 1e-9));
  CHECK_FALSE(
      spectile::hadamard_check(TileSet({0, 1, 2}), make({{0, 1}, {1, 2}, {3, 4}}), 1e-9));
  CHECK_THROWS_AS((void)spectile::hadamard_check(A, Spectrum::trivial(), 1e-9),
                  std::invalid_argument);
}
