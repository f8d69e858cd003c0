/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <quatrot/fixed_point.hpp>
#include <quatrot/logan.hpp>
#include <quatrot/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace quatrot;

namespace
{
FixedPointFormat q(int total, int frac)
{
  FixedPointFormat f;
  f.total_bits = total;
  f.frac_bits = frac;
  return f;
}

// Independent oracle: exact wide product then rounding, done with rationals.
double oracle_square(double x, FixedPointFormat const &fmt)
{
  Rational const exact = Rational(static_cast<long long>(std::ldexp(x, fmt.frac_bits))) *
                         Rational(static_cast<long long>(std::ldexp(x, fmt.frac_bits)));
  // exact is value² scaled by 2^(2f); rescale to 2^f units and round half even.
  Rational const scaled = exact / Rational(1LL << fmt.frac_bits);
  auto const num = boost::multiprecision::numerator(scaled);
  auto const den = boost::multiprecision::denominator(scaled);
  auto fl = static_cast<long long>(num / den);
  if (num % den != 0 && num < 0)
    --fl;
  Rational const diff = scaled - fl;
  long long raw = fl;
  if (diff > Rational(1, 2) || (diff == Rational(1, 2) && (fl & 1)))
    ++raw;
  raw = std::clamp<long long>(raw, fmt.min_raw(), fmt.max_raw());
  return std::ldexp(static_cast<double>(raw), -fmt.frac_bits);
}
} // namespace

TEST_CASE("fixed-point format parsing and range")
{
  auto f = FixedPointFormat::parse("Q3.12");
  CHECK(f.total_bits == 16);
  CHECK(f.frac_bits == 12);
  CHECK(f.to_string() == "Q3.12");
  CHECK(f.max_value() == doctest::Approx(8.0 - std::ldexp(1.0, -12)));
  CHECK(f.min_value() == -8.0);

  CHECK(FixedPointFormat::parse("Q0.15").total_bits == 16);
  CHECK_THROWS_AS(FixedPointFormat::parse("3.12"), std::invalid_argument);
  CHECK_THROWS_AS(FixedPointFormat::parse("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(FixedPointFormat::parse("Q3.x"), std::invalid_argument);
  CHECK_THROWS_AS(FixedPointFormat::parse("Q-1.4"), std::invalid_argument);
  CHECK_THROWS_AS(FixedPointFormat::parse("Q20.20"), std::invalid_argument);
  CHECK_FALSE(q(8, 8).valid());
  CHECK(q(8, 7).valid());
}

TEST_CASE("fx_quantize")
{
  auto const fmt = q(16, 8);
  auto r = fx_quantize(0.75, fmt);
  CHECK(r.value.raw == 192);
  CHECK(fx_to_double(r.value, fmt) == 0.75);
  CHECK_FALSE(r.saturated);

  CHECK(fx_quantize(0.0, fmt).value.raw == 0);
  CHECK(fx_quantize(0.0, q(4, 0)).value.raw == 0);

  // Q{16,8} spans [-128, 127.99609375], so 10.0 is representable.
  r = fx_quantize(10.0, q(16, 8));
  CHECK_FALSE(r.saturated);
  CHECK(r.value.raw == 10 * 256);
  r = fx_quantize(200.0, q(16, 8));
  CHECK(r.saturated);
  CHECK(fx_to_double(r.value, fmt) == 127.99609375);
  r = fx_quantize(-1e9, fmt);
  CHECK(r.saturated);
  CHECK(fx_to_double(r.value, fmt) == -128.0);
  CHECK(fx_quantize(INFINITY, fmt).saturated);
  CHECK_THROWS_AS(fx_quantize(NAN, fmt), std::invalid_argument);

  SUBCASE("ties go to even")
  {
    auto const f0 = q(8, 0);
    CHECK(fx_quantize(0.5, f0).value.raw == 0);
    CHECK(fx_quantize(1.5, f0).value.raw == 2);
    CHECK(fx_quantize(2.5, f0).value.raw == 2);
    CHECK(fx_quantize(-0.5, f0).value.raw == 0);
    CHECK(fx_quantize(-1.5, f0).value.raw == -2);
    CHECK(fx_quantize(-2.5, f0).value.raw == -2);
    CHECK(fx_quantize(2.5000001, f0).value.raw == 3);
  }
}

TEST_CASE("quantization saturates at the top of the range")
{
  auto const r = fx_quantize(10.0, q(8, 4));
  CHECK(r.saturated);
  CHECK(fx_to_double(r.value, q(8, 4)) == 7.9375);
}

TEST_CASE("fixed-point arithmetic")
{
  auto const f = q(16, 8);
  auto v = [&](double x) { return fx_quantize(x, f).value; };

  CHECK(fx_to_double(fx_square(v(1.5), f).value, f) == 2.25);

  auto const f84 = q(8, 4);
  auto const sq = fx_square(fx_quantize(2.5, f84).value, f84);
  CHECK(fx_to_double(sq.value, f84) == 6.25);
  CHECK_FALSE(sq.saturated);
  CHECK(fx_to_double(sq.value, f84) == oracle_square(2.5, f84));

  auto const big = fx_square(fx_quantize(3.0, f84).value, f84);
  CHECK(big.saturated);
  CHECK(fx_to_double(big.value, f84) == 7.9375);

  CHECK(fx_sub(v(1.0), v(0.25), f).value == v(0.75));
  CHECK(fx_twice(v(1.25), f).value == v(2.5));
  CHECK(fx_halve(v(2.5), f).value == v(1.25));
  CHECK(fx_mul(v(-1.5), v(2.0), f).value == v(-3.0));

  // 3 ulp halved is 1.5 ulp, which ties to 2.
  CHECK(fx_halve(Fixed{3}, f).value.raw == 2);
  CHECK(fx_halve(Fixed{5}, f).value.raw == 2);
  CHECK(fx_halve(Fixed{-3}, f).value.raw == -2);

  auto const sat = fx_add(v(127.0), v(5.0), f);
  CHECK(sat.saturated);
  CHECK(sat.value.raw == f.max_raw());
}

TEST_CASE("wraparound overflow mode")
{
  auto f = q(8, 0);
  f.overflow = OverflowMode::wrap;
  auto const r = fx_add(Fixed{100}, Fixed{100}, f);
  CHECK(r.saturated);
  CHECK(r.value.raw == 200 - 256);
  CHECK(fx_quantize(130.0, f).value.raw == 130 - 256);
  CHECK(fx_twice(Fixed{-128}, f).value.raw == 0);
}

TEST_CASE("shift_right_rne")
{
  CHECK(shift_right_rne(6, 2) == 2);  // 1.5 -> 2
  CHECK(shift_right_rne(10, 2) == 2); // 2.5 -> 2
  CHECK(shift_right_rne(11, 2) == 3);
  CHECK(shift_right_rne(-6, 2) == -2);
  CHECK(shift_right_rne(-10, 2) == -2);
  CHECK(shift_right_rne(-11, 2) == -3);
  CHECK(shift_right_rne(7, 0) == 7);
}

TEST_CASE("fixed-point properties")
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-7.9, 7.9);
  for (int frac : {4, 8, 12, 16, 20})
  {
    auto const fmt = q(4 + frac, frac);
    for (int i = 0; i < 2000; ++i)
    {
      double const x = dist(rng);
      auto const r = fx_quantize(x, fmt);
      REQUIRE_FALSE(r.saturated);
      REQUIRE(std::fabs(fx_to_double(r.value, fmt) - x) <= std::ldexp(1.0, -frac - 1));
      // Representable values are fixed points of quantization.
      REQUIRE(fx_quantize(fx_to_double(r.value, fmt), fmt).value == r.value);
      REQUIRE(fx_add(r.value, Fixed{0}, fmt).value == r.value);

      double const y = dist(rng) / 3.0;
      auto const a = fx_quantize(y, fmt).value;
      REQUIRE(fx_square(a, fmt).value == fx_square(a, fmt).value);
      REQUIRE(fx_to_double(fx_square(a, fmt).value, fmt) == oracle_square(fx_to_double(a, fmt), fmt));
    }
  }
}

TEST_CASE("decimal parsing is exact")
{
  CHECK(parse_decimal_exact("7") == Rational(7));
  CHECK(parse_decimal_exact("-1.25") == Rational(-5, 4));
  CHECK(parse_decimal_exact("0.1") == Rational(1, 10));
  CHECK(parse_decimal_exact("+.5") == Rational(1, 2));
  CHECK(parse_decimal_exact("3e-2") == Rational(3, 100));
  CHECK(parse_decimal_exact("1.5E3") == Rational(1500));
  CHECK(parse_decimal_exact("2.") == Rational(2));
  for (auto bad : {"", "-", ".", "1e", "abc", "1.2.3", "nan", "inf", "1/2", "1 "})
    CHECK_THROWS_AS(parse_decimal_exact(bad), std::invalid_argument);
  CHECK(to_string(Rational(-20)) == "-20");
  CHECK(to_string(Rational(1, 2)) == "1/2");
}

TEST_CASE("rational profile is exact")
{
  RationalProfile p;
  Rational const a(7, 3);
  CHECK(p.halve(p.twice(a)) == a);
  CHECK(p.square(a) == p.mul(a, a));
  CHECK(p.twice(a) == p.add(a, a));
}

TEST_CASE("counting wrapper")
{
  auto c = counted(F64Profile{});
  CHECK(c.ledger() == OpCountLedger{});

  double const v = c.square(c.add(2.0, 3.0));
  CHECK(v == 25.0);
  CHECK(c.ledger() == OpCountLedger{0, 1, 1, 0, 0});

  c.reset();
  c.twice(1.0);
  CHECK(c.ledger().twice == 1);
  CHECK(c.ledger().addsub == 0);

  SUBCASE("quarter-square product census")
  {
    auto r = counted(RationalProfile{});
    CHECK(logan_product(r, Rational(3), Rational(4)) == 12);
    CHECK(r.ledger() == OpCountLedger{0, 3, 3, 0, 1});
  }

  SUBCASE("transparency")
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-2, 2);
    F64Profile plain;
    auto wrapped = counted(F64Profile{});
    for (int i = 0; i < 500; ++i)
    {
      double const a = d(rng), b = d(rng);
      REQUIRE(logan_product(plain, a, b) == logan_product(wrapped, a, b));
      REQUIRE(plain.halve(plain.sub(a, b)) == wrapped.halve(wrapped.sub(a, b)));
    }
  }

  SUBCASE("fixed-point base keeps its saturation tally")
  {
    auto fc = counted(FixedProfile(q(8, 4)));
    auto const three = fc.base().quantize(3.0);
    fc.square(three);
    CHECK(fc.base().saturations() == 1);
    CHECK(fc.ledger().square == 1);
  }
}
