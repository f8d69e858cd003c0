/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include "oracles.hpp"

#include <quatrot/precision.hpp>
#include <quatrot/quaternion.hpp>

using namespace quatrot;
using namespace quatrot::testing;

TEST_CASE("norm_squared")
{
  RationalProfile p;
  CHECK(norm_squared(p, make_quaternion<Rational>(1, 0, 0, 0)) == 1);
  CHECK(norm_squared(p, make_quaternion<Rational>(1, 2, 3, 4)) == 30);
  CHECK(norm_squared(p, make_quaternion<Rational>(0, 0, 0, 0)) == 0);

  auto c = counted(RationalProfile{});
  norm_squared(c, make_quaternion<Rational>(1, 2, 3, 4));
  CHECK(c.ledger() == OpCountLedger{0, 4, 3, 0, 0});
}

TEST_CASE("normalize")
{
  CHECK(normalize({2, 0, 0, 0}) == Quaternion<double>{1, 0, 0, 0});
  CHECK(normalize({1, 1, 1, 1}) == Quaternion<double>{0.5, 0.5, 0.5, 0.5});
  CHECK_THROWS_AS(normalize({0, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(normalize({NAN, 0, 0, 0}), std::domain_error);

  F64Profile f;
  auto const u = normalize({0.3, -1.7, 2.2, 0.01});
  CHECK(std::fabs(norm_squared(f, u) - 1.0) <= 1e-15);
}

TEST_CASE("rotmat_direct examples")
{
  RationalProfile p;
  CHECK(equals(rotmat_direct(p, make_quaternion<Rational>(1, 0, 0, 0)), IntMatrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
  CHECK(equals(rotmat_direct(p, make_quaternion<Rational>(0, 1, 0, 0)),
               IntMatrix{{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}));

  IntMatrix const expected{{{-20, 4, 22}, {20, -10, 20}, {10, 28, 4}}};
  REQUIRE(dcm_oracle(1, 2, 3, 4) == expected);
  CHECK(equals(rotmat_direct(p, make_quaternion<Rational>(1, 2, 3, 4)), expected));

  // Cross-check RᵀR = 900·I for the non-unit example.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
    {
      long long s = 0;
      for (int k = 0; k < 3; ++k)
        s += expected[k][i] * expected[k][j];
      CHECK(s == (i == j ? 900 : 0));
    }

  CHECK(equals(rotmat_direct(p, make_quaternion<Rational>(0, 0, 0, 0)), IntMatrix{}));
}

TEST_CASE("direct census")
{
  auto const l = op_census_direct();
  CHECK(l == OpCountLedger{6, 4, 15, 6, 0});

  SUBCASE("input independent and profile independent")
  {
    auto a = counted(F64Profile{});
    rotmat_direct(a, Quaternion<double>{0.1, -0.2, 0.3, 0.9});
    auto b = counted(RationalProfile{});
    rotmat_direct(b, make_quaternion<Rational>(0, 0, 0, 0));
    CHECK(a.ledger() == l);
    CHECK(b.ledger() == l);
  }
}

TEST_CASE("direct kernel exact properties")
{
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RationalProfile p;
  for (int trial = 0; trial < 300; ++trial)
  {
    Quaternion<Rational> q{Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)),
                           Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng))};
    auto const r = rotmat_direct(p, q);
    Rational const n2 = norm_squared(p, q);

    // Double cover.
    REQUIRE(rotmat_direct(p, Quaternion<Rational>{-q.q0, -q.q1, -q.q2, -q.q3}) == r);

    // Homogeneity of degree two.
    Rational const s(coef(rng), den(rng));
    auto const rs = rotmat_direct(p, Quaternion<Rational>{s * q.q0, s * q.q1, s * q.q2, s * q.q3});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        REQUIRE(rs(i, j) == s * s * r(i, j));

    // Trace identity.
    REQUIRE(r(0, 0) + r(1, 1) + r(2, 2) == 4 * q.q0 * q.q0 - n2);

    // RᵀR = |q|⁴·I and det R = |q|⁶.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
      {
        Rational dot = 0;
        for (std::size_t k = 0; k < 3; ++k)
          dot += r(k, i) * r(k, j);
        REQUIRE(dot == (i == j ? Rational(n2 * n2) : Rational(0)));
      }
    REQUIRE(determinant(r) == n2 * n2 * n2);
  }
}

TEST_CASE("direct kernel is a rotation for unit quaternions")
{
  UnitQuaternionSampler sampler(99);
  F64Profile f;
  for (int i = 0; i < 20000; ++i)
  {
    auto const r = rotmat_direct(f, sampler.next());
    REQUIRE(orthogonality_defect(r) <= 1e-12);
    REQUIRE(std::fabs(determinant(r) - 1.0) <= 1e-12);
  }
}
