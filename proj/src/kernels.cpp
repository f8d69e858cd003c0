/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/logan.hpp>
#include <quatrot/quaternion.hpp>

#include <cmath>

namespace quatrot
{
namespace
{
// Any input works: both kernels are straight-line code.
Quaternion<Rational> census_probe()
{
  return {Rational(1), Rational(2), Rational(3), Rational(4)};
}
} // namespace

Quaternion<double> normalize(Quaternion<double> const &q)
{
  double const n2 = q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw std::domain_error("cannot normalize a zero or non-finite quaternion");
  double const n = std::sqrt(n2);
  return {q.q0 / n, q.q1 / n, q.q2 / n, q.q3 / n};
}

OpCountLedger op_census_direct()
{
  auto p = counted(RationalProfile{});
  rotmat_direct(p, census_probe());
  if (p.ledger() != direct_claimed_census)
    throw ContractViolation("direct kernel census " + to_string(p.ledger()) +
                            " differs from " + to_string(direct_claimed_census));
  return p.ledger();
}

OpCountLedger op_census_logan()
{
  auto p = counted(RationalProfile{});
  rotmat_logan(p, census_probe());
  auto const &l = p.ledger();
  if (l.mul != 0 || l.twice != 0 || l.halve != 0 || l.square != logan_claimed_squares ||
      l.addsub > logan_claimed_addsub_bound)
    throw ContractViolation("squaring kernel census " + to_string(l) +
                            " violates {mul:0, square:10, addsub<=29, double:0}");
  return l;
}

} // namespace quatrot
