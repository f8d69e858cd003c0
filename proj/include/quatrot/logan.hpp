/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/quaternion.hpp>

namespace quatrot
{
/// ab = ((a+b)² - a² - b²) / 2. Three squarings, three add/subs, one halving.
template <ScalarProfile P>
typename P::value_type logan_product(P &p, typename P::value_type const &a,
                                     typename P::value_type const &b)
{
  return p.halve(p.sub(p.sub(p.square(p.add(a, b)), p.square(a)), p.square(b)));
}

/// 2ab = (a+b)² - a² - b². Three squarings, three add/subs, no shifts.
template <ScalarProfile P>
typename P::value_type logan_double_product(P &p, typename P::value_type const &a,
                                            typename P::value_type const &b)
{
  return p.sub(p.sub(p.square(p.add(a, b)), p.square(a)), p.square(b));
}

/**
 * Shared values of the squaring-only kernel:
 *
 *   phi0 = (q1+q2)²  phi1 = (q0+q3)²  phi2 = (q2+q3)²
 *   phi3 = (q0+q1)²  phi4 = (q1+q3)²  phi5 = (q0+q2)²
 *   theta0 = q1²+q2²  theta1 = q0²+q3²  theta3 = q1²-q2²  theta4 = q0²-q3²
 *   lambda = theta0 + theta1 = |q|²
 *
 * There is deliberately no theta2; the assembly below never needs it.
 */
template <typename T>
struct LoganIntermediates
{
  std::array<T, 6> phi{};
  T theta0{};
  T theta1{};
  T theta3{};
  T theta4{};
  T lambda{};

  bool operator==(LoganIntermediates const &) const = default;
};

/// 10 squarings and 11 add/subs, no multiplications.
template <ScalarProfile P>
LoganIntermediates<typename P::value_type> compute_intermediates(P &p, Quaternion<typename P::value_type> const &q)
{
  LoganIntermediates<typename P::value_type> li;
  li.phi[0] = p.square(p.add(q.q1, q.q2));
  li.phi[1] = p.square(p.add(q.q0, q.q3));
  li.phi[2] = p.square(p.add(q.q2, q.q3));
  li.phi[3] = p.square(p.add(q.q0, q.q1));
  li.phi[4] = p.square(p.add(q.q1, q.q3));
  li.phi[5] = p.square(p.add(q.q0, q.q2));

  auto const s0 = p.square(q.q0);
  auto const s1 = p.square(q.q1);
  auto const s2 = p.square(q.q2);
  auto const s3 = p.square(q.q3);
  li.theta0 = p.add(s1, s2);
  li.theta1 = p.add(s0, s3);
  li.theta3 = p.sub(s1, s2);
  li.theta4 = p.sub(s0, s3);
  li.lambda = p.add(li.theta0, li.theta1);
  return li;
}

/**
 * Final assembly from the shared values, 15 add/subs:
 *
 *   c00 = theta3 + theta4         c11 = theta4 - theta3      c22 = theta1 - theta0
 *   c01 = (phi0 - phi1) + c22     c12 = (phi2 - phi3) + c00  c20 = (phi4 - phi5) + c11
 *   c10 = (phi0 + phi1) - lambda  c21 = (phi2 + phi3) - lambda
 *   c02 = (phi4 + phi5) - lambda
 *
 * The antisymmetric parts reuse the diagonal, e.g. phi0 - phi1 equals
 * 2(q1q2 - q0q3) - (theta1 - theta0), and theta1 - theta0 is exactly c22.
 */
template <ScalarProfile P>
RotationMatrix3<typename P::value_type> assemble_logan(P &p, LoganIntermediates<typename P::value_type> const &li)
{
  RotationMatrix3<typename P::value_type> r;
  r(0, 0) = p.add(li.theta3, li.theta4);
  r(1, 1) = p.sub(li.theta4, li.theta3);
  r(2, 2) = p.sub(li.theta1, li.theta0);

  r(0, 1) = p.add(p.sub(li.phi[0], li.phi[1]), r(2, 2));
  r(1, 2) = p.add(p.sub(li.phi[2], li.phi[3]), r(0, 0));
  r(2, 0) = p.add(p.sub(li.phi[4], li.phi[5]), r(1, 1));

  r(1, 0) = p.sub(p.add(li.phi[0], li.phi[1]), li.lambda);
  r(2, 1) = p.sub(p.add(li.phi[2], li.phi[3]), li.lambda);
  r(0, 2) = p.sub(p.add(li.phi[4], li.phi[5]), li.lambda);
  return r;
}

/// Same matrix as rotmat_direct using only squarings and add/subs:
/// 10 squarings, 26 add/subs.
template <ScalarProfile P>
RotationMatrix3<typename P::value_type> rotmat_logan(P &p, Quaternion<typename P::value_type> const &q)
{
  return assemble_logan(p, compute_intermediates(p, q));
}

inline constexpr std::uint64_t logan_claimed_squares = 10;
inline constexpr std::uint64_t logan_claimed_addsub_bound = 29;
inline constexpr std::uint64_t logan_reference_addsub = 26;

/// Counted run of rotmat_logan. Throws ContractViolation unless mul, double
/// and halve are zero, square is 10 and addsub is at most 29.
OpCountLedger op_census_logan();

} // namespace quatrot
