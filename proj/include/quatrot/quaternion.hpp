/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/scalar.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace quatrot
{
/// q0 is the scalar part, q1..q3 the vector part. Not required to be unit.
template <typename T>
struct Quaternion
{
  T q0{};
  T q1{};
  T q2{};
  T q3{};

  T const &operator[](std::size_t i) const
  {
    switch (i)
    {
    case 0:
      return q0;
    case 1:
      return q1;
    case 2:
      return q2;
    default:
      return q3;
    }
  }

  bool operator==(Quaternion const &) const = default;
};

/// Row-major 3x3 matrix, entry c[i][j].
template <typename T>
struct RotationMatrix3
{
  std::array<std::array<T, 3>, 3> c{};

  T &operator()(std::size_t i, std::size_t j) { return c[i][j]; }
  T const &operator()(std::size_t i, std::size_t j) const { return c[i][j]; }

  bool operator==(RotationMatrix3 const &) const = default;
};

/// Entry names "c00".."c22" in row-major order.
inline constexpr std::array<std::string_view, 9> entry_names = {
    "c00", "c01", "c02", "c10", "c11", "c12", "c20", "c21", "c22"};

/// q0² + q1² + q2² + q3², as 4 squarings and 3 additions.
template <ScalarProfile P>
typename P::value_type norm_squared(P &p, Quaternion<typename P::value_type> const &q)
{
  auto const s0 = p.square(q.q0);
  auto const s1 = p.square(q.q1);
  auto const s2 = p.square(q.q2);
  auto const s3 = p.square(q.q3);
  return p.add(p.add(s0, s1), p.add(s2, s3));
}

/// Scales q to unit norm. Throws std::domain_error for the zero quaternion.
Quaternion<double> normalize(Quaternion<double> const &q);

/**
 * Direction cosine matrix of q, entry for entry:
 *
 *   c00 = q0²+q1²-q2²-q3²   c01 = 2(q1q2-q0q3)      c02 = 2(q0q2+q1q3)
 *   c10 = 2(q1q2+q0q3)      c11 = q0²-q1²+q2²-q3²   c12 = 2(q2q3-q0q1)
 *   c20 = 2(q1q3-q0q2)      c21 = 2(q0q1+q2q3)      c22 = q0²-q1²-q2²+q3²
 *
 * Costs 6 multiplications, 4 squarings, 15 additions and 6 doublings. The
 * diagonal is evaluated as a balanced difference of two pair sums, so the
 * longest dependency chain is three operations deep.
 *
 * For non-unit q the result is norm_squared(q) times a rotation.
 */
template <ScalarProfile P>
RotationMatrix3<typename P::value_type> rotmat_direct(P &p, Quaternion<typename P::value_type> const &q)
{
  auto const s0 = p.square(q.q0);
  auto const s1 = p.square(q.q1);
  auto const s2 = p.square(q.q2);
  auto const s3 = p.square(q.q3);

  auto const p12 = p.mul(q.q1, q.q2);
  auto const p03 = p.mul(q.q0, q.q3);
  auto const p02 = p.mul(q.q0, q.q2);
  auto const p13 = p.mul(q.q1, q.q3);
  auto const p23 = p.mul(q.q2, q.q3);
  auto const p01 = p.mul(q.q0, q.q1);

  RotationMatrix3<typename P::value_type> r;
  r(0, 0) = p.sub(p.add(s0, s1), p.add(s2, s3));
  r(1, 1) = p.sub(p.add(s0, s2), p.add(s1, s3));
  r(2, 2) = p.sub(p.add(s0, s3), p.add(s1, s2));

  r(0, 1) = p.twice(p.sub(p12, p03));
  r(1, 0) = p.twice(p.add(p12, p03));
  r(0, 2) = p.twice(p.add(p02, p13));
  r(2, 0) = p.twice(p.sub(p13, p02));
  r(1, 2) = p.twice(p.sub(p23, p01));
  r(2, 1) = p.twice(p.add(p01, p23));
  return r;
}

/// Thrown when a kernel's counted operations disagree with its contract.
class ContractViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// {mul 6, square 4, addsub 15, double 6}.
inline constexpr OpCountLedger direct_claimed_census{6, 4, 15, 6, 0};

/// Counted run of rotmat_direct; throws ContractViolation unless it matches
/// direct_claimed_census.
OpCountLedger op_census_direct();

} // namespace quatrot
