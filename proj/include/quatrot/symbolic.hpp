/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/logan.hpp>
#include <quatrot/polynomial.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace quatrot
{
/**
 * A squaring-only assembly with the assignment slips that circulate for this
 * construction: theta3 taken as q0²-q2², an extra theta2 = q0²+q2², and the
 * c02/c12/c20/c21 right-hand sides permuted. Only c01, c10 and c22 survive.
 * Kept as a negative fixture for the verifier; never used for results.
 */
template <ScalarProfile P>
RotationMatrix3<typename P::value_type> assemble_uncorrected(P &p, Quaternion<typename P::value_type> const &q)
{
  std::array<typename P::value_type, 6> phi{
      p.square(p.add(q.q1, q.q2)), p.square(p.add(q.q0, q.q3)), p.square(p.add(q.q2, q.q3)),
      p.square(p.add(q.q0, q.q1)), p.square(p.add(q.q1, q.q3)), p.square(p.add(q.q0, q.q2))};
  auto const s0 = p.square(q.q0);
  auto const s1 = p.square(q.q1);
  auto const s2 = p.square(q.q2);
  auto const s3 = p.square(q.q3);
  auto const theta0 = p.add(s1, s2);
  auto const theta1 = p.add(s0, s3);
  auto const theta2 = p.add(s0, s2);
  auto const theta3 = p.sub(s0, s2);
  auto const theta4 = p.sub(s0, s3);
  auto const lambda = p.add(theta0, theta1);

  RotationMatrix3<typename P::value_type> r;
  r(0, 0) = p.add(theta3, theta4);
  r(0, 1) = p.sub(p.sub(phi[0], phi[1]), p.sub(theta0, theta1));
  r(0, 2) = p.sub(p.add(phi[2], phi[3]), lambda);
  r(1, 0) = p.sub(p.add(phi[0], phi[1]), lambda);
  r(1, 1) = p.sub(theta4, theta3);
  r(1, 2) = p.add(p.sub(phi[1], phi[5]), p.sub(theta2, theta1));
  r(2, 0) = p.sub(p.add(phi[4], phi[5]), lambda);
  r(2, 1) = p.add(p.sub(phi[2], phi[3]), p.sub(theta3, theta4));
  r(2, 2) = p.sub(theta1, theta0);
  return r;
}

/// q0..q3 as indeterminates.
Quaternion<Polynomial4> symbolic_quaternion();

/// The direction cosine matrix entries as polynomials (rotmat_direct over
/// PolyProfile).
RotationMatrix3<Polynomial4> reference_polynomials();

using PolyAssembly =
    std::function<RotationMatrix3<Polynomial4>(PolyProfile &, Quaternion<Polynomial4> const &)>;
using RationalAssembly =
    std::function<RotationMatrix3<Rational>(RationalProfile &, Quaternion<Rational> const &)>;

PolyAssembly corrected_poly_assembly();
PolyAssembly uncorrected_poly_assembly();
RationalAssembly corrected_rational_assembly();
RationalAssembly uncorrected_rational_assembly();

struct EntryCheck
{
  std::string entry;
  bool pass = false;
  /// candidate - reference; zero exactly when pass.
  Polynomial4 difference;
};

struct VerificationReport
{
  std::vector<EntryCheck> entries;

  bool all_pass() const;
  std::size_t passed() const;
};

/// Expands `candidate` over Polynomial4 and subtracts the reference entry by
/// entry.
VerificationReport verify_entrywise_identity(PolyAssembly const &candidate = corrected_poly_assembly());

struct GridCounterexample
{
  std::array<long long, 4> q{};
  std::string entry;
  Rational direct;
  Rational candidate;
};

struct GridReport
{
  int bound = 0;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::optional<GridCounterexample> first_mismatch;

  bool pass() const { return mismatches == 0; }
};

inline constexpr int max_grid_bound = 5;

/// Compares rotmat_direct against `candidate` on every integer quaternion in
/// {-bound..bound}^4 with exact arithmetic. bound must be in [0, 5].
GridReport grid_equivalence(int bound, RationalAssembly const &candidate = corrected_rational_assembly());

} // namespace quatrot
