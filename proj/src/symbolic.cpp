/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/symbolic.hpp>

#include <algorithm>
#include <stdexcept>

namespace quatrot
{
Quaternion<Polynomial4> symbolic_quaternion()
{
  return {Polynomial4::variable(0), Polynomial4::variable(1), Polynomial4::variable(2),
          Polynomial4::variable(3)};
}

RotationMatrix3<Polynomial4> reference_polynomials()
{
  PolyProfile p;
  return rotmat_direct(p, symbolic_quaternion());
}

PolyAssembly corrected_poly_assembly()
{
  return [](PolyProfile &p, Quaternion<Polynomial4> const &q) { return rotmat_logan(p, q); };
}

PolyAssembly uncorrected_poly_assembly()
{
  return [](PolyProfile &p, Quaternion<Polynomial4> const &q) { return assemble_uncorrected(p, q); };
}

RationalAssembly corrected_rational_assembly()
{
  return [](RationalProfile &p, Quaternion<Rational> const &q) { return rotmat_logan(p, q); };
}

RationalAssembly uncorrected_rational_assembly()
{
  return [](RationalProfile &p, Quaternion<Rational> const &q) { return assemble_uncorrected(p, q); };
}

bool VerificationReport::all_pass() const
{
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](EntryCheck const &e) { return e.pass; });
}

std::size_t VerificationReport::passed() const
{
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](EntryCheck const &e) { return e.pass; }));
}

VerificationReport verify_entrywise_identity(PolyAssembly const &candidate)
{
  auto const reference = reference_polynomials();
  PolyProfile p;
  auto const got = candidate(p, symbolic_quaternion());

  VerificationReport report;
  for (std::size_t k = 0; k < entry_names.size(); ++k)
  {
    std::size_t const i = k / 3;
    std::size_t const j = k % 3;
    EntryCheck check;
    check.entry = std::string(entry_names[k]);
    check.difference = got(i, j) - reference(i, j);
    check.pass = check.difference.is_zero();
    report.entries.push_back(std::move(check));
  }
  return report;
}

GridReport grid_equivalence(int bound, RationalAssembly const &candidate)
{
  if (bound < 0 || bound > max_grid_bound)
    throw std::invalid_argument("grid bound must be in [0, " + std::to_string(max_grid_bound) + "]");

  GridReport report;
  report.bound = bound;
  RationalProfile p;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d)
        {
          Quaternion<Rational> const q{Rational(a), Rational(b), Rational(c), Rational(d)};
          auto const expected = rotmat_direct(p, q);
          auto const got = candidate(p, q);
          ++report.cases;
          bool mismatch = false;
          for (std::size_t k = 0; k < 9; ++k)
          {
            auto const &e = expected(k / 3, k % 3);
            auto const &g = got(k / 3, k % 3);
            if (e == g)
              continue;
            if (!report.first_mismatch)
              report.first_mismatch = GridCounterexample{{a, b, c, d}, std::string(entry_names[k]), e, g};
            mismatch = true;
          }
          if (mismatch)
            ++report.mismatches;
        }
  return report;
}

} // namespace quatrot
