/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/scalar.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace quatrot
{
/**
 * Polynomial in q0..q3 with exact rational coefficients, kept canonical:
 * zero coefficients are never stored, so equality is plain map equality.
 * Each exponent is limited to max_exponent; exceeding it throws
 * std::domain_error.
 */
class Polynomial4
{
public:
  static constexpr int max_exponent = 4;
  using Exponents = std::array<std::uint8_t, 4>;
  // Descending order prints q0-heavy terms first.
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  Polynomial4() = default;
  explicit Polynomial4(Rational constant);

  static Polynomial4 variable(int index);
  static Polynomial4 monomial(Rational coefficient, Exponents exponents);

  Terms const &terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(Exponents const &exponents) const;

  /// Substitutes rational values for q0..q3.
  Rational evaluate(std::array<Rational, 4> const &values) const;

  /// e.g. "2*q0*q1 - 2*q0*q2 + q3^2"; "0" for the zero polynomial.
  std::string to_string() const;

  Polynomial4 operator-() const;
  friend Polynomial4 operator+(Polynomial4 const &a, Polynomial4 const &b);
  friend Polynomial4 operator-(Polynomial4 const &a, Polynomial4 const &b);
  friend Polynomial4 operator*(Polynomial4 const &a, Polynomial4 const &b);

  bool operator==(Polynomial4 const &) const = default;

private:
  void accumulate(Exponents const &e, Rational const &c);

  Terms _terms;
};

Polynomial4 poly_add(Polynomial4 const &p, Polynomial4 const &r);
Polynomial4 poly_sub(Polynomial4 const &p, Polynomial4 const &r);
Polynomial4 poly_mul(Polynomial4 const &p, Polynomial4 const &r);

/// Scalar profile over polynomials. The oracle may multiply; only the
/// squaring kernel may not, which Counted<PolyProfile> can confirm.
struct PolyProfile
{
  using value_type = Polynomial4;

  Polynomial4 add(Polynomial4 const &a, Polynomial4 const &b) const { return a + b; }
  Polynomial4 sub(Polynomial4 const &a, Polynomial4 const &b) const { return a - b; }
  Polynomial4 mul(Polynomial4 const &a, Polynomial4 const &b) const { return a * b; }
  Polynomial4 square(Polynomial4 const &a) const { return a * a; }
  Polynomial4 twice(Polynomial4 const &a) const { return a + a; }
  Polynomial4 halve(Polynomial4 const &a) const { return a * Polynomial4(Rational(1, 2)); }
  Polynomial4 zero() const { return Polynomial4(); }
  Polynomial4 one() const { return Polynomial4(Rational(1)); }
};

} // namespace quatrot
