/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatrot
{
/**
 * A scalar profile bundles a value type with the arithmetic the kernels are
 * allowed to use. Kernels never touch operators on the value type directly,
 * so the same kernel source runs exactly (rationals, polynomials), in binary64,
 * bit-true in fixed point, under an operation counter, or as a graph tracer.
 *
 * `twice` is the shift-class doubling and `halve` the shift-class halving.
 */
template <typename P>
concept ScalarProfile = requires(P &p, typename P::value_type const &a) {
  typename P::value_type;
  { p.add(a, a) } -> std::convertible_to<typename P::value_type>;
  { p.sub(a, a) } -> std::convertible_to<typename P::value_type>;
  { p.mul(a, a) } -> std::convertible_to<typename P::value_type>;
  { p.square(a) } -> std::convertible_to<typename P::value_type>;
  { p.twice(a) } -> std::convertible_to<typename P::value_type>;
  { p.halve(a) } -> std::convertible_to<typename P::value_type>;
  { p.zero() } -> std::convertible_to<typename P::value_type>;
  { p.one() } -> std::convertible_to<typename P::value_type>;
};

using Rational = boost::multiprecision::cpp_rational;

/// Parses a finite decimal literal ("-1.25", "3e-2", "7") into its exact
/// rational value. Throws std::invalid_argument on anything else.
Rational parse_decimal_exact(std::string_view text);

/// Integers print as "-20", everything else as "num/den".
std::string to_string(Rational const &value);

struct F64Profile
{
  using value_type = double;

  double add(double a, double b) const { return a + b; }
  double sub(double a, double b) const { return a - b; }
  double mul(double a, double b) const { return a * b; }
  double square(double a) const { return a * a; }
  double twice(double a) const { return a + a; }
  double halve(double a) const { return a * 0.5; }
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
};

struct RationalProfile
{
  using value_type = Rational;

  Rational add(Rational const &a, Rational const &b) const { return a + b; }
  Rational sub(Rational const &a, Rational const &b) const { return a - b; }
  Rational mul(Rational const &a, Rational const &b) const { return a * b; }
  Rational square(Rational const &a) const { return a * a; }
  Rational twice(Rational const &a) const { return a + a; }
  Rational halve(Rational const &a) const { return a / 2; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
};

struct OpCountLedger
{
  std::uint64_t mul = 0;
  std::uint64_t square = 0;
  std::uint64_t addsub = 0;
  std::uint64_t twice = 0;
  std::uint64_t halve = 0;

  bool operator==(OpCountLedger const &) const = default;
};

std::string to_string(OpCountLedger const &ledger);

/**
 * Delegates every operation to `Base` and tallies it. Values are untouched,
 * so anything computed under Counted<P> is identical to the same computation
 * under P.
 */
template <ScalarProfile Base>
class Counted
{
public:
  using value_type = typename Base::value_type;

  Counted() = default;
  explicit Counted(Base base) : _base(std::move(base)) {}

  value_type add(value_type const &a, value_type const &b)
  {
    ++_ledger.addsub;
    return _base.add(a, b);
  }
  value_type sub(value_type const &a, value_type const &b)
  {
    ++_ledger.addsub;
    return _base.sub(a, b);
  }
  value_type mul(value_type const &a, value_type const &b)
  {
    ++_ledger.mul;
    return _base.mul(a, b);
  }
  value_type square(value_type const &a)
  {
    ++_ledger.square;
    return _base.square(a);
  }
  value_type twice(value_type const &a)
  {
    ++_ledger.twice;
    return _base.twice(a);
  }
  value_type halve(value_type const &a)
  {
    ++_ledger.halve;
    return _base.halve(a);
  }
  value_type zero() { return _base.zero(); }
  value_type one() { return _base.one(); }

  OpCountLedger const &ledger() const { return _ledger; }
  void reset() { _ledger = {}; }
  Base &base() { return _base; }

private:
  Base _base{};
  OpCountLedger _ledger{};
};

template <ScalarProfile Base>
Counted<Base> counted(Base base)
{
  return Counted<Base>(std::move(base));
}

} // namespace quatrot
