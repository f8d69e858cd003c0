/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace quatrot
{
enum class OverflowMode
{
  saturate,
  wrap
};

/**
 * Two's-complement Q-format: one sign bit, total_bits - 1 - frac_bits integer
 * bits and frac_bits fraction bits. Results round to nearest, ties to even.
 *
 * total_bits is capped at 32 so that the exact double-width product of two
 * raw values always fits in 64 bits.
 */
struct FixedPointFormat
{
  static constexpr int max_total_bits = 32;

  int total_bits = 16;
  int frac_bits = 12;
  OverflowMode overflow = OverflowMode::saturate;

  int int_bits() const { return total_bits - 1 - frac_bits; }
  bool valid() const;
  std::int64_t max_raw() const;
  std::int64_t min_raw() const;
  double max_value() const;
  double min_value() const;
  double ulp() const;

  /// "Q3.12"
  std::string to_string() const;
  /// Parses "Q<int>.<frac>"; throws std::invalid_argument.
  static FixedPointFormat parse(std::string_view text);

  bool operator==(FixedPointFormat const &) const = default;
};

struct Fixed
{
  std::int64_t raw = 0;

  bool operator==(Fixed const &) const = default;
};

struct FixedResult
{
  Fixed value;
  bool saturated = false;
};

/// Nearest representable value (ties to even); saturates outside the range.
/// NaN throws std::invalid_argument.
FixedResult fx_quantize(double x, FixedPointFormat const &fmt);
double fx_to_double(Fixed a, FixedPointFormat const &fmt);

FixedResult fx_add(Fixed a, Fixed b, FixedPointFormat const &fmt);
FixedResult fx_sub(Fixed a, Fixed b, FixedPointFormat const &fmt);
FixedResult fx_mul(Fixed a, Fixed b, FixedPointFormat const &fmt);
FixedResult fx_square(Fixed a, FixedPointFormat const &fmt);
FixedResult fx_twice(Fixed a, FixedPointFormat const &fmt);
FixedResult fx_halve(Fixed a, FixedPointFormat const &fmt);

/// Arithmetic right shift of an exact wide value with round-half-to-even.
std::int64_t shift_right_rne(std::int64_t wide, int shift);

/**
 * Bit-true fixed-point profile. Every operation forms the exact wide result
 * and requantizes it into `format`. Overflow events are tallied in
 * `saturations` (in wrap mode they count wraparounds).
 */
class FixedProfile
{
public:
  using value_type = Fixed;

  explicit FixedProfile(FixedPointFormat fmt);

  Fixed add(Fixed a, Fixed b) { return track(fx_add(a, b, _fmt)); }
  Fixed sub(Fixed a, Fixed b) { return track(fx_sub(a, b, _fmt)); }
  Fixed mul(Fixed a, Fixed b) { return track(fx_mul(a, b, _fmt)); }
  Fixed square(Fixed a) { return track(fx_square(a, _fmt)); }
  Fixed twice(Fixed a) { return track(fx_twice(a, _fmt)); }
  Fixed halve(Fixed a) { return track(fx_halve(a, _fmt)); }
  Fixed zero() const { return Fixed{0}; }
  Fixed one() { return quantize(1.0); }

  Fixed quantize(double x) { return track(fx_quantize(x, _fmt)); }
  double to_double(Fixed a) const { return fx_to_double(a, _fmt); }

  FixedPointFormat const &format() const { return _fmt; }
  std::uint64_t saturations() const { return _saturations; }
  void reset_saturations() { _saturations = 0; }

private:
  Fixed track(FixedResult r)
  {
    if (r.saturated)
      ++_saturations;
    return r.value;
  }

  FixedPointFormat _fmt;
  std::uint64_t _saturations = 0;
};

} // namespace quatrot
