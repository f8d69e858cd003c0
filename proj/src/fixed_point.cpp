/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/fixed_point.hpp>

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace quatrot
{
namespace
{
FixedResult fit(std::int64_t raw, FixedPointFormat const &fmt)
{
  std::int64_t const hi = fmt.max_raw();
  std::int64_t const lo = fmt.min_raw();
  if (raw >= lo && raw <= hi)
    return {Fixed{raw}, false};

  if (fmt.overflow == OverflowMode::saturate)
    return {Fixed{raw > hi ? hi : lo}, true};

  // Two's-complement wraparound into total_bits.
  std::uint64_t const modulus = std::uint64_t{1} << fmt.total_bits;
  std::uint64_t bits = static_cast<std::uint64_t>(raw) & (modulus - 1);
  std::int64_t wrapped = static_cast<std::int64_t>(bits);
  if (wrapped > hi)
    wrapped -= static_cast<std::int64_t>(modulus);
  return {Fixed{wrapped}, true};
}

void require_valid(FixedPointFormat const &fmt)
{
  if (!fmt.valid())
    throw std::invalid_argument("invalid fixed-point format " +
                                fmt.to_string());
}
} // namespace

bool FixedPointFormat::valid() const
{
  return total_bits >= 1 && total_bits <= max_total_bits && frac_bits >= 0 &&
         frac_bits <= total_bits - 1;
}

std::int64_t FixedPointFormat::max_raw() const
{
  return (std::int64_t{1} << (total_bits - 1)) - 1;
}

std::int64_t FixedPointFormat::min_raw() const
{
  return -(std::int64_t{1} << (total_bits - 1));
}

double FixedPointFormat::max_value() const
{
  return std::ldexp(static_cast<double>(max_raw()), -frac_bits);
}

double FixedPointFormat::min_value() const
{
  return std::ldexp(static_cast<double>(min_raw()), -frac_bits);
}

double FixedPointFormat::ulp() const { return std::ldexp(1.0, -frac_bits); }

std::string FixedPointFormat::to_string() const
{
  return "Q" + std::to_string(int_bits()) + "." + std::to_string(frac_bits);
}

FixedPointFormat FixedPointFormat::parse(std::string_view text)
{
  auto fail = [&]() -> FixedPointFormat {
    throw std::invalid_argument("malformed fixed-point format '" +
                                std::string(text) + "', expected Q<int>.<frac>");
  };
  if (text.size() < 4 || (text[0] != 'Q' && text[0] != 'q'))
    return fail();
  auto const dot = text.find('.');
  if (dot == std::string_view::npos)
    return fail();

  int int_bits = -1;
  int frac_bits = -1;
  auto const *first = text.data() + 1;
  auto const *mid = text.data() + dot;
  auto const *last = text.data() + text.size();
  auto r1 = std::from_chars(first, mid, int_bits);
  if (r1.ec != std::errc{} || r1.ptr != mid || int_bits < 0)
    return fail();
  auto r2 = std::from_chars(mid + 1, last, frac_bits);
  if (r2.ec != std::errc{} || r2.ptr != last || frac_bits < 0)
    return fail();

  FixedPointFormat fmt;
  fmt.total_bits = 1 + int_bits + frac_bits;
  fmt.frac_bits = frac_bits;
  if (!fmt.valid())
    throw std::invalid_argument("fixed-point format '" + std::string(text) +
                                "' exceeds " + std::to_string(max_total_bits) +
                                " bits");
  return fmt;
}

std::int64_t shift_right_rne(std::int64_t wide, int shift)
{
  if (shift <= 0)
    return wide;
  std::int64_t const floor_q = wide >> shift; // arithmetic: floor division
  std::int64_t const rem = wide - (floor_q << shift);
  std::int64_t const half = std::int64_t{1} << (shift - 1);
  if (rem > half || (rem == half && (floor_q & 1) != 0))
    return floor_q + 1;
  return floor_q;
}

FixedResult fx_quantize(double x, FixedPointFormat const &fmt)
{
  require_valid(fmt);
  if (std::isnan(x))
    throw std::invalid_argument("cannot quantize NaN");

  double const scaled = std::ldexp(x, fmt.frac_bits);
  double const limit = std::ldexp(1.0, 62);
  if (std::isinf(scaled) || std::fabs(scaled) >= limit)
  {
    if (fmt.overflow == OverflowMode::saturate)
      return {Fixed{scaled > 0 ? fmt.max_raw() : fmt.min_raw()}, true};
    double const modulus = std::ldexp(1.0, fmt.total_bits);
    double const reduced = std::isinf(scaled) ? 0.0 : std::fmod(scaled, modulus);
    return {fit(static_cast<std::int64_t>(reduced), fmt).value, true};
  }

  // Explicit ties-to-even so the result never depends on the FP environment.
  double const fl = std::floor(scaled);
  double const diff = scaled - fl;
  auto raw = static_cast<std::int64_t>(fl);
  if (diff > 0.5 || (diff == 0.5 && (raw & 1) != 0))
    ++raw;
  return fit(raw, fmt);
}

double fx_to_double(Fixed a, FixedPointFormat const &fmt)
{
  return std::ldexp(static_cast<double>(a.raw), -fmt.frac_bits);
}

FixedResult fx_add(Fixed a, Fixed b, FixedPointFormat const &fmt)
{
  return fit(a.raw + b.raw, fmt);
}

FixedResult fx_sub(Fixed a, Fixed b, FixedPointFormat const &fmt)
{
  return fit(a.raw - b.raw, fmt);
}

FixedResult fx_mul(Fixed a, Fixed b, FixedPointFormat const &fmt)
{
  return fit(shift_right_rne(a.raw * b.raw, fmt.frac_bits), fmt);
}

FixedResult fx_square(Fixed a, FixedPointFormat const &fmt)
{
  return fit(shift_right_rne(a.raw * a.raw, fmt.frac_bits), fmt);
}

FixedResult fx_twice(Fixed a, FixedPointFormat const &fmt)
{
  return fit(a.raw * 2, fmt);
}

FixedResult fx_halve(Fixed a, FixedPointFormat const &fmt)
{
  return fit(shift_right_rne(a.raw, 1), fmt);
}

FixedProfile::FixedProfile(FixedPointFormat fmt) : _fmt(fmt)
{
  require_valid(_fmt);
}

} // namespace quatrot
