/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/scalar.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace quatrot
{
Rational parse_decimal_exact(std::string_view text)
{
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a finite decimal number: '" +
                                std::string(text) + "'");
  };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-'))
    negative = text[i++] == '-';

  boost::multiprecision::cpp_int mantissa = 0;
  long long scale = 0;
  std::size_t digits = 0;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, ++digits)
    mantissa = mantissa * 10 + (text[i] - '0');
  if (i < text.size() && text[i] == '.')
  {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, ++digits)
    {
      mantissa = mantissa * 10 + (text[i] - '0');
      --scale;
    }
  }
  if (digits == 0)
    return fail();

  if (i < text.size() && (text[i] == 'e' || text[i] == 'E'))
  {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
      exp_negative = text[i++] == '-';
    long long exponent = 0;
    std::size_t exp_digits = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, ++exp_digits)
    {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 4000)
        return fail();
    }
    if (exp_digits == 0)
      return fail();
    scale += exp_negative ? -exponent : exponent;
  }
  if (i != text.size())
    return fail();

  boost::multiprecision::cpp_int const power =
      boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                 static_cast<unsigned>(scale < 0 ? -scale : scale));
  Rational value = scale < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
  return negative ? Rational(-value) : value;
}

std::string to_string(Rational const &value)
{
  return value.str();
}

std::string to_string(OpCountLedger const &ledger)
{
  std::ostringstream out;
  out << "{mul:" << ledger.mul << ", square:" << ledger.square
      << ", addsub:" << ledger.addsub << ", double:" << ledger.twice
      << ", halve:" << ledger.halve << "}";
  return out.str();
}

} // namespace quatrot
