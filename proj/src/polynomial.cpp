/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/polynomial.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quatrot
{
Polynomial4::Polynomial4(Rational constant)
{
  accumulate({0, 0, 0, 0}, constant);
}

Polynomial4 Polynomial4::variable(int index)
{
  if (index < 0 || index > 3)
    throw std::out_of_range("quaternion coefficient index must be 0..3");
  Exponents e{0, 0, 0, 0};
  e[index] = 1;
  return monomial(Rational(1), e);
}

Polynomial4 Polynomial4::monomial(Rational coefficient, Exponents exponents)
{
  for (auto x : exponents)
    if (x > max_exponent)
      throw std::domain_error("exponent exceeds the supported bound");
  Polynomial4 p;
  p.accumulate(exponents, coefficient);
  return p;
}

void Polynomial4::accumulate(Exponents const &e, Rational const &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = _terms.try_emplace(e, c);
  if (!inserted)
  {
    it->second += c;
    if (it->second == 0)
      _terms.erase(it);
  }
}

int Polynomial4::degree() const
{
  int best = -1;
  for (auto const &[e, c] : _terms)
    best = std::max(best, e[0] + e[1] + e[2] + e[3]);
  return best;
}

Rational Polynomial4::coefficient(Exponents const &exponents) const
{
  auto it = _terms.find(exponents);
  return it == _terms.end() ? Rational(0) : it->second;
}

Rational Polynomial4::evaluate(std::array<Rational, 4> const &values) const
{
  Rational sum = 0;
  for (auto const &[e, c] : _terms)
  {
    Rational term = c;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[v]; ++k)
        term *= values[v];
    sum += term;
  }
  return sum;
}

std::string Polynomial4::to_string() const
{
  if (_terms.empty())
    return "0";

  std::ostringstream out;
  bool first = true;
  for (auto const &[e, c] : _terms)
  {
    bool const negative = c < 0;
    Rational const magnitude = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    bool const constant = e == Exponents{0, 0, 0, 0};
    bool need_star = false;
    if (magnitude != 1 || constant)
    {
      out << quatrot::to_string(magnitude);
      need_star = true;
    }
    for (int v = 0; v < 4; ++v)
    {
      if (e[v] == 0)
        continue;
      out << (need_star ? "*" : "") << "q" << v;
      if (e[v] > 1)
        out << "^" << int(e[v]);
      need_star = true;
    }
  }
  return out.str();
}

Polynomial4 Polynomial4::operator-() const
{
  Polynomial4 r = *this;
  for (auto &[e, c] : r._terms)
    c = -c;
  return r;
}

Polynomial4 operator+(Polynomial4 const &a, Polynomial4 const &b)
{
  Polynomial4 r = a;
  for (auto const &[e, c] : b._terms)
    r.accumulate(e, c);
  return r;
}

Polynomial4 operator-(Polynomial4 const &a, Polynomial4 const &b)
{
  Polynomial4 r = a;
  for (auto const &[e, c] : b._terms)
    r.accumulate(e, -c);
  return r;
}

Polynomial4 operator*(Polynomial4 const &a, Polynomial4 const &b)
{
  Polynomial4 r;
  for (auto const &[ea, ca] : a._terms)
    for (auto const &[eb, cb] : b._terms)
    {
      Polynomial4::Exponents e{};
      for (int v = 0; v < 4; ++v)
      {
        int const x = ea[v] + eb[v];
        if (x > Polynomial4::max_exponent)
          throw std::domain_error("product exceeds the supported exponent bound");
        e[v] = static_cast<std::uint8_t>(x);
      }
      r.accumulate(e, ca * cb);
    }
  return r;
}

Polynomial4 poly_add(Polynomial4 const &p, Polynomial4 const &r) { return p + r; }
Polynomial4 poly_sub(Polynomial4 const &p, Polynomial4 const &r) { return p - r; }
Polynomial4 poly_mul(Polynomial4 const &p, Polynomial4 const &r) { return p * r; }

} // namespace quatrot
