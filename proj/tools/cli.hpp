/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/fixed_point.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatrot::cli
{
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Environment variable consulted when --profile is not given.
inline constexpr char const *default_profile_env = "QUATROT_DEFAULT_PROFILE";

struct ProfileSpec
{
  enum class Kind
  {
    f64,
    rational,
    fixed
  } kind = Kind::f64;
  FixedPointFormat format;

  std::string to_string() const;
};

/// "f64", "rational", "fixed" (Q3.12) or "fixed:Q<i>.<f>".
std::optional<ProfileSpec> parse_profile(std::string_view text);

/// Shortest decimal that reads back to the same double; -0 prints as "0".
std::string format_double(double value);

/// One input quaternion as its four decimal component strings.
struct InputRecord
{
  std::size_t line = 0;
  std::array<std::string, 4> q;
};

/// Reads "q0,q1,q2,q3" or {"q":[q0,q1,q2,q3]} per line; blank lines and
/// lines starting with '#' are skipped. Throws std::invalid_argument with a
/// "line N: ..." message.
std::vector<InputRecord> read_records(std::istream &in);

/// Runs one command line (without the program name). Returns the exit code.
int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace quatrot::cli
