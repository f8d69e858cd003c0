/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char **argv)
{
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  try
  {
    return quatrot::cli::run(args, std::cin, std::cout, std::cerr);
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return quatrot::cli::exit_usage;
  }
}
