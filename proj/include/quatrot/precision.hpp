/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/fixed_point.hpp>
#include <quatrot/quaternion.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace quatrot
{
enum class KernelKind
{
  direct,
  logan
};

std::string_view to_string(KernelKind k);
std::optional<KernelKind> parse_kernel_kind(std::string_view text);

/// Uniform on the unit 3-sphere: four standard normals, normalized.
/// Deterministic for a given seed.
class UnitQuaternionSampler
{
public:
  explicit UnitQuaternionSampler(std::uint64_t seed) : _rng(seed) {}

  Quaternion<double> next();

private:
  std::mt19937_64 _rng;
  std::normal_distribution<double> _normal{0.0, 1.0};
};

struct ErrorRow
{
  FixedPointFormat format;
  KernelKind kernel = KernelKind::direct;
  std::size_t samples = 0;
  /// Fixed-point kernel vs binary64 direct kernel on the quantized inputs.
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  std::uint64_t saturations = 0;
  /// binary64 result on quantized vs original inputs; reported apart from
  /// the arithmetic error above.
  double max_input_quantization_error = 0.0;
};

ErrorRow max_error(KernelKind kernel, FixedPointFormat const &fmt, std::size_t samples, std::uint64_t seed);

struct SweepConfig
{
  std::vector<int> frac_bits{8, 12, 16, 20};
  int int_bits = 3;
  std::size_t sample_count = 10000;
  std::uint64_t seed = 1;
  std::vector<KernelKind> kernels{KernelKind::direct, KernelKind::logan};

  /// Throws std::invalid_argument for an empty or invalid configuration.
  void validate() const;
  std::vector<FixedPointFormat> formats() const;
};

struct ErrorReport
{
  /// Sorted by (frac_bits, kernel).
  std::vector<ErrorRow> rows;

  ErrorRow const *find(int frac_bits, KernelKind kernel) const;
};

/// Rows are computed concurrently; the report is independent of scheduling.
ErrorReport sweep(SweepConfig const &cfg);

/// format,kernel,max_abs_error,mean_abs_error,saturations
std::string render_csv(ErrorReport const &report);
std::string render_table(ErrorReport const &report);

} // namespace quatrot
