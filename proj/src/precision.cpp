/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/logan.hpp>
#include <quatrot/precision.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quatrot
{
std::string_view to_string(KernelKind k) { return k == KernelKind::direct ? "direct" : "logan"; }

std::optional<KernelKind> parse_kernel_kind(std::string_view text)
{
  if (text == "direct")
    return KernelKind::direct;
  if (text == "logan")
    return KernelKind::logan;
  return std::nullopt;
}

Quaternion<double> UnitQuaternionSampler::next()
{
  for (;;)
  {
    Quaternion<double> const q{_normal(_rng), _normal(_rng), _normal(_rng), _normal(_rng)};
    double const n2 = q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
    if (n2 > 1e-300 && std::isfinite(n2))
      return normalize(q);
  }
}

ErrorRow max_error(KernelKind kernel, FixedPointFormat const &fmt, std::size_t samples, std::uint64_t seed)
{
  if (samples == 0)
    throw std::invalid_argument("sample count must be at least 1");

  ErrorRow row;
  row.format = fmt;
  row.kernel = kernel;
  row.samples = samples;

  UnitQuaternionSampler sampler(seed);
  FixedProfile fx(fmt);
  F64Profile f64;
  double error_sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s)
  {
    auto const q = sampler.next();
    Quaternion<Fixed> const fq{fx.quantize(q.q0), fx.quantize(q.q1), fx.quantize(q.q2), fx.quantize(q.q3)};
    Quaternion<double> const qq{fx.to_double(fq.q0), fx.to_double(fq.q1), fx.to_double(fq.q2),
                                fx.to_double(fq.q3)};

    auto const got = kernel == KernelKind::direct ? rotmat_direct(fx, fq) : rotmat_logan(fx, fq);
    auto const reference = rotmat_direct(f64, qq);
    auto const original = rotmat_direct(f64, q);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
      {
        double const e = std::fabs(fx.to_double(got(i, j)) - reference(i, j));
        row.max_abs_error = std::max(row.max_abs_error, e);
        error_sum += e;
        row.max_input_quantization_error =
            std::max(row.max_input_quantization_error, std::fabs(reference(i, j) - original(i, j)));
      }
  }
  row.mean_abs_error = error_sum / (9.0 * static_cast<double>(samples));
  row.saturations = fx.saturations();
  return row;
}

void SweepConfig::validate() const
{
  if (sample_count < 1)
    throw std::invalid_argument("sample count must be at least 1");
  if (frac_bits.empty())
    throw std::invalid_argument("at least one fraction width is required");
  if (kernels.empty())
    throw std::invalid_argument("at least one kernel is required");
  for (auto const &fmt : formats())
    if (!fmt.valid())
      throw std::invalid_argument("invalid format " + fmt.to_string());
}

std::vector<FixedPointFormat> SweepConfig::formats() const
{
  std::vector<FixedPointFormat> out;
  for (int f : frac_bits)
  {
    FixedPointFormat fmt;
    fmt.frac_bits = f;
    fmt.total_bits = 1 + int_bits + f;
    out.push_back(fmt);
  }
  return out;
}

ErrorRow const *ErrorReport::find(int frac_bits, KernelKind kernel) const
{
  for (auto const &r : rows)
    if (r.format.frac_bits == frac_bits && r.kernel == kernel)
      return &r;
  return nullptr;
}

ErrorReport sweep(SweepConfig const &cfg)
{
  cfg.validate();

  std::vector<std::future<ErrorRow>> jobs;
  for (auto const &fmt : cfg.formats())
    for (auto kernel : cfg.kernels)
      jobs.push_back(std::async(std::launch::async, max_error, kernel, fmt, cfg.sample_count, cfg.seed));

  ErrorReport report;
  for (auto &job : jobs)
    report.rows.push_back(job.get());
  std::sort(report.rows.begin(), report.rows.end(), [](ErrorRow const &a, ErrorRow const &b) {
    return std::tie(a.format.frac_bits, a.format.total_bits, a.kernel) <
           std::tie(b.format.frac_bits, b.format.total_bits, b.kernel);
  });
  return report;
}

std::string render_csv(ErrorReport const &report)
{
  std::ostringstream out;
  out << "format,kernel,max_abs_error,mean_abs_error,saturations\n";
  out << std::setprecision(17);
  for (auto const &r : report.rows)
    out << r.format.to_string() << ',' << to_string(r.kernel) << ',' << r.max_abs_error << ','
        << r.mean_abs_error << ',' << r.saturations << '\n';
  return out.str();
}

std::string render_table(ErrorReport const &report)
{
  std::ostringstream out;
  out << std::left << std::setw(8) << "format" << std::setw(8) << "kernel" << std::right << std::setw(14)
      << "max_abs_err" << std::setw(14) << "mean_abs_err" << std::setw(12) << "max/ulp" << std::setw(13)
      << "saturations" << std::setw(14) << "input_q_err" << '\n';
  for (auto const &r : report.rows)
  {
    out << std::left << std::setw(8) << r.format.to_string() << std::setw(8) << to_string(r.kernel)
        << std::right << std::scientific << std::setprecision(4) << std::setw(14) << r.max_abs_error
        << std::setw(14) << r.mean_abs_error << std::fixed << std::setprecision(3) << std::setw(12)
        << r.max_abs_error / r.format.ulp() << std::setw(13) << r.saturations << std::scientific
        << std::setprecision(4) << std::setw(14) << r.max_input_quantization_error << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

} // namespace quatrot
