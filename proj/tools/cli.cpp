/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli.hpp"

#include <quatrot/datapath.hpp>
#include <quatrot/logan.hpp>
#include <quatrot/precision.hpp>
#include <quatrot/symbolic.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace quatrot::cli
{
namespace
{
std::string trim(std::string_view s)
{
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto const e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void line_error(std::size_t line, std::string const &what)
{
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

double parse_finite(std::string const &text, std::size_t line)
{
  double v = 0.0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    line_error(line, "'" + text + "' is not a finite decimal number");
  return v;
}

std::string number_text(nlohmann::json const &v)
{
  if (v.is_number_integer())
    return v.dump();
  return format_double(v.get<double>());
}

// ---- convert ---------------------------------------------------------------

struct ConvertOptions
{
  std::string method = "direct";
  std::string profile;
  std::string input = "-";
  std::string format = "csv";
  bool normalize = false;
};

template <ScalarProfile P>
RotationMatrix3<typename P::value_type> run_kernel(std::string const &method, P &p,
                                                   Quaternion<typename P::value_type> const &q)
{
  return method == "logan" ? rotmat_logan(p, q) : rotmat_direct(p, q);
}

Quaternion<double> to_double_quaternion(InputRecord const &r, bool normalize_it)
{
  Quaternion<double> q{parse_finite(r.q[0], r.line), parse_finite(r.q[1], r.line), parse_finite(r.q[2], r.line),
                       parse_finite(r.q[3], r.line)};
  if (normalize_it)
  {
    try
    {
      q = normalize(q);
    }
    catch (std::domain_error const &)
    {
      line_error(r.line, "cannot normalize a zero quaternion");
    }
  }
  return q;
}

using Row = std::array<std::string, 9>;

template <typename T, typename Fmt>
Row render_row(RotationMatrix3<T> const &m, Fmt fmt)
{
  Row row;
  for (std::size_t k = 0; k < 9; ++k)
    row[k] = fmt(m(k / 3, k % 3));
  return row;
}

void write_row(std::ostream &out, Row const &row, std::string const &format)
{
  if (format == "csv")
  {
    for (std::size_t k = 0; k < 9; ++k)
      out << (k ? "," : "") << row[k];
    out << '\n';
    return;
  }
  // Fractions are not JSON numbers, so they travel as strings.
  auto cell = [](std::string const &v) { return v.find('/') == std::string::npos ? v : '"' + v + '"'; };
  out << "{\"matrix\":[";
  for (std::size_t i = 0; i < 3; ++i)
  {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < 3; ++j)
      out << (j ? "," : "") << cell(row[3 * i + j]);
    out << ']';
  }
  out << "]}\n";
}

int cmd_convert(ConvertOptions const &o, std::istream &in, std::ostream &out, std::ostream &err)
{
  std::string profile_text = o.profile;
  if (profile_text.empty())
  {
    char const *env = std::getenv(default_profile_env);
    profile_text = env && *env ? env : "f64";
  }
  auto const profile = parse_profile(profile_text);
  if (!profile)
  {
    err << "error: unknown profile '" << profile_text << "' (expected f64, rational or fixed:Q<i>.<f>)\n";
    return exit_usage;
  }
  if (o.normalize && profile->kind == ProfileSpec::Kind::rational)
  {
    err << "error: --normalize needs a floating or fixed-point profile; rational inputs are used as given\n";
    return exit_usage;
  }

  std::vector<InputRecord> records;
  try
  {
    if (o.input == "-")
      records = read_records(in);
    else
    {
      std::ifstream file(o.input);
      if (!file)
      {
        err << "error: cannot open " << o.input << '\n';
        return exit_usage;
      }
      records = read_records(file);
    }
  }
  catch (std::invalid_argument const &e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  // Everything is converted before anything is written, so a bad record
  // never leaves a half-written stream behind.
  std::vector<Row> rows;
  rows.reserve(records.size());
  try
  {
    switch (profile->kind)
    {
    case ProfileSpec::Kind::f64: {
      F64Profile p;
      for (auto const &r : records)
        rows.push_back(render_row(run_kernel(o.method, p, to_double_quaternion(r, o.normalize)), format_double));
      break;
    }
    case ProfileSpec::Kind::rational: {
      RationalProfile p;
      for (auto const &r : records)
      {
        std::array<Rational, 4> q;
        for (std::size_t k = 0; k < 4; ++k)
        {
          try
          {
            q[k] = parse_decimal_exact(r.q[k]);
          }
          catch (std::invalid_argument const &)
          {
            line_error(r.line, "'" + r.q[k] + "' is not a finite decimal number");
          }
        }
        auto const m = run_kernel(o.method, p, Quaternion<Rational>{q[0], q[1], q[2], q[3]});
        rows.push_back(render_row(m, [](Rational const &v) { return to_string(v); }));
      }
      break;
    }
    case ProfileSpec::Kind::fixed: {
      FixedProfile p(profile->format);
      for (auto const &r : records)
      {
        auto const d = to_double_quaternion(r, o.normalize);
        Quaternion<Fixed> const q{p.quantize(d.q0), p.quantize(d.q1), p.quantize(d.q2), p.quantize(d.q3)};
        rows.push_back(
            render_row(run_kernel(o.method, p, q), [&](Fixed v) { return format_double(p.to_double(v)); }));
      }
      if (p.saturations() > 0)
        err << "warning: " << p.saturations() << " saturation events in " << profile->format.to_string() << '\n';
      break;
    }
    }
  }
  catch (std::invalid_argument const &e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  for (auto const &row : rows)
    write_row(out, row, o.format);
  return exit_ok;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions
{
  std::string assembly = "corrected";
  int grid_bound = 3;
  std::string format = "text";
};

int cmd_verify(VerifyOptions const &o, std::ostream &out, std::ostream &err)
{
  if (o.grid_bound < 0 || o.grid_bound > max_grid_bound)
  {
    err << "error: --grid-bound must be in 0.." << max_grid_bound << '\n';
    return exit_usage;
  }
  bool const corrected = o.assembly == "corrected";
  auto const report = verify_entrywise_identity(corrected ? corrected_poly_assembly() : uncorrected_poly_assembly());
  auto const grid =
      grid_equivalence(o.grid_bound, corrected ? corrected_rational_assembly() : uncorrected_rational_assembly());
  bool const pass = report.all_pass() && grid.pass();

  if (o.format == "json")
  {
    nlohmann::ordered_json doc;
    doc["assembly"] = o.assembly;
    auto entries = nlohmann::ordered_json::array();
    for (auto const &e : report.entries)
      entries.push_back({{"entry", e.entry}, {"pass", e.pass}, {"difference", e.difference.to_string()}});
    doc["entries"] = std::move(entries);
    doc["entries_passed"] = report.passed();
    nlohmann::ordered_json g;
    g["bound"] = grid.bound;
    g["cases"] = grid.cases;
    g["mismatches"] = grid.mismatches;
    if (grid.first_mismatch)
    {
      auto const &cx = *grid.first_mismatch;
      g["first_mismatch"] = {{"q", cx.q},
                             {"entry", cx.entry},
                             {"direct", to_string(cx.direct)},
                             {"candidate", to_string(cx.candidate)}};
    }
    doc["grid"] = std::move(g);
    doc["pass"] = pass;
    out << doc.dump(2) << '\n';
    return pass ? exit_ok : exit_verification_failed;
  }

  for (auto const &e : report.entries)
  {
    out << e.entry << (e.pass ? "  ok" : "  FAIL");
    if (!e.pass)
      out << "  difference: " << e.difference.to_string();
    out << '\n';
  }
  out << report.passed() << '/' << report.entries.size() << " entries are identities\n";
  out << "grid {-" << grid.bound << ".." << grid.bound << "}^4: " << grid.cases << " cases, " << grid.mismatches
      << " mismatches\n";
  if (grid.first_mismatch)
  {
    auto const &cx = *grid.first_mismatch;
    out << "first mismatch at q=(" << cx.q[0] << ',' << cx.q[1] << ',' << cx.q[2] << ',' << cx.q[3] << ") "
        << cx.entry << ": direct " << to_string(cx.direct) << ", candidate " << to_string(cx.candidate) << '\n';
  }
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? exit_ok : exit_verification_failed;
}

// ---- count -----------------------------------------------------------------

int cmd_count(std::string const &method, std::ostream &out)
{
  nlohmann::ordered_json doc;
  auto const l = method == "logan" ? op_census_logan() : op_census_direct();
  doc["mul"] = l.mul;
  doc["square"] = l.square;
  doc["addsub"] = l.addsub;
  doc["double"] = l.twice;
  if (method == "logan")
  {
    doc["claimed"] = {{"mul", 0}, {"square", logan_claimed_squares}, {"addsub_at_most", logan_claimed_addsub_bound},
                      {"double", 0}};
    doc["note"] = "claimed bound: " + std::to_string(logan_claimed_addsub_bound) + " additions; this assembly uses " +
                  std::to_string(l.addsub);
  }
  else
  {
    auto const c = direct_claimed_census;
    doc["claimed"] = {{"mul", c.mul}, {"square", c.square}, {"addsub", c.addsub}, {"double", c.twice}};
    doc["note"] = l == c ? "census matches the claimed figures" : "census differs from the claimed figures";
  }
  out << doc.dump() << '\n';
  return exit_ok;
}

// ---- netlist ---------------------------------------------------------------

int cmd_netlist(std::string const &method, std::string const &format, bool no_cse, std::ostream &out)
{
  bool const share = !no_cse;
  auto const g = method == "logan" ? build_logan_graph(share) : build_direct_graph(share);
  out << (format == "dot" ? emit_dot(g) : emit_netlist_json(g));
  return exit_ok;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions
{
  std::vector<int> frac_bits{8, 12, 16, 20};
  int int_bits = 3;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string kernel = "both";
  std::string format = "table";
};

int cmd_sweep(SweepOptions const &o, std::ostream &out, std::ostream &err)
{
  SweepConfig cfg;
  cfg.frac_bits = o.frac_bits;
  cfg.int_bits = o.int_bits;
  cfg.sample_count = o.samples;
  cfg.seed = o.seed;
  if (o.kernel != "both")
    cfg.kernels = {*parse_kernel_kind(o.kernel)};
  ErrorReport report;
  try
  {
    report = sweep(cfg);
  }
  catch (std::invalid_argument const &e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  out << (o.format == "csv" ? render_csv(report) : render_table(report));
  return exit_ok;
}

// ---- bench -----------------------------------------------------------------

template <typename Fn>
double median_ns_per_call(std::size_t n, int repeats, Fn fn)
{
  std::vector<double> runs;
  for (int r = 0; r < repeats; ++r)
  {
    auto const t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    auto const t1 = std::chrono::steady_clock::now();
    runs.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(n));
  }
  std::sort(runs.begin(), runs.end());
  auto const m = runs.size() / 2;
  return runs.size() % 2 ? runs[m] : 0.5 * (runs[m - 1] + runs[m]);
}

int cmd_bench(std::size_t samples, int repeats, std::ostream &out, std::ostream &err)
{
  if (samples < 1 || repeats < 1)
  {
    err << "error: --samples and --repeats must be at least 1\n";
    return exit_usage;
  }
  UnitQuaternionSampler sampler(1);
  std::vector<Quaternion<double>> qs(samples);
  for (auto &q : qs)
    q = sampler.next();
  FixedProfile fx(FixedPointFormat::parse("Q3.12"));
  std::vector<Quaternion<Fixed>> fqs;
  fqs.reserve(samples);
  for (auto const &q : qs)
    fqs.push_back({fx.quantize(q.q0), fx.quantize(q.q1), fx.quantize(q.q2), fx.quantize(q.q3)});

  F64Profile f;
  double sink = 0.0;
  std::int64_t fsink = 0;
  struct Line
  {
    std::string method;
    std::string profile;
    double ns;
  };
  std::vector<Line> lines;
  for (std::string const method : {"direct", "logan"})
  {
    lines.push_back({method, "f64", median_ns_per_call(samples, repeats, [&](std::size_t i) {
                       sink += run_kernel(method, f, qs[i])(2, 1);
                     })});
    lines.push_back({method, "fixed:Q3.12", median_ns_per_call(samples, repeats, [&](std::size_t i) {
                       fsink += run_kernel(method, fx, fqs[i])(2, 1).raw;
                     })});
  }

  out << std::left << std::setw(8) << "method" << std::setw(14) << "profile" << std::right << std::setw(12)
      << "median_ns" << std::setw(16) << "conversions/s" << '\n';
  for (auto const &l : lines)
    out << std::left << std::setw(8) << l.method << std::setw(14) << l.profile << std::right << std::fixed
        << std::setprecision(1) << std::setw(12) << l.ns << std::setw(16) << std::setprecision(0) << 1e9 / l.ns
        << '\n';
  out.unsetf(std::ios::floatfield);
  out << "samples " << samples << ", median of " << repeats << " runs (checksum " << format_double(sink) << ' '
      << fsink << ")\n";
  out << "caveat: software timings on a general-purpose CPU say nothing about squarer versus multiplier cost in "
         "hardware.\n";
  return exit_ok;
}
} // namespace

std::string ProfileSpec::to_string() const
{
  switch (kind)
  {
  case Kind::f64:
    return "f64";
  case Kind::rational:
    return "rational";
  case Kind::fixed:
    break;
  }
  return "fixed:" + format.to_string();
}

std::optional<ProfileSpec> parse_profile(std::string_view text)
{
  ProfileSpec p;
  if (text == "f64")
    return p;
  if (text == "rational")
  {
    p.kind = ProfileSpec::Kind::rational;
    return p;
  }
  if (text == "fixed")
  {
    p.kind = ProfileSpec::Kind::fixed;
    return p;
  }
  if (text.rfind("fixed:", 0) == 0)
  {
    try
    {
      p.kind = ProfileSpec::Kind::fixed;
      p.format = FixedPointFormat::parse(text.substr(6));
      return p;
    }
    catch (std::invalid_argument const &)
    {
    }
  }
  return std::nullopt;
}

std::string format_double(double value)
{
  if (value == 0.0)
    return "0";
  char buf[32];
  auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

std::vector<InputRecord> read_records(std::istream &in)
{
  std::vector<InputRecord> records;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    auto const text = trim(raw);
    if (text.empty() || text[0] == '#')
      continue;

    InputRecord r;
    r.line = line;
    if (text[0] == '{')
    {
      nlohmann::json doc;
      try
      {
        doc = nlohmann::json::parse(text);
      }
      catch (nlohmann::json::parse_error const &)
      {
        line_error(line, "malformed JSON");
      }
      auto const it = doc.find("q");
      if (it == doc.end() || !it->is_array() || it->size() != 4)
        line_error(line, "expected {\"q\":[q0,q1,q2,q3]}");
      for (std::size_t k = 0; k < 4; ++k)
      {
        if (!(*it)[k].is_number())
          line_error(line, "component " + std::to_string(k) + " is not a number");
        r.q[k] = number_text((*it)[k]);
      }
    }
    else
    {
      std::vector<std::string> fields;
      std::stringstream ss(text);
      std::string field;
      while (std::getline(ss, field, ','))
        fields.push_back(trim(field));
      if (text.back() == ',')
        fields.emplace_back();
      if (fields.size() != 4)
        line_error(line, "expected 4 comma-separated values, got " + std::to_string(fields.size()));
      for (std::size_t k = 0; k < 4; ++k)
      {
        if (fields[k].empty())
          line_error(line, "component " + std::to_string(k) + " is empty");
        r.q[k] = fields[k];
      }
    }
    // Components must be finite decimals whatever the profile.
    for (auto const &c : r.q)
      parse_finite(c, line);
    records.push_back(std::move(r));
  }
  return records;
}

int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Quaternion to rotation matrix conversion with a squaring-only kernel", "quatrot"};
  app.require_subcommand(1);
  auto const methods = CLI::IsMember({"direct", "logan"});

  ConvertOptions convert;
  auto *c = app.add_subcommand("convert", "Convert quaternions to row-major rotation matrices");
  c->add_option("--method", convert.method, "direct or logan")->check(methods)->capture_default_str();
  c->add_option("--profile", convert.profile,
                std::string("f64, rational or fixed:Q<i>.<f>; defaults to $") + default_profile_env + " or f64");
  c->add_option("--input", convert.input, "input file, - for stdin")->capture_default_str();
  c->add_option("--format", convert.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  c->add_flag("--normalize", convert.normalize, "scale each input to unit norm first");

  VerifyOptions verify;
  auto *v = app.add_subcommand("verify", "Prove the squaring kernel entrywise and check it on an integer grid");
  v->add_option("--assembly", verify.assembly, "corrected or uncorrected")
      ->check(CLI::IsMember({"corrected", "uncorrected"}))
      ->capture_default_str();
  v->add_option("--grid-bound", verify.grid_bound, "check every q in {-N..N}^4")->capture_default_str();
  v->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string count_method = "direct";
  auto *k = app.add_subcommand("count", "Operation census of a kernel, as JSON");
  k->add_option("--method", count_method, "direct or logan")->check(methods)->capture_default_str();

  std::string net_method = "logan";
  std::string net_out = "json";
  bool no_cse = false;
  auto *n = app.add_subcommand("netlist", "Emit the kernel datapath");
  n->add_option("--method", net_method, "direct or logan")->check(methods)->capture_default_str();
  n->add_option("--out", net_out, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  n->add_flag("--no-cse", no_cse, "emit the naive tree expansion");

  SweepOptions sw;
  auto *s = app.add_subcommand("sweep", "Fixed-point error of both kernels across Q3.f formats");
  s->add_option("--frac-bits", sw.frac_bits, "comma-separated fraction widths")->delimiter(',')->capture_default_str();
  s->add_option("--int-bits", sw.int_bits, "integer bits per format")->capture_default_str();
  s->add_option("--samples", sw.samples, "quaternions per row")->capture_default_str();
  s->add_option("--seed", sw.seed, "sampler seed")->capture_default_str();
  s->add_option("--kernel", sw.kernel, "direct, logan or both")
      ->check(CLI::IsMember({"direct", "logan", "both"}))
      ->capture_default_str();
  s->add_option("--format", sw.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  std::size_t bench_samples = 200000;
  int bench_repeats = 5;
  auto *b = app.add_subcommand("bench", "Software timing of both kernels");
  b->add_option("--samples", bench_samples, "conversions per run")->capture_default_str();
  b->add_option("--repeats", bench_repeats, "runs; the median is reported")->capture_default_str();

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (c->parsed())
    return cmd_convert(convert, in, out, err);
  if (v->parsed())
    return cmd_verify(verify, out, err);
  if (k->parsed())
    return cmd_count(count_method, out);
  if (n->parsed())
    return cmd_netlist(net_method, net_out, no_cse, out);
  if (s->parsed())
    return cmd_sweep(sw, out, err);
  return cmd_bench(bench_samples, bench_repeats, out, err);
}

} // namespace quatrot::cli
