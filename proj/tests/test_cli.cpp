/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include "cli.hpp"

#include <quatrot/datapath.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace quatrot;

namespace
{
struct Result
{
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::string const &input = {})
{
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(std::string const &text)
{
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    lines.push_back(line);
  return lines;
}
} // namespace

TEST_CASE("profile parsing and number formatting")
{
  CHECK(cli::parse_profile("f64")->kind == cli::ProfileSpec::Kind::f64);
  CHECK(cli::parse_profile("rational")->kind == cli::ProfileSpec::Kind::rational);
  auto const fx = cli::parse_profile("fixed:Q2.20");
  REQUIRE(fx.has_value());
  CHECK(fx->format.total_bits == 23);
  CHECK(fx->to_string() == "fixed:Q2.20");
  CHECK(cli::parse_profile("fixed")->format.to_string() == "Q3.12");
  CHECK_FALSE(cli::parse_profile("fixed:Q40.40").has_value());
  CHECK_FALSE(cli::parse_profile("float").has_value());

  CHECK(cli::format_double(1.0) == "1");
  CHECK(cli::format_double(-0.0) == "0");
  CHECK(cli::format_double(0.1) == "0.1");
  CHECK(cli::format_double(-2.5e-7) == "-2.5e-07");
  for (double v : {1.0 / 3.0, 0.7071067811865476, -1e-300, 123456.789})
    CHECK(std::stod(cli::format_double(v)) == v);
}

TEST_CASE("input records")
{
  std::istringstream in("# header\n1, 2 ,3,4\n\n{\"q\":[0.5,-1,2e-3,7]}\n");
  auto const records = cli::read_records(in);
  REQUIRE(records.size() == 2);
  CHECK(records[0].line == 2);
  CHECK(records[0].q[1] == "2");
  CHECK(records[1].line == 4);
  CHECK(records[1].q[0] == "0.5");
  CHECK(records[1].q[1] == "-1");
  CHECK(records[1].q[2] == "0.002");

  auto error_for = [](std::string const &text) {
    std::istringstream bad(text);
    try
    {
      cli::read_records(bad);
    }
    catch (std::invalid_argument const &e)
    {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_for("1,0,0,0\n1,2,3\n") == "line 2: expected 4 comma-separated values, got 3");
  CHECK(error_for("1,0,0,0,\n") == "line 1: expected 4 comma-separated values, got 5");
  CHECK(error_for("1,0,,0\n").find("line 1: component 2 is empty") == 0);
  CHECK(error_for("1,x,0,0\n").find("line 1: 'x'") == 0);
  CHECK(error_for("\n\nnan,0,0,0\n").find("line 3:") == 0);
  CHECK(error_for("inf,0,0,0\n").find("not a finite") != std::string::npos);
  CHECK(error_for("1e400,0,0,0\n").find("not a finite") != std::string::npos);
  CHECK(error_for("{\"q\":[1,2,3]}\n").find("line 1: expected") == 0);
  CHECK(error_for("{\"q\":[1,2,3,\"4\"]}\n").find("component 3") != std::string::npos);
  CHECK(error_for("{\"q\":[1,2\n").find("malformed JSON") != std::string::npos);
}

TEST_CASE("convert")
{
  auto r = run({"convert", "--method", "logan"}, "1,0,0,0\n");
  CHECK(r.code == 0);
  CHECK(r.out == "1,0,0,0,1,0,0,0,1\n");

  r = run({"convert", "--method", "direct", "--profile", "rational"}, "1,2,3,4\n");
  CHECK(r.out == "-20,4,22,20,-10,20,10,28,4\n");
  CHECK(run({"convert", "--method", "logan", "--profile", "rational"}, "1,2,3,4\n").out == r.out);

  SUBCASE("rational is exact for decimals")
  {
    auto const x = run({"convert", "--profile", "rational"}, "0.1,0,0,0\n0.5,0.5,0,0\n");
    CHECK(x.out == "1/100,0,0,0,1/100,0,0,0,1/100\n1/2,0,0,0,0,-1/2,0,1/2,0\n");
    auto const j = run({"convert", "--profile", "rational", "--format", "json"}, "0.5,0.5,0,0\n");
    CHECK(j.out == "{\"matrix\":[[\"1/2\",0,0],[0,0,\"-1/2\"],[0,\"1/2\",0]]}\n");
  }

  SUBCASE("csv and json carry the same values")
  {
    std::string const input = "0.3,-0.1,0.9,0.2\n{\"q\":[1,2,3,4]}\n";
    auto const csv = lines_of(run({"convert", "--method", "logan", "--normalize"}, input).out);
    auto const json = lines_of(run({"convert", "--method", "logan", "--normalize", "--format", "json"}, input).out);
    REQUIRE(csv.size() == 2);
    REQUIRE(json.size() == 2);
    for (std::size_t k = 0; k < 2; ++k)
    {
      auto const doc = nlohmann::json::parse(json[k]);
      std::vector<std::string> cells;
      for (auto const &row : doc["matrix"])
        for (auto const &v : row)
          cells.push_back(cli::format_double(v.get<double>()));
      std::string joined;
      for (std::size_t i = 0; i < cells.size(); ++i)
        joined += (i ? "," : "") + cells[i];
      CHECK(joined == csv[k]);
    }
  }

  SUBCASE("output round-trips through decimal text")
  {
    auto const out = run({"convert", "--normalize"}, "0.3,-0.1,0.9,0.2\n").out;
    F64Profile f;
    auto const m = rotmat_direct(f, normalize({0.3, -0.1, 0.9, 0.2}));
    std::istringstream cells(out);
    std::string cell;
    for (std::size_t k = 0; k < 9; ++k)
    {
      std::getline(cells, cell, k < 8 ? ',' : '\n');
      CHECK(std::stod(cell) == m(k / 3, k % 3));
    }
  }

  SUBCASE("fixed point")
  {
    auto const x = run({"convert", "--method", "logan", "--profile", "fixed:Q3.12"}, "0.5,0.5,0.5,0.5\n");
    CHECK(x.code == 0);
    CHECK(x.out == "0,0,1,1,0,0,0,1,0\n");
    auto const sat = run({"convert", "--profile", "fixed:Q1.4"}, "1,2,3,4\n");
    CHECK(sat.code == 0);
    CHECK(sat.err.find("saturation events") != std::string::npos);
  }

  SUBCASE("default profile from the environment")
  {
    ::setenv(cli::default_profile_env, "rational", 1);
    CHECK(run({"convert"}, "0.5,0,0,0\n").out == "1/4,0,0,0,1/4,0,0,0,1/4\n");
    CHECK(run({"convert", "--profile", "f64"}, "0.5,0,0,0\n").out == "0.25,0,0,0,0.25,0,0,0,0.25\n");
    ::setenv(cli::default_profile_env, "bogus", 1);
    CHECK(run({"convert"}, "1,0,0,0\n").code == 2);
    ::unsetenv(cli::default_profile_env);
  }

  SUBCASE("input file")
  {
    std::string const path = "test_cli_input.csv";
    std::ofstream(path) << "1,2,3,4\n";
    CHECK(run({"convert", "--profile", "rational", "--input", path}).out == "-20,4,22,20,-10,20,10,28,4\n");
    std::remove(path.c_str());
    CHECK(run({"convert", "--input", "does/not/exist.csv"}).code == 2);
  }

  SUBCASE("errors")
  {
    auto const e = run({"convert"}, "1,0,0,0\n1,2,x,4\n");
    CHECK(e.code == 2);
    CHECK(e.out.empty());
    CHECK(e.err.find("line 2") != std::string::npos);

    auto const z = run({"convert", "--normalize"}, "1,0,0,0\n0,0,0,0\n");
    CHECK(z.code == 2);
    CHECK(z.err.find("line 2: cannot normalize") != std::string::npos);

    CHECK(run({"convert", "--normalize", "--profile", "rational"}, "1,0,0,0\n").code == 2);
    CHECK(run({"convert", "--method", "fast"}, "").code == 2);
    CHECK(run({"convert", "--profile", "fixed:Qx"}, "").code == 2);
    CHECK(run({}, "").code == 2);
    CHECK(run({"frobnicate"}, "").code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}

TEST_CASE("verify")
{
  auto const ok = run({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("9/9 entries are identities") != std::string::npos);
  CHECK(ok.out.find("2401 cases, 0 mismatches") != std::string::npos);

  auto const small = run({"verify", "--grid-bound", "1"});
  CHECK(small.out.find("81 cases, 0 mismatches") != std::string::npos);

  auto const bad = run({"verify", "--assembly", "uncorrected", "--grid-bound", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("c20  FAIL  difference: 4*q0*q2") != std::string::npos);
  CHECK(bad.out.find("c01  ok") != std::string::npos);
  CHECK(bad.out.find("3/9 entries") != std::string::npos);
  CHECK(bad.out.find("first mismatch at q=") != std::string::npos);

  auto const json = run({"verify", "--format", "json", "--grid-bound", "2"});
  CHECK(json.code == 0);
  auto const doc = nlohmann::json::parse(json.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["entries"].size() == 9);
  CHECK(doc["grid"]["cases"] == 625);

  auto const jbad = nlohmann::json::parse(run({"verify", "--format", "json", "--assembly", "uncorrected"}).out);
  CHECK(jbad["pass"] == false);
  CHECK(jbad["entries"][0]["difference"] == "q0^2 - q1^2");
  CHECK(jbad["grid"].contains("first_mismatch"));

  CHECK(run({"verify", "--grid-bound", "9"}).code == 2);
  CHECK(run({"verify", "--grid-bound", "-1"}).code == 2);
}

TEST_CASE("count")
{
  auto const d = run({"count", "--method", "direct"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("{\"mul\":6,\"square\":4,\"addsub\":15,\"double\":6,", 0) == 0);
  auto const l = run({"count", "--method", "logan"});
  CHECK(l.out.rfind("{\"mul\":0,\"square\":10,\"addsub\":26,\"double\":0,", 0) == 0);
  auto const doc = nlohmann::json::parse(l.out);
  CHECK(doc["claimed"]["addsub_at_most"] == 29);
  CHECK(doc["note"].get<std::string>().find("29") != std::string::npos);
  CHECK(run({"count", "--method", "logan"}).out == l.out);
}

TEST_CASE("netlist")
{
  auto const j = run({"netlist", "--method", "logan", "--out", "json"});
  CHECK(j.code == 0);
  auto const doc = nlohmann::json::parse(j.out);
  int squares = 0;
  for (auto const &n : doc["nodes"])
    squares += n["kind"] == "square";
  CHECK(squares == 10);
  CHECK(load_netlist_json(j.out) == build_logan_graph());

  auto const naive = run({"netlist", "--method", "direct", "--no-cse"});
  CHECK(load_netlist_json(naive.out).census().mul == 12);

  auto const dot = run({"netlist", "--method", "direct", "--out", "dot"});
  CHECK(dot.out.rfind("digraph datapath {", 0) == 0);
  CHECK(dot.out.find("shape=") != std::string::npos);
  CHECK(run({"netlist", "--out", "verilog"}).code == 2);
}

TEST_CASE("sweep")
{
  auto const t = run({"sweep", "--samples", "500"});
  CHECK(t.code == 0);
  CHECK(lines_of(t.out).size() == 9);
  CHECK(run({"sweep", "--samples", "500"}).out == t.out);

  auto const csv = run({"sweep", "--frac-bits", "8,20", "--samples", "500", "--kernel", "logan", "--format", "csv"});
  auto const rows = lines_of(csv.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "format,kernel,max_abs_error,mean_abs_error,saturations");
  CHECK(rows[1].rfind("Q3.8,logan,", 0) == 0);
  CHECK(rows[2].rfind("Q3.20,logan,", 0) == 0);
  auto max_of = [](std::string const &row) {
    std::istringstream in(row);
    std::string cell;
    std::getline(in, cell, ',');
    std::getline(in, cell, ',');
    std::getline(in, cell, ',');
    return std::stod(cell);
  };
  CHECK(max_of(rows[2]) < max_of(rows[1]));

  CHECK(run({"sweep", "--frac-bits", "8,40"}).code == 2);
  CHECK(run({"sweep", "--samples", "0"}).code == 2);
  CHECK(run({"sweep", "--kernel", "fast"}).code == 2);
}

TEST_CASE("bench")
{
  auto const b = run({"bench", "--samples", "200", "--repeats", "3"});
  CHECK(b.code == 0);
  for (char const *needle : {"direct  f64", "direct  fixed:Q3.12", "logan   f64", "logan   fixed:Q3.12", "median of 3",
                             "caveat:"})
    CHECK(b.out.find(needle) != std::string::npos);
  CHECK(run({"bench", "--repeats", "0"}).code == 2);
}
