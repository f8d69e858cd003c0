/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/datapath.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace quatrot
{
namespace
{
constexpr std::array<std::string_view, node_kind_count> kind_names = {"input", "add",    "sub",
                                                                      "square", "double", "mul"};

bool commutative(NodeKind k) { return k == NodeKind::add || k == NodeKind::mul; }

std::vector<NodeId> memo_args(NodeKind k, std::vector<NodeId> args)
{
  if (commutative(k))
    std::sort(args.begin(), args.end());
  return args;
}

std::string input_label(int i) { return "q" + std::to_string(i); }

bool is_entry_name(std::string_view name)
{
  return std::find(entry_names.begin(), entry_names.end(), name) != entry_names.end();
}
} // namespace

std::string_view to_string(NodeKind kind) { return kind_names[static_cast<std::size_t>(kind)]; }

std::optional<NodeKind> parse_node_kind(std::string_view text)
{
  for (std::size_t k = 0; k < kind_names.size(); ++k)
    if (kind_names[k] == text)
      return static_cast<NodeKind>(k);
  return std::nullopt;
}

int arity(NodeKind kind)
{
  switch (kind)
  {
  case NodeKind::input:
    return 0;
  case NodeKind::square:
  case NodeKind::twice:
    return 1;
  default:
    return 2;
  }
}

NodeCensus DatapathGraph::census() const
{
  NodeCensus c;
  for (auto const &n : nodes)
  {
    switch (n.kind)
    {
    case NodeKind::input:
      ++c.inputs;
      break;
    case NodeKind::add:
    case NodeKind::sub:
      ++c.addsub;
      break;
    case NodeKind::square:
      ++c.square;
      break;
    case NodeKind::twice:
      ++c.twice;
      break;
    case NodeKind::mul:
      ++c.mul;
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Construction

GraphBuilder::GraphBuilder(bool share) : _share(share)
{
  for (int i = 0; i < 4; ++i)
    _graph.nodes.push_back({static_cast<NodeId>(i), NodeKind::input, {}, input_label(i), 0});
}

NodeId GraphBuilder::append(NodeKind kind, std::vector<NodeId> args, int block, std::string label)
{
  if (kind == NodeKind::input)
    throw GraphError("input nodes are fixed at construction");
  if (static_cast<int>(args.size()) != arity(kind))
    throw GraphError(std::string(to_string(kind)) + " node needs " + std::to_string(arity(kind)) +
                     " arguments");
  for (NodeId a : args)
    if (a >= _graph.nodes.size())
      throw GraphError("argument " + std::to_string(a) + " does not exist yet");

  auto key = std::make_tuple(kind, memo_args(kind, args));
  if (_share)
  {
    if (auto it = _memo.find(key); it != _memo.end())
      return it->second;
  }
  auto const id = static_cast<NodeId>(_graph.nodes.size());
  _graph.nodes.push_back({id, kind, std::move(args), std::move(label), block});
  if (_share)
    _memo.emplace(std::move(key), id);
  return id;
}

NodeId GraphBuilder::add(NodeId a, NodeId b, int block, std::string label)
{
  return append(NodeKind::add, {a, b}, block, std::move(label));
}
NodeId GraphBuilder::sub(NodeId a, NodeId b, int block, std::string label)
{
  return append(NodeKind::sub, {a, b}, block, std::move(label));
}
NodeId GraphBuilder::mul(NodeId a, NodeId b, int block, std::string label)
{
  return append(NodeKind::mul, {a, b}, block, std::move(label));
}
NodeId GraphBuilder::square(NodeId a, int block, std::string label)
{
  return append(NodeKind::square, {a}, block, std::move(label));
}
NodeId GraphBuilder::twice(NodeId a, int block, std::string label)
{
  return append(NodeKind::twice, {a}, block, std::move(label));
}

void GraphBuilder::output(std::string_view name, NodeId id)
{
  if (id >= _graph.nodes.size())
    throw GraphError("output " + std::string(name) + " refers to missing node");
  _graph.outputs[std::string(name)] = id;
}

DatapathGraph GraphBuilder::finish() && { return std::move(_graph); }

DatapathGraph build_direct_graph(bool share)
{
  GraphBuilder b(share);
  auto sq = [&](int i) { return b.square(b.input(i), 1, "q" + std::to_string(i) + "^2"); };
  auto prod = [&](int i, int j) {
    return b.mul(b.input(i), b.input(j), 1, "q" + std::to_string(i) + "q" + std::to_string(j));
  };
  auto pair = [&](int i, int j) { return b.add(sq(i), sq(j), 2); };

  b.output("c00", b.sub(pair(0, 1), pair(2, 3), 2, "c00"));
  b.output("c11", b.sub(pair(0, 2), pair(1, 3), 2, "c11"));
  b.output("c22", b.sub(pair(0, 3), pair(1, 2), 2, "c22"));

  b.output("c01", b.twice(b.sub(prod(1, 2), prod(0, 3), 2), 3, "c01"));
  b.output("c10", b.twice(b.add(prod(1, 2), prod(0, 3), 2), 3, "c10"));
  b.output("c02", b.twice(b.add(prod(0, 2), prod(1, 3), 2), 3, "c02"));
  b.output("c20", b.twice(b.sub(prod(1, 3), prod(0, 2), 2), 3, "c20"));
  b.output("c12", b.twice(b.sub(prod(2, 3), prod(0, 1), 2), 3, "c12"));
  b.output("c21", b.twice(b.add(prod(0, 1), prod(2, 3), 2), 3, "c21"));
  return std::move(b).finish();
}

DatapathGraph build_logan_graph(bool share)
{
  GraphBuilder b(share);
  static constexpr std::array<std::array<int, 2>, 6> phi_pairs = {
      {{1, 2}, {0, 3}, {2, 3}, {0, 1}, {1, 3}, {0, 2}}};

  auto phi = [&](int k) {
    auto const [i, j] = phi_pairs[k];
    auto const s = b.add(b.input(i), b.input(j), 1, "q" + std::to_string(i) + "+q" + std::to_string(j));
    return b.square(s, 2, "phi" + std::to_string(k));
  };
  auto sq = [&](int i) { return b.square(b.input(i), 2, "q" + std::to_string(i) + "^2"); };
  auto theta0 = [&] { return b.add(sq(1), sq(2), 3, "theta0"); };
  auto theta1 = [&] { return b.add(sq(0), sq(3), 3, "theta1"); };
  auto theta3 = [&] { return b.sub(sq(1), sq(2), 3, "theta3"); };
  auto theta4 = [&] { return b.sub(sq(0), sq(3), 3, "theta4"); };
  auto lambda = [&] { return b.add(theta0(), theta1(), 3, "lambda"); };

  auto c00 = [&] { return b.add(theta3(), theta4(), 4, "c00"); };
  auto c11 = [&] { return b.sub(theta4(), theta3(), 4, "c11"); };
  auto c22 = [&] { return b.sub(theta1(), theta0(), 4, "c22"); };

  b.output("c00", c00());
  b.output("c11", c11());
  b.output("c22", c22());
  b.output("c01", b.add(b.sub(phi(0), phi(1), 4), c22(), 4, "c01"));
  b.output("c12", b.add(b.sub(phi(2), phi(3), 4), c00(), 4, "c12"));
  b.output("c20", b.add(b.sub(phi(4), phi(5), 4), c11(), 4, "c20"));
  b.output("c10", b.sub(b.add(phi(0), phi(1), 4), lambda(), 4, "c10"));
  b.output("c21", b.sub(b.add(phi(2), phi(3), 4), lambda(), 4, "c21"));
  b.output("c02", b.sub(b.add(phi(4), phi(5), 4), lambda(), 4, "c02"));
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Validation and rewriting

std::vector<NodeId> topological_order(DatapathGraph const &g)
{
  auto const n = g.nodes.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<NodeId>> users(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    auto const &node = g.nodes[k];
    auto const where = "node " + std::to_string(k);
    if (node.id != k)
      throw GraphError(where + " carries id " + std::to_string(node.id));
    bool const should_be_input = k < 4;
    if (should_be_input != (node.kind == NodeKind::input))
      throw GraphError(where + (should_be_input ? " must be an input" : " cannot be an input"));
    if (should_be_input && node.label != input_label(static_cast<int>(k)))
      throw GraphError(where + " must be input " + input_label(static_cast<int>(k)));
    if (static_cast<int>(node.args.size()) != arity(node.kind))
      throw GraphError(where + " (" + std::string(to_string(node.kind)) + ") has " +
                       std::to_string(node.args.size()) + " arguments");
    for (NodeId a : node.args)
    {
      if (a >= n)
        throw GraphError(where + " refers to dangling id " + std::to_string(a));
      ++pending[k];
      users[a].push_back(static_cast<NodeId>(k));
    }
  }

  for (auto const &[name, id] : g.outputs)
  {
    if (!is_entry_name(name))
      throw GraphError("unknown output name '" + name + "'");
    if (id >= n)
      throw GraphError("output " + name + " refers to dangling id " + std::to_string(id));
  }

  // Kahn's algorithm, smallest id first: for well-formed graphs this is 0..n-1.
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (std::size_t k = 0; k < n; ++k)
    if (pending[k] == 0)
      ready.push(static_cast<NodeId>(k));
  std::vector<NodeId> order;
  order.reserve(n);
  while (!ready.empty())
  {
    NodeId const id = ready.top();
    ready.pop();
    order.push_back(id);
    for (NodeId u : users[id])
      if (--pending[u] == 0)
        ready.push(u);
  }
  if (order.size() != n)
  {
    for (std::size_t k = 0; k < n; ++k)
      if (pending[k] != 0)
        throw GraphError("cycle detected through node " + std::to_string(k));
  }
  return order;
}

DatapathGraph cse(DatapathGraph const &g)
{
  auto const order = topological_order(g);
  GraphBuilder b(true);
  std::vector<NodeId> remap(g.nodes.size());
  for (NodeId id : order)
  {
    auto const &n = g.nodes[id];
    if (n.kind == NodeKind::input)
    {
      remap[id] = b.input(n.label[1] - '0');
      continue;
    }
    std::vector<NodeId> args;
    for (NodeId a : n.args)
      args.push_back(remap[a]);
    remap[id] = b.append(n.kind, std::move(args), n.block, n.label);
  }
  for (auto const &[name, id] : g.outputs)
    b.output(name, remap[id]);
  return std::move(b).finish();
}

void require_complete_outputs(DatapathGraph const &g)
{
  for (auto name : entry_names)
    if (!g.outputs.count(std::string(name)))
      throw GraphError("graph has no output " + std::string(name));
}

DatapathGraph unshare(DatapathGraph const &g)
{
  topological_order(g);
  require_complete_outputs(g);
  GraphBuilder b(false);
  std::function<NodeId(NodeId)> copy = [&](NodeId id) -> NodeId {
    auto const &n = g.nodes[id];
    if (n.kind == NodeKind::input)
      return b.input(n.label[1] - '0');
    std::vector<NodeId> args;
    for (NodeId a : n.args)
      args.push_back(copy(a));
    return b.append(n.kind, std::move(args), n.block, n.label);
  };
  for (auto name : entry_names)
    b.output(name, copy(g.outputs.at(std::string(name))));
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Scheduling and cost

CostModel CostModel::standard(int bit_width, double squarer_ratio)
{
  CostModel m;
  m.bit_width = bit_width;
  double const n = bit_width;
  auto set = [&](NodeKind k, double area, double latency) {
    m.area[static_cast<std::size_t>(k)] = area;
    m.latency[static_cast<std::size_t>(k)] = latency;
  };
  set(NodeKind::input, 0.0, 0.0);
  set(NodeKind::add, n, 1.0);
  set(NodeKind::sub, n, 1.0);
  set(NodeKind::square, squarer_ratio * n * n, 1.0);
  set(NodeKind::twice, 0.0, 0.0);
  set(NodeKind::mul, n * n, 1.0);
  return m;
}

bool CostModel::valid() const
{
  auto nonneg = [](double w) { return std::isfinite(w) && w >= 0.0; };
  return bit_width > 0 && std::all_of(area.begin(), area.end(), nonneg) &&
         std::all_of(latency.begin(), latency.end(), nonneg);
}

Schedule schedule_asap(DatapathGraph const &g, CostModel const &model)
{
  auto const order = topological_order(g);
  Schedule s;
  s.level.assign(g.nodes.size(), 0);
  std::vector<double> arrival(g.nodes.size(), 0.0);
  for (NodeId id : order)
  {
    auto const &n = g.nodes[id];
    int level = 0;
    double start = 0.0;
    for (NodeId a : n.args)
    {
      level = std::max(level, s.level[a] + 1);
      start = std::max(start, arrival[a]);
    }
    s.level[id] = level;
    arrival[id] = start + model.latency_of(n.kind);
  }
  auto consider = [&](NodeId id) {
    s.critical_path_levels = std::max(s.critical_path_levels, s.level[id]);
    s.critical_path_latency = std::max(s.critical_path_latency, arrival[id]);
  };
  if (g.outputs.empty())
    for (NodeId id : order)
      consider(id);
  for (auto const &[name, id] : g.outputs)
    consider(id);
  return s;
}

CostReport cost_report(DatapathGraph const &g, CostModel const &model)
{
  CostReport r;
  r.bit_width = model.bit_width;
  r.census = g.census();
  for (auto const &n : g.nodes)
    r.area_by_kind[static_cast<std::size_t>(n.kind)] += model.area_of(n.kind);
  for (double a : r.area_by_kind)
    r.total_area += a;
  r.energy_proxy = r.total_area;
  return r;
}

CostComparison compare_cost(DatapathGraph const &direct, DatapathGraph const &logan, CostModel const &model)
{
  CostComparison c;
  c.direct = cost_report(direct, model);
  c.logan = cost_report(logan, model);
  c.ratio = c.direct.total_area > 0.0 ? c.logan.total_area / c.direct.total_area
                                      : std::numeric_limits<double>::quiet_NaN();
  return c;
}

// ---------------------------------------------------------------------------
// DOT

namespace
{
std::string_view dot_shape(NodeKind k)
{
  switch (k)
  {
  case NodeKind::input:
    return "invhouse";
  case NodeKind::add:
  case NodeKind::sub:
    return "box";
  case NodeKind::square:
    return "ellipse";
  case NodeKind::twice:
    return "cds";
  case NodeKind::mul:
    return "doubleoctagon";
  }
  return "box";
}

std::string dot_escape(std::string const &s)
{
  std::string out;
  for (char ch : s)
  {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out;
}
} // namespace

std::string emit_dot(DatapathGraph const &g)
{
  std::map<NodeId, std::vector<std::string>> output_names;
  for (auto const &[name, id] : g.outputs)
    output_names[id].push_back(name);

  auto node_line = [&](DatapathNode const &n, std::string_view indent) {
    std::string label = std::string(to_string(n.kind));
    if (n.kind == NodeKind::input)
      label = n.label;
    else if (!n.label.empty())
      label += "\\n" + dot_escape(n.label);
    if (auto it = output_names.find(n.id); it != output_names.end())
      for (auto const &name : it->second)
        if (name != n.label)
          label += "\\n" + name;
    std::ostringstream line;
    line << indent << "n" << n.id << " [label=\"" << label << "\", shape=" << dot_shape(n.kind);
    if (output_names.count(n.id))
      line << ", peripheries=2";
    line << "];\n";
    return line.str();
  };

  std::map<int, std::vector<NodeId>> by_block;
  for (auto const &n : g.nodes)
    by_block[n.block].push_back(n.id);

  std::ostringstream out;
  out << "digraph datapath {\n  rankdir=TB;\n";
  for (auto const &[block, ids] : by_block)
  {
    if (block == 0)
    {
      for (NodeId id : ids)
        out << node_line(g.nodes[id], "  ");
      continue;
    }
    out << "  subgraph cluster_block" << block << " {\n    label=\"block " << block << "\";\n";
    for (NodeId id : ids)
      out << node_line(g.nodes[id], "    ");
    out << "  }\n";
  }
  for (auto const &n : g.nodes)
    for (NodeId a : n.args)
      out << "  n" << a << " -> n" << n.id << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace quatrot
