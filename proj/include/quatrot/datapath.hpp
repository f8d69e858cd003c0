/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <quatrot/quaternion.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace quatrot
{
enum class NodeKind : std::uint8_t
{
  input,
  add,
  sub,
  square,
  twice,
  mul
};

inline constexpr std::size_t node_kind_count = 6;

/// "input", "add", "sub", "square", "double", "mul".
std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);
int arity(NodeKind kind);

using NodeId = std::uint32_t;

struct DatapathNode
{
  NodeId id = 0;
  NodeKind kind = NodeKind::input;
  std::vector<NodeId> args;
  std::string label;
  /// Hardware block the node belongs to; 0 when unassigned.
  int block = 0;

  bool operator==(DatapathNode const &) const = default;
};

struct NodeCensus
{
  std::uint64_t inputs = 0;
  std::uint64_t mul = 0;
  std::uint64_t square = 0;
  std::uint64_t addsub = 0;
  std::uint64_t twice = 0;

  OpCountLedger as_ledger() const { return {mul, square, addsub, twice, 0}; }
  bool operator==(NodeCensus const &) const = default;
};

/**
 * Arithmetic DAG computing a rotation matrix from q0..q3. nodes[k].id == k,
 * the first four nodes are the inputs q0..q3, and every argument refers to
 * an earlier node. `outputs` maps "c00".."c22" to node ids.
 */
struct DatapathGraph
{
  std::vector<DatapathNode> nodes;
  std::map<std::string, NodeId> outputs;

  DatapathNode const &node(NodeId id) const { return nodes.at(id); }
  NodeCensus census() const;

  bool operator==(DatapathGraph const &) const = default;
};

/// Structural problem in a graph: dangling reference, bad arity, cycle.
class GraphError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Rejected netlist document.
class NetlistError : public GraphError
{
public:
  using GraphError::GraphError;
};

/**
 * Incremental graph construction. With sharing on, structurally identical
 * nodes are hash-consed (add and mul compare their arguments unordered), so
 * the result is already CSE-reduced; with sharing off every call makes a
 * fresh node, which gives the naive expression-tree expansion.
 */
class GraphBuilder
{
public:
  explicit GraphBuilder(bool share = true);

  NodeId input(int index) const { return static_cast<NodeId>(index); }
  NodeId add(NodeId a, NodeId b, int block = 0, std::string label = {});
  NodeId sub(NodeId a, NodeId b, int block = 0, std::string label = {});
  NodeId mul(NodeId a, NodeId b, int block = 0, std::string label = {});
  NodeId square(NodeId a, int block = 0, std::string label = {});
  NodeId twice(NodeId a, int block = 0, std::string label = {});

  /// Generic node creation; input nodes cannot be appended.
  NodeId append(NodeKind kind, std::vector<NodeId> args, int block = 0, std::string label = {});

  void output(std::string_view name, NodeId id);
  DatapathGraph finish() &&;

private:
  bool _share;
  DatapathGraph _graph;
  std::map<std::tuple<NodeKind, std::vector<NodeId>>, NodeId> _memo;
};

/// Direction cosine matrix kernel as a DAG. Blocks: 1 multiplier and squarer
/// bank, 2 adders, 3 doublers.
DatapathGraph build_direct_graph(bool share = true);

/// Squaring-only kernel as a DAG. Blocks: 1 pairwise input adders,
/// 2 squarer bank, 3 theta/lambda adders, 4 output assembly adders.
DatapathGraph build_logan_graph(bool share = true);

/// Value numbering with commutative normalization of add and mul. Keeps the
/// first occurrence of each value, renumbers densely, preserves outputs.
DatapathGraph cse(DatapathGraph const &g);

/// Inverse of sharing: rebuilds every output as an independent tree.
DatapathGraph unshare(DatapathGraph const &g);

/// Checks arities, input layout, references and output names; returns the
/// node ids in a dependency-respecting order. Throws GraphError, including
/// on cycles. Does not require the output map to be complete.
std::vector<NodeId> topological_order(DatapathGraph const &g);

/// Throws GraphError unless all of c00..c22 are mapped.
void require_complete_outputs(DatapathGraph const &g);

/// Area and latency weights per node kind.
struct CostModel
{
  int bit_width = 8;
  std::array<double, node_kind_count> area{};
  std::array<double, node_kind_count> latency{};

  /// w_mul = n², w_sq = ratio·n², w_add = w_sub = n, w_shift = 0; unit
  /// latency for add, sub, square and mul, none for inputs and shifts.
  static CostModel standard(int bit_width, double squarer_ratio = 0.5);

  double area_of(NodeKind k) const { return area[static_cast<std::size_t>(k)]; }
  double latency_of(NodeKind k) const { return latency[static_cast<std::size_t>(k)]; }
  bool valid() const;
};

struct Schedule
{
  std::vector<int> level;
  int critical_path_levels = 0;
  double critical_path_latency = 0.0;
};

/// ASAP levels: inputs at 0, every other node one past its deepest argument.
/// Critical path figures are taken over the output nodes (over all nodes if
/// the graph has no outputs).
Schedule schedule_asap(DatapathGraph const &g, CostModel const &model = CostModel::standard(8));

struct CostReport
{
  int bit_width = 0;
  NodeCensus census;
  std::array<double, node_kind_count> area_by_kind{};
  double total_area = 0.0;
  /// Energy is modeled as proportional to area.
  double energy_proxy = 0.0;
};

CostReport cost_report(DatapathGraph const &g, CostModel const &model);

struct CostComparison
{
  CostReport direct;
  CostReport logan;
  /// logan / direct total area; NaN when the direct area is zero.
  double ratio = 0.0;
};

CostComparison compare_cost(DatapathGraph const &direct, DatapathGraph const &logan, CostModel const &model);

std::string emit_dot(DatapathGraph const &g);
std::string emit_netlist_json(DatapathGraph const &g);
/// Throws NetlistError naming the offending field, id or reference.
DatapathGraph load_netlist_json(std::string_view text);

/// Interprets the graph under profile `p`. Same operation order as the
/// graph, so a graph built from a kernel reproduces it bit for bit.
template <ScalarProfile P>
RotationMatrix3<typename P::value_type> evaluate(DatapathGraph const &g,
                                                 Quaternion<typename P::value_type> const &q, P &p)
{
  using V = typename P::value_type;
  auto const order = topological_order(g);
  require_complete_outputs(g);
  std::vector<V> value(g.nodes.size());
  for (NodeId id : order)
  {
    auto const &n = g.nodes[id];
    switch (n.kind)
    {
    case NodeKind::input:
      value[id] = q[static_cast<std::size_t>(n.label[1] - '0')];
      break;
    case NodeKind::add:
      value[id] = p.add(value[n.args[0]], value[n.args[1]]);
      break;
    case NodeKind::sub:
      value[id] = p.sub(value[n.args[0]], value[n.args[1]]);
      break;
    case NodeKind::mul:
      value[id] = p.mul(value[n.args[0]], value[n.args[1]]);
      break;
    case NodeKind::square:
      value[id] = p.square(value[n.args[0]]);
      break;
    case NodeKind::twice:
      value[id] = p.twice(value[n.args[0]]);
      break;
    }
  }

  RotationMatrix3<V> r;
  for (std::size_t k = 0; k < entry_names.size(); ++k)
    r(k / 3, k % 3) = value[g.outputs.at(std::string(entry_names[k]))];
  return r;
}

} // namespace quatrot
