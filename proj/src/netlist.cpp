/* SPDX-FileCopyrightText: Copyright (c) 2026, the quatrot authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <quatrot/datapath.hpp>

#include <json.hpp>

#include <limits>
#include <unordered_map>

namespace quatrot
{
namespace
{
using ojson = nlohmann::ordered_json;

[[noreturn]] void reject(std::string const &what) { throw NetlistError("netlist: " + what); }

NodeId read_id(nlohmann::json const &value, std::string const &where)
{
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > std::numeric_limits<NodeId>::max())
    reject(where + " must be a non-negative integer id");
  return value.get<NodeId>();
}
} // namespace

std::string emit_netlist_json(DatapathGraph const &g)
{
  topological_order(g);
  require_complete_outputs(g);

  ojson doc;
  doc["inputs"] = {"q0", "q1", "q2", "q3"};
  ojson nodes = ojson::array();
  for (auto const &n : g.nodes)
  {
    if (n.kind == NodeKind::input)
      continue;
    ojson node;
    node["id"] = n.id;
    node["kind"] = std::string(to_string(n.kind));
    node["args"] = n.args;
    if (!n.label.empty())
      node["label"] = n.label;
    if (n.block != 0)
      node["block"] = n.block;
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  ojson outputs = ojson::object();
  for (auto name : entry_names)
    outputs[std::string(name)] = g.outputs.at(std::string(name));
  doc["outputs"] = std::move(outputs);
  return doc.dump(2) + "\n";
}

DatapathGraph load_netlist_json(std::string_view text)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(text);
  }
  catch (nlohmann::json::parse_error const &e)
  {
    reject(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    reject("document must be an object");

  auto const inputs = doc.find("inputs");
  if (inputs == doc.end() || *inputs != nlohmann::json({"q0", "q1", "q2", "q3"}))
    reject("\"inputs\" must be [\"q0\",\"q1\",\"q2\",\"q3\"]");

  auto const nodes = doc.find("nodes");
  if (nodes == doc.end() || !nodes->is_array())
    reject("\"nodes\" must be an array");

  // Inputs take ids 0..3; document ids are remapped densely after them.
  std::unordered_map<NodeId, NodeId> remap{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  std::unordered_map<NodeId, std::size_t> declared;
  for (std::size_t k = 0; k < nodes->size(); ++k)
  {
    auto const &node = (*nodes)[k];
    if (!node.is_object() || !node.contains("id"))
      reject("nodes[" + std::to_string(k) + "] needs an \"id\"");
    declared.emplace(read_id(node["id"], "nodes[" + std::to_string(k) + "].id"), k);
  }

  GraphBuilder b(false);
  long long previous = 3;
  for (std::size_t k = 0; k < nodes->size(); ++k)
  {
    auto const &node = (*nodes)[k];
    auto const where = "nodes[" + std::to_string(k) + "]";
    NodeId const id = read_id(node["id"], where + ".id");
    if (static_cast<long long>(id) <= previous)
      reject(where + ".id " + std::to_string(id) + " is not strictly increasing (or collides with an input)");
    previous = id;

    if (!node.contains("kind") || !node["kind"].is_string())
      reject(where + " needs a string \"kind\"");
    auto const kind = parse_node_kind(node["kind"].get<std::string>());
    if (!kind || *kind == NodeKind::input)
      reject(where + " has unknown kind '" + node["kind"].get<std::string>() + "'");

    if (!node.contains("args") || !node["args"].is_array())
      reject(where + " needs an \"args\" array");
    auto const &raw_args = node["args"];
    if (static_cast<int>(raw_args.size()) != arity(*kind))
      reject(where + " (" + std::string(to_string(*kind)) + ") needs " + std::to_string(arity(*kind)) +
             " args, has " + std::to_string(raw_args.size()));

    std::vector<NodeId> args;
    for (std::size_t a = 0; a < raw_args.size(); ++a)
    {
      NodeId const ref = read_id(raw_args[a], where + ".args[" + std::to_string(a) + "]");
      if (ref >= id)
      {
        if (declared.count(ref))
          reject(where + " refers forward to id " + std::to_string(ref) + " (cycle)");
        reject(where + " refers to dangling id " + std::to_string(ref));
      }
      auto it = remap.find(ref);
      if (it == remap.end())
        reject(where + " refers to dangling id " + std::to_string(ref));
      args.push_back(it->second);
    }

    std::string label;
    if (node.contains("label"))
    {
      if (!node["label"].is_string())
        reject(where + ".label must be a string");
      label = node["label"].get<std::string>();
    }
    int block = 0;
    if (node.contains("block"))
    {
      if (!node["block"].is_number_integer())
        reject(where + ".block must be an integer");
      block = node["block"].get<int>();
    }
    remap[id] = b.append(*kind, std::move(args), block, std::move(label));
  }

  auto const outputs = doc.find("outputs");
  if (outputs == doc.end() || !outputs->is_object())
    reject("\"outputs\" must be an object");
  if (outputs->size() != entry_names.size())
    reject("\"outputs\" must name exactly c00..c22, found " + std::to_string(outputs->size()) + " entries");
  for (auto name : entry_names)
  {
    std::string const key(name);
    if (!outputs->contains(key))
      reject("\"outputs\" is missing " + key);
    NodeId const ref = read_id((*outputs)[key], "outputs." + key);
    auto it = remap.find(ref);
    if (it == remap.end())
      reject("outputs." + key + " refers to dangling id " + std::to_string(ref));
    b.output(key, it->second);
  }
  return std::move(b).finish();
}

} // namespace quatrot
