#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braces/analysis.hpp"
#include "braces/core.hpp"
#include "braces/products.hpp"
#include "braces/ybe.hpp"

namespace braces {

using json = nlohmann::json;

// Brace file schema: {"order": n, "add": [n*n ints], "mul": [n*n ints],
// "meta": {...}}, tables row-major.

inline json brace_to_json(const FiniteBrace& B) {
  json j;
  j["order"] = B.order();
  j["add"] = B.add_table();
  j["mul"] = B.mul_table();
  j["meta"] = json::object();
  for (const auto& [k, v] : B.meta()) j["meta"][k] = v;
  return j;
}

inline FiniteBrace brace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("add") ||
      !j.contains("mul"))
    throw StructuralError("brace JSON: missing order/add/mul");
  const int n = j.at("order").get<int>();
  std::vector<Elem> add, mul;
  for (const auto& e : j.at("add")) {
    long long v = e.get<long long>();
    if (v < 0 || v > 0xffff) throw StructuralError("brace JSON: add entry range");
    add.push_back(static_cast<Elem>(v));
  }
  for (const auto& e : j.at("mul")) {
    long long v = e.get<long long>();
    if (v < 0 || v > 0xffff) throw StructuralError("brace JSON: mul entry range");
    mul.push_back(static_cast<Elem>(v));
  }
  std::map<std::string, std::string> meta;
  if (j.contains("meta"))
    for (auto it = j.at("meta").begin(); it != j.at("meta").end(); ++it)
      meta[it.key()] = it.value().is_string()
                           ? it.value().get<std::string>()
                           : it.value().dump();
  return FiniteBrace(n, std::move(add), std::move(mul), std::move(meta));
}

inline void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open for reading: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw StructuralError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

inline void write_brace_file(const FiniteBrace& B, const std::string& path) {
  write_json_file(brace_to_json(B), path);
}

inline FiniteBrace read_brace_file(const std::string& path) {
  return brace_from_json(read_json_file(path));
}

// Action schema: {"actor_order", "target_order", "perms": [[...],...]}.

inline json action_to_json(const BraceAction& a) {
  json j;
  j["actor_order"] = a.actor.order();
  j["target_order"] = a.target.order();
  j["perms"] = a.perms;
  return j;
}

/// Rebuilds an action over explicitly supplied actor/target braces.
inline BraceAction action_from_json(const json& j, FiniteBrace actor,
                                    FiniteBrace target) {
  if (j.at("actor_order").get<int>() != actor.order() ||
      j.at("target_order").get<int>() != target.order())
    throw StructuralError("action JSON: order mismatch");
  std::vector<std::vector<Elem>> perms;
  for (const auto& row : j.at("perms")) {
    std::vector<Elem> p;
    for (const auto& e : row) p.push_back(static_cast<Elem>(e.get<long long>()));
    perms.push_back(std::move(p));
  }
  return BraceAction{std::move(actor), std::move(target), std::move(perms)};
}

// Cocycle schema: {"t_order", "s_order", "table": [...], "bilinear": bool}.

inline json cocycle_to_json(const SymmetricCocycle& b) {
  json j;
  j["t_order"] = b.domain.order();
  j["s_order"] = b.codomain.order();
  j["table"] = b.table;
  j["bilinear"] = b.bilinear;
  return j;
}

inline SymmetricCocycle cocycle_from_json(const json& j, FiniteBrace domain,
                                          FiniteBrace codomain) {
  if (j.at("t_order").get<int>() != domain.order() ||
      j.at("s_order").get<int>() != codomain.order())
    throw StructuralError("cocycle JSON: order mismatch");
  std::vector<Elem> table;
  for (const auto& e : j.at("table"))
    table.push_back(static_cast<Elem>(e.get<long long>()));
  return SymmetricCocycle{std::move(domain), std::move(codomain),
                          std::move(table), j.value("bilinear", false)};
}

// Solution schema: {"size": n, "r": [n*n pairs [u,v], row-major]}.

inline json solution_to_json(const YBESolution& sol) {
  json pairs = json::array();
  for (std::size_t i = 0; i < sol.u.size(); ++i)
    pairs.push_back(json::array({sol.u[i], sol.v[i]}));
  json j;
  j["size"] = sol.size;
  j["r"] = std::move(pairs);
  return j;
}

inline YBESolution solution_from_json(const json& j) {
  YBESolution sol;
  sol.size = j.at("size").get<int>();
  const std::size_t nn = static_cast<std::size_t>(sol.size) * sol.size;
  for (const auto& pair : j.at("r")) {
    sol.u.push_back(static_cast<Elem>(pair.at(0).get<long long>()));
    sol.v.push_back(static_cast<Elem>(pair.at(1).get<long long>()));
  }
  if (sol.u.size() != nn)
    throw StructuralError("solution JSON: table size does not match size");
  return sol;
}

// Analysis report schema.

inline json analysis_report_to_json(const AnalysisReport& r) {
  json j;
  j["order"] = r.order;
  j["simple"] = r.simple;
  j["perfect"] = r.perfect;
  j["trivial"] = r.trivial;
  j["solvable"] = r.solvable;
  j["left_nilpotent"] = r.left_nilpotent;
  j["right_nilpotent"] = r.right_nilpotent;
  j["socle_size"] = r.socle_size;
  j["left_series_sizes"] = r.left_series_sizes;
  j["right_series_sizes"] = r.right_series_sizes;
  j["d_series_sizes"] = r.d_series_sizes;
  j["derived_length_mult"] = r.derived_length_mult;
  if (r.ideal_count) j["ideal_count"] = *r.ideal_count;
  return j;
}

}  // namespace braces
