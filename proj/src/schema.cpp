#include "nil2/schema.hpp"

#include <json.hpp>

#include "nil2/error.hpp"

namespace nil2 {

GroupSchema::GroupSchema(int m, int n, std::vector<std::vector<Integer>> comm)
    : m_(m), n_(n), comm_(std::move(comm)) {
  if (m < 1 || n < 0) throw Error(ErrorKind::InvalidSchema, "schema needs m >= 1 and n >= 0");
  if (comm_.size() != static_cast<std::size_t>(m * (m - 1) / 2))
    throw Error(ErrorKind::InvalidSchema, "schema needs one commutator vector per pair i > j");
  for (const auto& v : comm_)
    if (v.size() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::InvalidSchema, "commutator vector length differs from n");
}

bool GroupSchema::is_free_rank2() const { return m_ == 2 && n_ == 1 && comm_[0][0] == 1; }

std::string GroupSchema::u_name(int i) const {
  if (is_free_rank2()) return i == 1 ? "x" : "y";
  return "u" + std::to_string(i);
}

std::string GroupSchema::v_name(int j) const {
  if (is_free_rank2()) return "[y,x]";
  return "v" + std::to_string(j);
}

SchemaPtr schema_preset(std::string_view name, int rank) {
  if (name != "free2nilpotent" && name != "free2")
    throw Error(ErrorKind::UnknownPreset, "unknown group preset '" + std::string(name) + "'");
  if (rank < 2) throw Error(ErrorKind::UnknownPreset, "free 2-nilpotent preset needs rank >= 2");
  const int n = rank * (rank - 1) / 2;
  std::vector<std::vector<Integer>> comm(static_cast<std::size_t>(n), std::vector<Integer>(n, Integer(0)));
  for (int p = 0; p < n; ++p) comm[p][p] = 1;
  return std::make_shared<const GroupSchema>(rank, n, std::move(comm));
}

SchemaPtr schema_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSchema, std::string("schema is not valid JSON: ") + e.what());
  }
  try {
    const int m = doc.at("m").get<int>();
    const int n = doc.at("n").get<int>();
    if (m < 1 || n < 0) throw Error(ErrorKind::InvalidSchema, "schema needs m >= 1 and n >= 0");
    const std::size_t pairs = static_cast<std::size_t>(m * (m - 1) / 2);
    std::vector<std::vector<Integer>> comm(pairs);
    std::vector<bool> seen(pairs, false);
    for (const auto& entry : doc.at("comm")) {
      const int i = entry.at("i").get<int>();
      const int j = entry.at("j").get<int>();
      if (!(m >= i && i > j && j >= 1))
        throw Error(ErrorKind::InvalidSchema,
                    "commutator entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      const std::size_t idx = GroupSchema::pair_index(i, j);
      if (seen[idx])
        throw Error(ErrorKind::InvalidSchema,
                    "duplicate commutator entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      seen[idx] = true;
      for (const auto& x : entry.at("v")) comm[idx].emplace_back(x.get<long>());
      if (comm[idx].size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidSchema, "commutator vector length differs from n");
    }
    for (std::size_t idx = 0; idx < pairs; ++idx)
      if (!seen[idx]) throw Error(ErrorKind::InvalidSchema, "missing commutator entry");
    return std::make_shared<const GroupSchema>(m, n, std::move(comm));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSchema, std::string("malformed schema: ") + e.what());
  }
}

std::string schema_to_json(const GroupSchema& schema) {
  nlohmann::json doc;
  doc["m"] = schema.m();
  doc["n"] = schema.n();
  doc["comm"] = nlohmann::json::array();
  for (int i = 2; i <= schema.m(); ++i)
    for (int j = 1; j < i; ++j) {
      nlohmann::json v = nlohmann::json::array();
      for (const auto& x : schema.k(i, j)) v.push_back(x.get_si());
      doc["comm"].push_back({{"i", i}, {"j", j}, {"v", v}});
    }
  return doc.dump();
}

}  // namespace nil2
