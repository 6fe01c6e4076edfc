#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nil2/poly.hpp"

namespace nil2 {

// Central structure constants of a finitely generated torsion-free
// 2-nilpotent group with Mal'tsev basis u_1..u_m (mod the center) and
// v_1..v_n (central): [u_i, u_j] = v^k(i,j) for i > j.
class GroupSchema {
 public:
  GroupSchema(int m, int n, std::vector<std::vector<Integer>> comm);

  int m() const { return m_; }
  int n() const { return n_; }
  // 1-based, i > j.
  const std::vector<Integer>& k(int i, int j) const { return comm_[pair_index(i, j)]; }
  static std::size_t pair_index(int i, int j) {
    return static_cast<std::size_t>((i - 1) * (i - 2) / 2 + (j - 1));
  }

  // The free 2-nilpotent group of rank 2 (UT_3(Z)) with basis (x, y, [y,x]).
  bool is_free_rank2() const;

  // Display names: x, y and [y,x] for the rank-2 free schema, u<i> and v<j>
  // otherwise.
  std::string u_name(int i) const;
  std::string v_name(int j) const;

  friend bool operator==(const GroupSchema&, const GroupSchema&) = default;

 private:
  int m_;
  int n_;
  std::vector<std::vector<Integer>> comm_;
};

using SchemaPtr = std::shared_ptr<const GroupSchema>;

// name: "free2nilpotent" (alias "free2"), rank >= 2. Throws UnknownPreset.
SchemaPtr schema_preset(std::string_view name, int rank);

// {"m": int, "n": int, "comm": [{"i": int, "j": int, "v": [int, ...]}, ...]}
// Throws InvalidSchema on missing, duplicate or malformed entries.
SchemaPtr schema_from_json(std::string_view text);
std::string schema_to_json(const GroupSchema& schema);

}  // namespace nil2
