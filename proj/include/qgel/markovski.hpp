#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgel/quasigroup.hpp"

namespace qgel {

// Chained quasigroup stream transformation seeded by a leader element:
//   v_1 = f(leader, u_1),  v_{i+1} = f(v_i, u_{i+1}).
// Length-preserving; the empty message maps to the empty output.
std::vector<std::uint32_t> markovski_encrypt(const Quasigroup& q, std::uint32_t leader,
                                             std::span<const std::uint32_t> plain);

// Inverse chain using left division:
//   u_1 = leader \ v_1,  u_{i+1} = v_i \ v_{i+1}.
std::vector<std::uint32_t> markovski_decrypt(const Quasigroup& q, std::uint32_t leader,
                                             std::span<const std::uint32_t> cipher);

} // namespace qgel
