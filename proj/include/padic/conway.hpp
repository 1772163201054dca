#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/blocks.hpp"

namespace padic {

// C(1..j_max) of the recursion C(j) = C(C(j-1)) + C(j - C(j-1)), C(1)=C(2)=1.
// Both inner arguments are < j, so one forward pass fills the table.
std::vector<std::uint64_t> conway_sequence(std::size_t j_max);

// D(j) = 2*(C(j) - C(j-1)) - 1 for j = 3..j_max, each -1 or +1.
std::vector<int> d_sequence(std::size_t j_max);

// (D(j))_{j>=3} spells out B_{1,0} B_{1,1} B_{2,0} B_{2,1} B_{2,2} B_{3,0} ...
// with a -> +1, b -> -1. Checks the identity through word line `lines`;
// returns the 0-based position of the first mismatch, or -1 if none.
std::int64_t concatenation_mismatch(int lines);

// Alternative construction of B_{n,k}, 0 < k < n: cut B_{n-1,k-1} after each
// 'a' and B_{n-1,k} after each 'b', then interleave the pieces starting with
// the left word.
std::string interleave(const BlockId& id, std::uint64_t cap = kDefaultWordCap);

}  // namespace padic
