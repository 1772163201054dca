#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "padic/exact.hpp"

namespace padic {

// Coordinates in the Pascal triangle of words.
struct BlockId {
    std::uint64_t n = 0;
    std::int64_t k = 0;
    bool valid() const { return k >= 0 && static_cast<std::uint64_t>(k) <= n; }
};

// Default cap on materialized word length; everything bigger goes through the
// positional query API (C(200,100) has ~9e58 letters).
inline constexpr std::uint64_t kDefaultWordCap = std::uint64_t{1} << 20;

// Length of B_{n,k}, i.e. C(n,k).
BigInt block_length(const BlockId& id);

// The l-th letter (1-based) of B_{n,k}: 'a' or 'b'. O(n) big-int comparisons.
char letter_at(const BlockId& id, const BigInt& l);

// Letter as increment: 'a' -> +1, 'b' -> -1.
inline int letter_increment(char c) { return c == 'a' ? 1 : -1; }

// The full word; throws CapExceeded when C(n,k) > cap.
std::string materialize(const BlockId& id, std::uint64_t cap = kDefaultWordCap);

// Number of 'a' among the first l letters of B_{n,k}; 0 <= l <= C(n,k).
BigInt count_a_prefix(const BlockId& id, const BigInt& l);

// (#a - #b) of B_{n,k}.
BigInt height(const BlockId& id);

// The word triangle over the (N0+1)-letter alphabet {a_0,...,a_N0}, with base
// line n = N0 (B_{N0,k} = a_k) and the same concatenation recursion above it.
// Letter-lengths have no simple closed form, so they are memoized.
class GeneralizedBlocks {
  public:
    explicit GeneralizedBlocks(int alphabet_level);

    int level() const { return n0_; }

    // Length of B^{N0}_{n,k} counted in letters (not in T-steps).
    BigInt letter_length(const BlockId& id) const;

    // The l-th letter (1-based, counted in letters): index in [0, N0].
    int letter_at(const BlockId& id, const BigInt& l) const;

    // Full letter sequence; throws CapExceeded beyond cap.
    std::vector<int> materialize(const BlockId& id, std::uint64_t cap = kDefaultWordCap) const;

  private:
    void check(const BlockId& id) const;
    int n0_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::uint64_t, std::int64_t>, BigInt> len_memo_;
};

}  // namespace padic
