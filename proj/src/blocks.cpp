#include "padic/blocks.hpp"

#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

void check_id(const BlockId& id) {
    if (!id.valid()) throw std::invalid_argument("invalid BlockId");
}

}  // namespace

BigInt block_length(const BlockId& id) {
    check_id(id);
    return binomial(id.n, id.k);
}

char letter_at(const BlockId& id, const BigInt& l) {
    check_id(id);
    if (l < 1 || l > binomial(id.n, id.k)) throw std::out_of_range("letter_at: position out of range");
    std::uint64_t n = id.n;
    std::int64_t k = id.k;
    BigInt pos = l;
    // B_{n,k} = B_{n-1,k-1} B_{n-1,k}; edges are the single letters a and b.
    while (k > 0 && static_cast<std::uint64_t>(k) < n) {
        BigInt left = binomial(n - 1, k - 1);
        if (pos <= left) {
            --n;
            --k;
        } else {
            pos -= left;
            --n;
        }
    }
    return k == 0 ? 'a' : 'b';
}

std::string materialize(const BlockId& id, std::uint64_t cap) {
    check_id(id);
    BigInt len = binomial(id.n, id.k);
    if (len > cap)
        throw CapExceeded("word B_{" + std::to_string(id.n) + "," + std::to_string(id.k) +
                          "} has " + len.get_str() + " letters, cap is " + std::to_string(cap));
    std::string out;
    out.reserve(len.get_ui());
    // Iterative expansion: explicit stack of (n,k) nodes, left child first.
    std::vector<BlockId> stack{id};
    while (!stack.empty()) {
        BlockId cur = stack.back();
        stack.pop_back();
        if (cur.k == 0) {
            out.push_back('a');
        } else if (static_cast<std::uint64_t>(cur.k) == cur.n) {
            out.push_back('b');
        } else {
            stack.push_back({cur.n - 1, cur.k});
            stack.push_back({cur.n - 1, cur.k - 1});
        }
    }
    return out;
}

BigInt count_a_prefix(const BlockId& id, const BigInt& l) {
    check_id(id);
    if (l < 0 || l > binomial(id.n, id.k)) throw std::out_of_range("count_a_prefix: out of range");
    std::uint64_t n = id.n;
    std::int64_t k = id.k;
    BigInt pos = l;
    BigInt acc = 0;
    while (true) {
        if (pos == 0) return acc;
        if (k == 0) return acc + pos;  // all-'a' edge word (length 1, pos in {0,1})
        if (static_cast<std::uint64_t>(k) == n) return acc;
        if (pos == binomial(n, k)) return acc + binomial(n - 1, k);  // closed form for a full block
        BigInt left = binomial(n - 1, k - 1);
        if (pos <= left) {
            --n;
            --k;
        } else {
            acc += binomial(n - 2, k - 1);  // #a of the complete left sub-block
            pos -= left;
            --n;
        }
    }
}

BigInt height(const BlockId& id) {
    check_id(id);
    return block_height(id.n, id.k);
}

GeneralizedBlocks::GeneralizedBlocks(int alphabet_level) : n0_(alphabet_level) {
    if (alphabet_level < 1) throw std::invalid_argument("alphabet level must be >= 1");
}

void GeneralizedBlocks::check(const BlockId& id) const {
    if (!id.valid() || id.n < static_cast<std::uint64_t>(n0_))
        throw std::invalid_argument("generalized BlockId requires n >= N0 and 0 <= k <= n");
}

BigInt GeneralizedBlocks::letter_length(const BlockId& id) const {
    check(id);
    const std::uint64_t n0 = static_cast<std::uint64_t>(n0_);
    if (id.n == n0 || id.k == 0 || static_cast<std::uint64_t>(id.k) == id.n) return 1;
    {
        std::lock_guard lock(mu_);
        auto it = len_memo_.find({id.n, id.k});
        if (it != len_memo_.end()) return it->second;
    }
    BigInt len = letter_length({id.n - 1, id.k - 1}) + letter_length({id.n - 1, id.k});
    std::lock_guard lock(mu_);
    return len_memo_.emplace(std::pair{id.n, id.k}, std::move(len)).first->second;
}

int GeneralizedBlocks::letter_at(const BlockId& id, const BigInt& l) const {
    check(id);
    if (l < 1 || l > letter_length(id)) throw std::out_of_range("generalized letter_at: out of range");
    const std::uint64_t n0 = static_cast<std::uint64_t>(n0_);
    std::uint64_t n = id.n;
    std::int64_t k = id.k;
    BigInt pos = l;
    while (n > n0 && k > 0 && static_cast<std::uint64_t>(k) < n) {
        BigInt left = letter_length({n - 1, k - 1});
        if (pos <= left) {
            --n;
            --k;
        } else {
            pos -= left;
            --n;
        }
    }
    if (k == 0) return 0;
    if (static_cast<std::uint64_t>(k) == n) return n0_;
    return static_cast<int>(k);  // base line n == N0: the single letter a_k
}

std::vector<int> GeneralizedBlocks::materialize(const BlockId& id, std::uint64_t cap) const {
    check(id);
    BigInt len = letter_length(id);
    if (len > cap) throw CapExceeded("generalized word exceeds cap");
    std::vector<int> out;
    out.reserve(len.get_ui());
    const std::uint64_t n0 = static_cast<std::uint64_t>(n0_);
    std::vector<BlockId> stack{id};
    while (!stack.empty()) {
        BlockId cur = stack.back();
        stack.pop_back();
        if (cur.k == 0) {
            out.push_back(0);
        } else if (static_cast<std::uint64_t>(cur.k) == cur.n) {
            out.push_back(n0_);
        } else if (cur.n == n0) {
            out.push_back(static_cast<int>(cur.k));
        } else {
            stack.push_back({cur.n - 1, cur.k});
            stack.push_back({cur.n - 1, cur.k - 1});
        }
    }
    return out;
}

}  // namespace padic
