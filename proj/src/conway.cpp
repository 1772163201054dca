#include "padic/conway.hpp"

#include <stdexcept>

namespace padic {

std::vector<std::uint64_t> conway_sequence(std::size_t j_max) {
    if (j_max < 2) throw std::invalid_argument("conway_sequence: need j_max >= 2");
    std::vector<std::uint64_t> c(j_max + 1);  // 1-based
    c[1] = c[2] = 1;
    for (std::size_t j = 3; j <= j_max; ++j) c[j] = c[c[j - 1]] + c[j - c[j - 1]];
    return c;
}

std::vector<int> d_sequence(std::size_t j_max) {
    if (j_max < 3) throw std::invalid_argument("d_sequence: need j_max >= 3");
    std::vector<std::uint64_t> c = conway_sequence(j_max);
    std::vector<int> d;
    d.reserve(j_max - 2);
    for (std::size_t j = 3; j <= j_max; ++j)
        d.push_back(2 * static_cast<int>(c[j] - c[j - 1]) - 1);
    return d;
}

std::int64_t concatenation_mismatch(int lines) {
    if (lines < 1) throw std::invalid_argument("concatenation_mismatch: need lines >= 1");
    std::string words;
    for (int n = 1; n <= lines; ++n)
        for (int k = 0; k <= n; ++k) words += materialize({static_cast<std::uint64_t>(n), k});
    std::vector<int> d = d_sequence(words.size() + 2);
    for (std::size_t i = 0; i < words.size(); ++i)
        if (d[i] != letter_increment(words[i])) return static_cast<std::int64_t>(i);
    return -1;
}

std::string interleave(const BlockId& id, std::uint64_t cap) {
    if (!id.valid() || id.k == 0 || static_cast<std::uint64_t>(id.k) == id.n)
        throw std::invalid_argument("interleave needs 0 < k < n");
    std::string left = materialize({id.n - 1, id.k - 1}, cap);
    std::string right = materialize({id.n - 1, id.k}, cap);
    auto cut_after = [](const std::string& w, char c) {
        std::vector<std::string> pieces;
        std::string cur;
        for (char ch : w) {
            cur.push_back(ch);
            if (ch == c) {
                pieces.push_back(std::move(cur));
                cur.clear();
            }
        }
        if (!cur.empty()) pieces.push_back(std::move(cur));
        return pieces;
    };
    std::vector<std::string> lp = cut_after(left, 'a');
    std::vector<std::string> rp = cut_after(right, 'b');
    std::string out;
    std::size_t i = 0, j = 0;
    while (i < lp.size() || j < rp.size()) {
        if (i < lp.size()) out += lp[i++];
        if (j < rp.size()) out += rp[j++];
    }
    return out;
}

}  // namespace padic
