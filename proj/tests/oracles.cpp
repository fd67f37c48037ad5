#include "oracles.hpp"

#include <array>
#include <numeric>

namespace oracle {

namespace {

struct PairIndex {
    int v;
    std::vector<std::vector<int>> idx;  // idx[i][j] for i<j, 1-based
    explicit PairIndex(int vcount) : v(vcount) {
        idx.assign(static_cast<std::size_t>(v) + 1,
                   std::vector<int>(static_cast<std::size_t>(v) + 1, -1));
        int b = 0;
        for (int i = 1; i <= v; ++i)
            for (int j = i + 1; j <= v; ++j) idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b++;
    }
    int bits() const { return v * (v - 1) / 2; }
    int of(int i, int j) const {
        if (i > j) std::swap(i, j);
        return idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

bool mask_connected(unsigned mask, int v, const PairIndex& pi) {
    std::vector<int> stack{1};
    std::vector<char> seen(static_cast<std::size_t>(v) + 1, 0);
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++count;
        for (int y = 1; y <= v; ++y) {
            if (y == x || seen[static_cast<std::size_t>(y)]) continue;
            if (mask & (1u << pi.of(x, y))) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return count == v;
}

}  // namespace

std::vector<Graph> connected_isomorphism_classes(int v) {
    PairIndex pi(v);
    const int bits = pi.bits();

    // permutation remap tables
    std::vector<int> perm(static_cast<std::size_t>(v));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> table(static_cast<std::size_t>(bits));
        for (int i = 1; i <= v; ++i)
            for (int j = i + 1; j <= v; ++j)
                table[static_cast<std::size_t>(pi.of(i, j))] =
                    pi.of(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
        remaps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<unsigned> canon;
    for (unsigned mask = 1; mask < (1u << bits); ++mask) {
        if (!mask_connected(mask, v, pi)) continue;
        unsigned best = mask;
        for (const auto& table : remaps) {
            unsigned m = 0;
            unsigned rest = mask;
            while (rest) {
                int b = __builtin_ctz(rest);
                rest &= rest - 1;
                m |= 1u << table[static_cast<std::size_t>(b)];
            }
            best = std::min(best, m);
            if (best < mask) break;  // not canonical; its class was/will be seen at `best`
        }
        if (best == mask) canon.insert(mask);
    }
    std::vector<Graph> out;
    for (unsigned mask : canon) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= v; ++i)
            for (int j = i + 1; j <= v; ++j)
                if (mask & (1u << pi.of(i, j))) edges.emplace_back(i, j);
        out.emplace_back(v, std::move(edges));
    }
    return out;
}

}  // namespace oracle
