#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "bruhat/orders.hpp"

namespace oracles {

using bruhat::BinaryMatrix;

bool margins_match(const BinaryMatrix& a, const std::vector<int>& row_sums,
                   const std::vector<int>& col_sums) {
    return a.row_sums() == row_sums && a.col_sums() == col_sums;
}

std::vector<BinaryMatrix> brute_force_class(const std::vector<int>& row_sums,
                                            const std::vector<int>& col_sums) {
    const int m = static_cast<int>(row_sums.size());
    const int n = static_cast<int>(col_sums.size());
    std::vector<BinaryMatrix> out;
    const std::uint64_t total = std::uint64_t(1) << (m * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BinaryMatrix a(m, n);
        for (int t = 0; t < m * n; ++t)
            if ((mask >> t) & 1) a.set(t / n + 1, t % n + 1, 1);
        if (margins_match(a, row_sums, col_sums)) out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::pair<std::vector<int>, std::vector<int>>> realized_margins(int m, int n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    const std::uint64_t total = std::uint64_t(1) << (m * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BinaryMatrix a(m, n);
        for (int t = 0; t < m * n; ++t)
            if ((mask >> t) & 1) a.set(t / n + 1, t % n + 1, 1);
        out.emplace(a.row_sums(), a.col_sums());
    }
    return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<BinaryMatrix>>
margin_buckets(int m, int n) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<BinaryMatrix>> out;
    const std::uint64_t total = std::uint64_t(1) << (m * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BinaryMatrix a(m, n);
        for (int t = 0; t < m * n; ++t)
            if ((mask >> t) & 1) a.set(t / n + 1, t % n + 1, 1);
        out[{a.row_sums(), a.col_sums()}].push_back(std::move(a));
    }
    for (auto& [key, bucket] : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

namespace {

std::uint64_t count_rec(int cols_left, std::vector<int> residual, const std::vector<int>& demands,
                        std::map<std::pair<int, std::vector<int>>, std::uint64_t>& memo) {
    std::sort(residual.begin(), residual.end());
    if (cols_left == 0) {
        for (int r : residual)
            if (r != 0) return 0;
        return 1;
    }
    const auto key = std::make_pair(cols_left, residual);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const int demand = demands[demands.size() - static_cast<std::size_t>(cols_left)];
    const int m = static_cast<int>(residual.size());
    std::uint64_t ways = 0;
    // choose the subset of rows receiving a one in this column
    std::vector<int> pickrows;
    std::vector<int> idx(static_cast<std::size_t>(demand));
    if (demand > m) {
        memo[key] = 0;
        return 0;
    }
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        bool feasible = true;
        std::vector<int> next = residual;
        for (int t : idx) {
            if (next[static_cast<std::size_t>(t)] <= 0) {
                feasible = false;
                break;
            }
            --next[static_cast<std::size_t>(t)];
        }
        if (feasible) ways += count_rec(cols_left - 1, std::move(next), demands, memo);
        // next combination
        int t = demand - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - demand + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < demand; ++u)
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
    memo[key] = ways;
    return ways;
}

}  // namespace

std::uint64_t recursive_count(const std::vector<int>& row_sums,
                              const std::vector<int>& col_sums) {
    long long tr = std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
    long long tc = std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
    if (tr != tc) return 0;
    std::map<std::pair<int, std::vector<int>>, std::uint64_t> memo;
    return count_rec(static_cast<int>(col_sums.size()), row_sums, col_sums, memo);
}

std::vector<std::vector<bool>> step_closure(const std::vector<BinaryMatrix>& members) {
    const int nn = static_cast<int>(members.size());
    std::unordered_map<BinaryMatrix, int, bruhat::MatrixHash> index;
    for (int t = 0; t < nn; ++t) index.emplace(members[static_cast<std::size_t>(t)], t);
    std::vector<std::vector<bool>> closure(
        static_cast<std::size_t>(nn), std::vector<bool>(static_cast<std::size_t>(nn), false));
    for (int c = 0; c < nn; ++c) {
        auto& row = closure[static_cast<std::size_t>(c)];
        std::deque<int> queue{c};
        row[static_cast<std::size_t>(c)] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const auto& p :
                 pattern_positions(members[static_cast<std::size_t>(u)], bruhat::PatternType::L2)) {
                const BinaryMatrix v =
                    apply_interchange(members[static_cast<std::size_t>(u)], p);
                const int w = index.at(v);
                if (!row[static_cast<std::size_t>(w)]) {
                    row[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return closure;
}

std::vector<std::pair<int, int>> relation_covers(const std::vector<std::vector<bool>>& rel) {
    const int nn = static_cast<int>(rel.size());
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < nn; ++c)
        for (int a = 0; a < nn; ++a) {
            if (a == c || !rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]) continue;
            bool strict_between = false;
            for (int b = 0; b < nn && !strict_between; ++b)
                strict_between = b != a && b != c &&
                                 rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] &&
                                 rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
            if (!strict_between) out.emplace_back(a, c);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> perm_of_matrix(const BinaryMatrix& a) {
    std::vector<int> perm(static_cast<std::size_t>(a.row_count()), 0);
    for (int i = 1; i <= a.row_count(); ++i)
        for (int j = 1; j <= a.col_count(); ++j)
            if (a.at(i, j)) perm[static_cast<std::size_t>(i - 1)] = j - 1;
    return perm;
}

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

}  // namespace

PermutationBruhat permutation_bruhat(const std::vector<BinaryMatrix>& members) {
    const int nn = static_cast<int>(members.size());
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> perms;
    perms.reserve(static_cast<std::size_t>(nn));
    for (int t = 0; t < nn; ++t) {
        perms.push_back(perm_of_matrix(members[static_cast<std::size_t>(t)]));
        index.emplace(perms.back(), t);
    }
    PermutationBruhat out;
    const std::size_t sz = static_cast<std::size_t>(nn);
    out.leq.assign(sz, std::vector<bool>(sz, false));
    // cover edges u -> v = u with two positions swapped, inv goes up by one
    std::vector<std::vector<int>> up(sz);
    for (int u = 0; u < nn; ++u) {
        const auto& perm = perms[static_cast<std::size_t>(u)];
        const int len = inversions(perm);
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b) {
                std::vector<int> swapped = perm;
                std::swap(swapped[a], swapped[b]);
                if (inversions(swapped) != len + 1) continue;
                const int v = index.at(swapped);
                up[static_cast<std::size_t>(u)].push_back(v);
                out.cover_edges.emplace_back(u, v);
            }
    }
    std::sort(out.cover_edges.begin(), out.cover_edges.end());
    // closure: leq[c][a] ("a <= c") by BFS upward from a
    for (int a = 0; a < nn; ++a) {
        std::deque<int> queue{a};
        std::vector<bool> seen(sz, false);
        seen[static_cast<std::size_t>(a)] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            out.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)] = true;
            for (int v : up[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    queue.push_back(v);
                }
        }
    }
    return out;
}

std::vector<std::vector<int>> partitions_of(int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, t, t);
    return out;
}

}  // namespace oracles
