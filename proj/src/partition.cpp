#include "bruhat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bruhat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t s = 0; s < parts_.size(); ++s) {
        if (parts_[s] < 0) throw std::invalid_argument("Partition: negative part");
        if (s > 0 && parts_[s] > parts_[s - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::total() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(std::size_t s) const noexcept {
    return (s >= 1 && s <= parts_.size()) ? parts_[s - 1] : 0;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t s = 0; s < parts_.size(); ++s) {
        if (s) out += ',';
        out += std::to_string(parts_[s]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        int v = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + comma;
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last)
            throw std::invalid_argument("Partition::parse: bad integer");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition sort_desc(std::vector<int> v) {
    for (int x : v)
        if (x < 0) throw std::invalid_argument("sort_desc: negative entry");
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    const int first = p.part(1);
    out.reserve(static_cast<std::size_t>(first));
    for (int i = 1; i <= first; ++i) {
        int c = 0;
        for (int x : p.parts())
            if (x >= i) ++c;
        out.push_back(c);
    }
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw std::invalid_argument("dominance_leq: partitions of different totals");
    const std::size_t len = std::max(a.length(), b.length());
    long long pa = 0, pb = 0;
    for (std::size_t s = 1; s <= len; ++s) {
        pa += a.part(s);
        pb += b.part(s);
        if (pa > pb) return false;
    }
    return true;
}

bool gale_ryser_feasible(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
    long long tr = 0, tc = 0;
    for (int r : row_sums) {
        if (r < 0 || r > static_cast<int>(col_sums.size())) return false;
        tr += r;
    }
    for (int s : col_sums) {
        if (s < 0 || s > static_cast<int>(row_sums.size())) return false;
        tc += s;
    }
    if (tr != tc) return false;
    return dominance_leq(sort_desc(col_sums), conjugate(sort_desc(row_sums)));
}

BinaryMatrix ryser_witness(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
    if (!gale_ryser_feasible(row_sums, col_sums))
        throw std::invalid_argument("ryser_witness: infeasible margins");
    const int m = static_cast<int>(row_sums.size());
    const int n = static_cast<int>(col_sums.size());

    // Sorted views; stable so that equal margins keep their original order.
    std::vector<int> row_order(static_cast<std::size_t>(m)), col_order(static_cast<std::size_t>(n));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](int a, int b) { return row_sums[static_cast<std::size_t>(a)] >
                                                row_sums[static_cast<std::size_t>(b)]; });
    std::stable_sort(col_order.begin(), col_order.end(),
                     [&](int a, int b) { return col_sums[static_cast<std::size_t>(a)] >
                                                col_sums[static_cast<std::size_t>(b)]; });

    std::vector<int> residual(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r)
        residual[static_cast<std::size_t>(r)] = row_sums[static_cast<std::size_t>(row_order[static_cast<std::size_t>(r)])];

    // work[r][c] over sorted coordinates
    BinaryMatrix work(m, n);
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int c = 0; c < n; ++c) {
        const int demand = col_sums[static_cast<std::size_t>(col_order[static_cast<std::size_t>(c)])];
        std::iota(pick.begin(), pick.end(), 0);
        std::stable_sort(pick.begin(), pick.end(), [&](int a, int b) {
            return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
        });
        for (int t = 0; t < demand; ++t) {
            const int r = pick[static_cast<std::size_t>(t)];
            if (residual[static_cast<std::size_t>(r)] <= 0)
                throw std::logic_error("ryser_witness: greedy packing failed");
            work.set(r + 1, c + 1, 1);
            --residual[static_cast<std::size_t>(r)];
        }
    }

    BinaryMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (work.at(r + 1, c + 1))
                out.set(row_order[static_cast<std::size_t>(r)] + 1,
                        col_order[static_cast<std::size_t>(c)] + 1, 1);

    if (out.row_sums() != row_sums || out.col_sums() != col_sums)
        throw std::logic_error("ryser_witness: margin check failed");
    return out;
}

static void check_family_range(int k, int m) {
    if (k < 5 || m < k || m > k + 2)
        throw std::invalid_argument("special margin family: need k >= 5 and m in {k, k+1, k+2}");
}

Partition special_margin(int k, int m) {
    check_family_range(k, m);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(k + m - 4));
    parts.insert(parts.end(), static_cast<std::size_t>(m - 3), k);
    parts.insert(parts.end(), 2, k - 2);
    parts.insert(parts.end(), static_cast<std::size_t>(k - 3), k - 4);
    return Partition(std::move(parts));
}

LemmaFamilyReport verify_lemma_family(int k, int m) {
    check_family_range(k, m);
    LemmaFamilyReport rep;
    rep.k = k;
    rep.m = m;
    rep.margin = special_margin(k, m);
    rep.conjugate_margin = conjugate(rep.margin);

    long long pu = 0, pv = 0;
    rep.prefix_diffs.reserve(static_cast<std::size_t>(k - 1));
    for (int s = 1; s <= k - 1; ++s) {
        pu += rep.margin.part(static_cast<std::size_t>(s));
        pv += rep.conjugate_margin.part(static_cast<std::size_t>(s));
        rep.prefix_diffs.push_back(pv - pu);
    }

    rep.dominated = dominance_leq(rep.margin, rep.conjugate_margin);
    rep.strictly_below = rep.dominated && !(rep.margin == rep.conjugate_margin);

    const long long kk = k;
    rep.diff_at_k3 = rep.prefix_diffs[static_cast<std::size_t>(k - 4)];
    rep.diff_at_k2 = rep.prefix_diffs[static_cast<std::size_t>(k - 3)];
    rep.diff_at_k1 = rep.prefix_diffs[static_cast<std::size_t>(k - 2)];
    rep.expected_k3 = (kk - 3) * m - 5 * kk + 15;
    if (m == k) {
        rep.expected_k2 = kk * kk - 8 * kk + 16;
        rep.expected_k1 = kk * kk - 8 * kk + 15;
    } else if (m == k + 1) {
        rep.expected_k2 = kk * kk - 7 * kk + 12;
        rep.expected_k1 = kk * kk - 7 * kk + 12;
    } else {
        rep.expected_k2 = kk * kk - 6 * kk + 10;
        rep.expected_k1 = kk * kk - 6 * kk + 9;
    }
    rep.closed_forms_match = rep.diff_at_k3 == rep.expected_k3 &&
                             rep.diff_at_k2 == rep.expected_k2 &&
                             rep.diff_at_k1 == rep.expected_k1;
    return rep;
}

}  // namespace bruhat
