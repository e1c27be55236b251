#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bruhat/matrix.hpp"

namespace bruhat {

/// Nonincreasing sequence of nonnegative integers. Trailing zeros are
/// not stored, so equality ignores them.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // must already be nonincreasing

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    long long total() const noexcept;

    /// 1-based part access; indices past the end read as 0.
    int part(std::size_t s) const noexcept;

    std::string to_string() const;  // "5,5,3,3,1,1"; empty partition -> ""
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// The multiset of v in nonincreasing order. Rejects negative entries.
Partition sort_desc(std::vector<int> v);

Partition conjugate(const Partition& p);

/// Prefix-sum comparison. Both partitions must have the same total;
/// anything else is an error, not false.
bool dominance_leq(const Partition& a, const Partition& b);

/// A(R,S) nonempty test. Malformed or infeasible margins yield false.
bool gale_ryser_feasible(const std::vector<int>& row_sums, const std::vector<int>& col_sums);

/// A member of A(R,S) with margins in the given coordinate order.
/// Deterministic: classical greedy column packing on sorted margins,
/// ties broken toward the lowest index, permuted back at the end.
/// Throws std::invalid_argument when the margins are infeasible.
BinaryMatrix ryser_witness(const std::vector<int>& row_sums, const std::vector<int>& col_sums);

/// The margin family (k^{m-3}, (k-2)^2, (k-4)^{k-3}) of length k+m-4.
/// Requires k >= 5 and m in {k, k+1, k+2}.
Partition special_margin(int k, int m);

struct LemmaFamilyReport {
    int k = 0;
    int m = 0;
    Partition margin;            // R
    Partition conjugate_margin;  // R*
    // sum(R*[1..s]) - sum(R[1..s]) for s = 1..k-1
    std::vector<long long> prefix_diffs;
    bool dominated = false;      // R <= R* in dominance over every prefix
    bool strictly_below = false; // dominated and R != R*
    long long diff_at_k3 = 0, diff_at_k2 = 0, diff_at_k1 = 0;
    long long expected_k3 = 0, expected_k2 = 0, expected_k1 = 0;
    bool closed_forms_match = false;

    bool ok() const { return dominated && strictly_below && closed_forms_match; }
};

/// Check R < R* for special_margin(k, m), including the closed-form
/// prefix differences at s = k-3, k-2, k-1:
///   s = k-3:  (k-3)m - 5k + 15
///   s = k-2:  k^2-8k+16 | k^2-7k+12 | k^2-6k+10   for m = k | k+1 | k+2
///   s = k-1:  k^2-8k+15 | k^2-7k+12 | k^2-6k+9
LemmaFamilyReport verify_lemma_family(int k, int m);

}  // namespace bruhat
