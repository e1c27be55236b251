#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat/class_enum.hpp"
#include "bruhat/detail/bitset.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

enum class OrderKind { bruhat, secondary };

/// Evidence that `upper` covers `lower` in the secondary order: the
/// interchange rectangle plus the four local conditions. The cover holds
/// iff all four are true.
struct CoverWitness {
    BinaryMatrix upper;
    BinaryMatrix lower;  // = apply_interchange(upper, pos)
    InterchangePos pos;
    std::array<bool, 4> conditions{};

    bool holds() const noexcept {
        return conditions[0] && conditions[1] && conditions[2] && conditions[3];
    }
};

/// A <= C in the Bruhat order, i.e. sigma(A) >= sigma(C) entrywise.
/// Requires equal shapes and equal margins.
bool bruhat_leq(const BinaryMatrix& a, const BinaryMatrix& c);

/// Evaluate the four cover conditions for the L2 -> I2 interchange of C
/// at p. Requires C to hold L2 at p. With entries a_pq of C and the
/// rectangle rows i < j, columns k < l:
///   (1) a_pk = a_pl for all i < p < j
///   (2) a_iq = a_jq for all k < q < l
///   (3) a_pk = 0 and a_iq = 0 imply a_pq = 0  (interior p, q)
///   (4) a_pk = 1 and a_iq = 1 imply a_pq = 1  (interior p, q)
CoverWitness secondary_cover_check(const BinaryMatrix& c, const InterchangePos& p);

enum class Reach { yes, no, exhausted };

inline constexpr std::size_t kDefaultBfsBudget = 1'000'000;

/// A <= C in the secondary order: breadth-first search from C applying
/// every L2 -> I2 replacement, memoizing visited matrices. `exhausted`
/// once the visited set passes the budget without a decision.
Reach secondary_leq(const BinaryMatrix& a, const BinaryMatrix& c,
                    std::size_t budget = kDefaultBfsBudget);

/// Nodes are the class members in canonical enumeration order; edges are
/// cover pairs (lower_index, upper_index), sorted.
struct HasseDiagram {
    OrderKind kind = OrderKind::bruhat;
    std::vector<BinaryMatrix> nodes;
    std::vector<std::pair<int, int>> edges;

    std::string to_dot() const;
};

/// Cap on class size for whole-class order computations (quadratic and
/// cubic work; far below the enumeration cap on purpose).
inline constexpr std::size_t kDefaultPairwiseCap = 6000;

/// For the secondary order the edges come from the four-condition cover
/// test over all members and L2 positions; for the Bruhat order they are
/// the transitive reduction of the full relation.
HasseDiagram build_hasse(const ClassSpec& spec, OrderKind kind,
                         std::size_t cap = kDefaultPairwiseCap);

/// Both full order relations over one class. The secondary order is the
/// reflexive-transitive closure of all single L2 -> I2 interchange edges;
/// the Bruhat order compares cached sigma tables.
class ClassRelations {
public:
    static ClassRelations build(const ClassSpec& spec, std::size_t cap = kDefaultPairwiseCap);

    const ClassSpec& spec() const noexcept { return spec_; }
    const std::vector<BinaryMatrix>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    int index_of(const BinaryMatrix& a) const;  // -1 when absent

    bool secondary_leq(int a, int c) const { return sec_below_[static_cast<std::size_t>(c)].test(static_cast<std::size_t>(a)); }
    bool bruhat_leq(int a, int c) const;

    std::vector<std::pair<int, int>> secondary_covers_lemma() const;
    std::vector<std::pair<int, int>> secondary_covers_closure() const;
    std::vector<std::pair<int, int>> bruhat_covers() const;

private:
    ClassSpec spec_;
    std::vector<BinaryMatrix> members_;
    std::unordered_map<BinaryMatrix, int, MatrixHash> index_;
    int cells_ = 0;
    std::vector<std::int16_t> sig_;  // size() * cells_, row-major per member
    std::vector<detail::Bitset> sec_below_;  // sec_below_[c] = {a : a <= c}

    std::vector<detail::Bitset> transpose(const std::vector<detail::Bitset>& rel) const;
    static std::vector<std::pair<int, int>> covers_of(const std::vector<detail::Bitset>& below,
                                                      const std::vector<detail::Bitset>& above);
};

}  // namespace bruhat
