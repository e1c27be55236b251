#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bruhat/matrix.hpp"

namespace bruhat {

/// A class A(R,S); the constant-margin shorthand A(n,k) has R = S = (k,...,k).
struct ClassSpec {
    MarginPair margins;

    static ClassSpec from_nk(int n, int k);
    static ClassSpec from_margins(std::vector<int> row_sums, std::vector<int> col_sums);

    int rows() const noexcept { return static_cast<int>(margins.row_sums.size()); }
    int cols() const noexcept { return static_cast<int>(margins.col_sums.size()); }

    bool is_constant() const noexcept;  // square with all margins equal
    int n() const;                      // valid when is_constant()
    int k() const;

    std::string label() const;  // "A(4,2)" or "A([1,3,3,1];[3,1,1,3])"

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

class ClassTooLarge : public std::runtime_error {
public:
    explicit ClassTooLarge(std::size_t cap)
        : std::runtime_error("class too large: more than " + std::to_string(cap) + " members"),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

/// Visit every member of A(R,S) exactly once, in row-major lexicographic
/// order of the canonical text ('0' < '1'). The visitor returns false to
/// stop early. Branches are pruned by Gale-Ryser feasibility of the
/// residual column demands against the remaining row sums.
void for_each_member(const ClassSpec& spec,
                     const std::function<bool(const BinaryMatrix&)>& visit);

/// All members in canonical order. Throws ClassTooLarge past the cap.
std::vector<BinaryMatrix> members(const ClassSpec& spec, std::size_t cap = kDefaultEnumCap);

/// |A(R,S)|. Throws ClassTooLarge past the cap.
std::uint64_t count(const ClassSpec& spec, std::size_t cap = kDefaultEnumCap);

}  // namespace bruhat
