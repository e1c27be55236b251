#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// Row and column sum vectors (R, S) of a matrix class A(R, S).
struct MarginPair {
    std::vector<int> row_sums;
    std::vector<int> col_sums;

    static MarginPair constant(int n, int k);

    long long row_total() const;
    long long col_total() const;
    bool consistent() const;  // nonnegative entries, equal totals

    friend bool operator==(const MarginPair&, const MarginPair&) = default;
};

/// Dense (0,1)-matrix, row-major bytes. Entry access is 1-based
/// throughout the public API, matching the usual matrix conventions of
/// this domain. Zero-dimensional matrices are allowed (direct-sum unit).
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);  // zero-filled

    static BinaryMatrix from_rows(const std::vector<std::string>& rows);
    static BinaryMatrix from_text(std::string_view text);

    int row_count() const noexcept { return m_; }
    int col_count() const noexcept { return n_; }
    bool empty() const noexcept { return m_ == 0 || n_ == 0; }

    int at(int i, int j) const;
    void set(int i, int j, int v);

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    MarginPair margins() const;
    int ones() const;

    std::string row_text(int i) const;
    std::string to_text() const;  // canonical: one '0'/'1' line per row

    /// The submatrix in rows [i1, i2] and columns [j1, j2], inclusive, 1-based.
    BinaryMatrix slice(int i1, int i2, int j1, int j2) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
    // Shape first, then row-major entries; on a fixed shape this is the
    // canonical text order ('0' < '1').
    friend auto operator<=>(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<std::uint8_t> e_;

    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }
    void check_cell(int i, int j) const;

    friend struct MatrixHash;
};

struct MatrixHash {
    std::size_t operator()(const BinaryMatrix& a) const noexcept;
};

/// Matrix of top-left partial sums sigma_ij(A); the Bruhat order compares
/// these entrywise.
class SigmaMatrix {
public:
    SigmaMatrix() = default;

    int row_count() const noexcept { return m_; }
    int col_count() const noexcept { return n_; }

    /// 1-based; a row or column index of 0 reads as 0.
    int at(int i, int j) const;

    friend bool operator==(const SigmaMatrix&, const SigmaMatrix&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<int> s_;

    friend SigmaMatrix sigma(const BinaryMatrix&);
};

SigmaMatrix sigma(const BinaryMatrix& a);

/// Entrywise P >= Q. Throws std::invalid_argument on shape mismatch.
bool entrywise_geq(const SigmaMatrix& p, const SigmaMatrix& q);

/// A 2x2 submatrix selector: rows {i, j} with i < j and columns {k, l}
/// with k < l, all 1-based.
struct InterchangePos {
    int i, j, k, l;

    InterchangePos(int i_, int j_, int k_, int l_);
    void check_bounds(const BinaryMatrix& a) const;

    friend bool operator==(const InterchangePos&, const InterchangePos&) = default;
};

enum class PatternType { L2, I2, Other };

PatternType submatrix_type(const BinaryMatrix& a, const InterchangePos& p);

/// All positions whose 2x2 submatrix equals the given pattern, in
/// lexicographic (i, j, k, l) order.
std::vector<InterchangePos> pattern_positions(const BinaryMatrix& a, PatternType t);

/// Swap the 2x2 pattern at p between L2 = [01;10] and I2 = [10;01].
/// Margins are preserved. Throws if the submatrix is neither pattern.
BinaryMatrix apply_interchange(const BinaryMatrix& a, const InterchangePos& p);

/// b[i][j] = 1 - a[m+1-i][n+1-j]. An involution; carries A(R,S) onto the
/// complementary class A(U,Q) with U = (n-r_m,...,n-r_1), Q = (m-s_n,...,m-s_1).
BinaryMatrix complement_rotate(const BinaryMatrix& a);

/// [[v, g1], [g2, g3]] with conforming shapes. Validates shapes only;
/// margins are the caller's concern.
BinaryMatrix block_assemble(const BinaryMatrix& v, const BinaryMatrix& g1,
                            const BinaryMatrix& g2, const BinaryMatrix& g3);

/// diag(m, g); margins concatenate.
BinaryMatrix direct_sum(const BinaryMatrix& m, const BinaryMatrix& g);

}  // namespace bruhat
