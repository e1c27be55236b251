#include "bruhat/class_enum.hpp"

#include <algorithm>

#include "bruhat/partition.hpp"

namespace bruhat {

ClassSpec ClassSpec::from_nk(int n, int k) {
    return ClassSpec{MarginPair::constant(n, k)};
}

ClassSpec ClassSpec::from_margins(std::vector<int> row_sums, std::vector<int> col_sums) {
    ClassSpec spec{MarginPair{std::move(row_sums), std::move(col_sums)}};
    if (!spec.margins.consistent())
        throw std::invalid_argument("ClassSpec: margins must be nonnegative with equal totals");
    return spec;
}

bool ClassSpec::is_constant() const noexcept {
    if (rows() != cols()) return false;
    if (rows() == 0) return true;
    const int k0 = margins.row_sums.front();
    for (int r : margins.row_sums)
        if (r != k0) return false;
    for (int s : margins.col_sums)
        if (s != k0) return false;
    return true;
}

int ClassSpec::n() const {
    if (!is_constant()) throw std::logic_error("ClassSpec::n: margins are not constant");
    return rows();
}

int ClassSpec::k() const {
    if (!is_constant()) throw std::logic_error("ClassSpec::k: margins are not constant");
    return rows() == 0 ? 0 : margins.row_sums.front();
}

std::string ClassSpec::label() const {
    if (is_constant()) return "A(" + std::to_string(n()) + "," + std::to_string(k()) + ")";
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (t) s += ',';
            s += std::to_string(v[t]);
        }
        return s + "]";
    };
    return "A(" + list(margins.row_sums) + ";" + list(margins.col_sums) + ")";
}

namespace {

struct Enumerator {
    int m, n;
    const std::vector<int>& row;
    std::vector<int> col_need;
    BinaryMatrix work;
    const std::function<bool(const BinaryMatrix&)>& visit;
    bool stopped = false;

    Enumerator(const ClassSpec& spec, const std::function<bool(const BinaryMatrix&)>& v)
        : m(spec.rows()),
          n(spec.cols()),
          row(spec.margins.row_sums),
          col_need(spec.margins.col_sums),
          work(spec.rows(), spec.cols()),
          visit(v) {}

    bool residual_feasible(int next_row) const {
        std::vector<int> rest(row.begin() + next_row, row.end());
        return gale_ryser_feasible(rest, col_need);
    }

    void fill_rows(int i) {
        if (stopped) return;
        if (i == m) {
            if (!visit(work)) stopped = true;
            return;
        }
        if (!residual_feasible(i)) return;
        fill_cells(i, 0, row[static_cast<std::size_t>(i)]);
    }

    // Cells of row i in column order, 0 before 1, so rows come out in
    // increasing binary-string order.
    void fill_cells(int i, int j, int left) {
        if (stopped) return;
        if (j == n) {
            fill_rows(i + 1);
            return;
        }
        const int cols_rest = n - j - 1;
        if (left <= cols_rest && col_need[static_cast<std::size_t>(j)] <= m - i - 1) {
            fill_cells(i, j + 1, left);
            if (stopped) return;
        }
        if (left >= 1 && left - 1 <= cols_rest && col_need[static_cast<std::size_t>(j)] >= 1) {
            work.set(i + 1, j + 1, 1);
            --col_need[static_cast<std::size_t>(j)];
            fill_cells(i, j + 1, left - 1);
            ++col_need[static_cast<std::size_t>(j)];
            work.set(i + 1, j + 1, 0);
        }
    }
};

}  // namespace

void for_each_member(const ClassSpec& spec,
                     const std::function<bool(const BinaryMatrix&)>& visit) {
    if (!spec.margins.consistent()) return;  // no members
    Enumerator e(spec, visit);
    e.fill_rows(0);
}

std::vector<BinaryMatrix> members(const ClassSpec& spec, std::size_t cap) {
    std::vector<BinaryMatrix> out;
    bool over = false;
    for_each_member(spec, [&](const BinaryMatrix& a) {
        if (out.size() >= cap) {
            over = true;
            return false;
        }
        out.push_back(a);
        return true;
    });
    if (over) throw ClassTooLarge(cap);
    return out;
}

std::uint64_t count(const ClassSpec& spec, std::size_t cap) {
    std::uint64_t c = 0;
    bool over = false;
    for_each_member(spec, [&](const BinaryMatrix&) {
        if (c >= cap) {
            over = true;
            return false;
        }
        ++c;
        return true;
    });
    if (over) throw ClassTooLarge(cap);
    return c;
}

}  // namespace bruhat
