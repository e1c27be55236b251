#include "bruhat/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace bruhat {

MarginPair MarginPair::constant(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("MarginPair::constant: need 0 <= k <= n");
    return MarginPair{std::vector<int>(static_cast<std::size_t>(n), k),
                      std::vector<int>(static_cast<std::size_t>(n), k)};
}

long long MarginPair::row_total() const {
    return std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
}

long long MarginPair::col_total() const {
    return std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
}

bool MarginPair::consistent() const {
    for (int r : row_sums)
        if (r < 0) return false;
    for (int s : col_sums)
        if (s < 0) return false;
    return row_total() == col_total();
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : m_(rows), n_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BinaryMatrix: negative dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    BinaryMatrix a;
    a.m_ = static_cast<int>(rows.size());
    a.n_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    a.e_.reserve(static_cast<std::size_t>(a.m_) * static_cast<std::size_t>(a.n_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != a.n_)
            throw std::invalid_argument("BinaryMatrix::from_rows: ragged rows");
        for (char c : r) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("BinaryMatrix::from_rows: entries must be '0' or '1'");
            a.e_.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return a;
}

BinaryMatrix BinaryMatrix::from_text(std::string_view text) {
    std::vector<std::string> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        rows.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return from_rows(rows);
}

void BinaryMatrix::check_cell(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_)
        throw std::out_of_range("BinaryMatrix: index out of range");
}

int BinaryMatrix::at(int i, int j) const {
    check_cell(i, j);
    return e_[idx(i, j)];
}

void BinaryMatrix::set(int i, int j, int v) {
    check_cell(i, j);
    if (v != 0 && v != 1) throw std::invalid_argument("BinaryMatrix::set: entry must be 0 or 1");
    e_[idx(i, j)] = static_cast<std::uint8_t>(v);
}

std::vector<int> BinaryMatrix::row_sums() const {
    std::vector<int> r(static_cast<std::size_t>(m_), 0);
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j) r[static_cast<std::size_t>(i - 1)] += e_[idx(i, j)];
    return r;
}

std::vector<int> BinaryMatrix::col_sums() const {
    std::vector<int> s(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j) s[static_cast<std::size_t>(j - 1)] += e_[idx(i, j)];
    return s;
}

MarginPair BinaryMatrix::margins() const { return MarginPair{row_sums(), col_sums()}; }

int BinaryMatrix::ones() const {
    int c = 0;
    for (auto v : e_) c += v;
    return c;
}

std::string BinaryMatrix::row_text(int i) const {
    if (i < 1 || i > m_) throw std::out_of_range("BinaryMatrix::row_text: row out of range");
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int j = 1; j <= n_; ++j) s[static_cast<std::size_t>(j - 1)] = e_[idx(i, j)] ? '1' : '0';
    return s;
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_ + 1));
    for (int i = 1; i <= m_; ++i) {
        out += row_text(i);
        out += '\n';
    }
    return out;
}

BinaryMatrix BinaryMatrix::slice(int i1, int i2, int j1, int j2) const {
    if (i1 < 1 || j1 < 1 || i2 > m_ || j2 > n_ || i1 > i2 + 1 || j1 > j2 + 1)
        throw std::out_of_range("BinaryMatrix::slice: bounds");
    BinaryMatrix b(i2 - i1 + 1, j2 - j1 + 1);
    for (int i = i1; i <= i2; ++i)
        for (int j = j1; j <= j2; ++j) b.set(i - i1 + 1, j - j1 + 1, at(i, j));
    return b;
}

std::size_t MatrixHash::operator()(const BinaryMatrix& a) const noexcept {
    // FNV-1a over dimensions and entries
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::size_t>(a.m_));
    mix(static_cast<std::size_t>(a.n_));
    for (auto b : a.e_) mix(b);
    return h;
}

SigmaMatrix sigma(const BinaryMatrix& a) {
    SigmaMatrix s;
    s.m_ = a.row_count();
    s.n_ = a.col_count();
    s.s_.assign(static_cast<std::size_t>(s.m_) * static_cast<std::size_t>(s.n_), 0);
    for (int i = 1; i <= s.m_; ++i) {
        int row_acc = 0;
        for (int j = 1; j <= s.n_; ++j) {
            row_acc += a.at(i, j);
            const std::size_t t =
                static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(s.n_) +
                static_cast<std::size_t>(j - 1);
            s.s_[t] = row_acc + (i > 1 ? s.s_[t - static_cast<std::size_t>(s.n_)] : 0);
        }
    }
    return s;
}

int SigmaMatrix::at(int i, int j) const {
    if (i == 0 || j == 0) return 0;
    if (i < 0 || i > m_ || j < 0 || j > n_)
        throw std::out_of_range("SigmaMatrix: index out of range");
    return s_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j - 1)];
}

bool entrywise_geq(const SigmaMatrix& p, const SigmaMatrix& q) {
    if (p.row_count() != q.row_count() || p.col_count() != q.col_count())
        throw std::invalid_argument("entrywise_geq: shape mismatch");
    for (int i = 1; i <= p.row_count(); ++i)
        for (int j = 1; j <= p.col_count(); ++j)
            if (p.at(i, j) < q.at(i, j)) return false;
    return true;
}

InterchangePos::InterchangePos(int i_, int j_, int k_, int l_) : i(i_), j(j_), k(k_), l(l_) {
    if (i < 1 || k < 1 || i >= j || k >= l)
        throw std::invalid_argument("InterchangePos: need 1 <= i < j and 1 <= k < l");
}

void InterchangePos::check_bounds(const BinaryMatrix& a) const {
    if (j > a.row_count() || l > a.col_count())
        throw std::out_of_range("InterchangePos: position outside the matrix");
}

PatternType submatrix_type(const BinaryMatrix& a, const InterchangePos& p) {
    p.check_bounds(a);
    const int tl = a.at(p.i, p.k), tr = a.at(p.i, p.l);
    const int bl = a.at(p.j, p.k), br = a.at(p.j, p.l);
    if (tl == 0 && tr == 1 && bl == 1 && br == 0) return PatternType::L2;
    if (tl == 1 && tr == 0 && bl == 0 && br == 1) return PatternType::I2;
    return PatternType::Other;
}

std::vector<InterchangePos> pattern_positions(const BinaryMatrix& a, PatternType t) {
    std::vector<InterchangePos> out;
    const int m = a.row_count(), n = a.col_count();
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = 1; k < n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    InterchangePos p(i, j, k, l);
                    if (submatrix_type(a, p) == t) out.push_back(p);
                }
    return out;
}

BinaryMatrix apply_interchange(const BinaryMatrix& a, const InterchangePos& p) {
    const PatternType t = submatrix_type(a, p);
    if (t == PatternType::Other)
        throw std::invalid_argument("apply_interchange: position holds neither L2 nor I2");
    BinaryMatrix b = a;
    b.set(p.i, p.k, 1 - a.at(p.i, p.k));
    b.set(p.i, p.l, 1 - a.at(p.i, p.l));
    b.set(p.j, p.k, 1 - a.at(p.j, p.k));
    b.set(p.j, p.l, 1 - a.at(p.j, p.l));
    return b;
}

BinaryMatrix complement_rotate(const BinaryMatrix& a) {
    const int m = a.row_count(), n = a.col_count();
    BinaryMatrix b(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) b.set(i, j, 1 - a.at(m + 1 - i, n + 1 - j));
    return b;
}

BinaryMatrix block_assemble(const BinaryMatrix& v, const BinaryMatrix& g1,
                            const BinaryMatrix& g2, const BinaryMatrix& g3) {
    if (g1.row_count() != v.row_count() || g2.col_count() != v.col_count() ||
        g3.row_count() != g2.row_count() || g3.col_count() != g1.col_count())
        throw std::invalid_argument("block_assemble: block shapes do not conform");
    const int m = v.row_count() + g2.row_count();
    const int n = v.col_count() + g1.col_count();
    BinaryMatrix out(m, n);
    for (int i = 1; i <= v.row_count(); ++i) {
        for (int j = 1; j <= v.col_count(); ++j) out.set(i, j, v.at(i, j));
        for (int j = 1; j <= g1.col_count(); ++j) out.set(i, v.col_count() + j, g1.at(i, j));
    }
    for (int i = 1; i <= g2.row_count(); ++i) {
        for (int j = 1; j <= g2.col_count(); ++j) out.set(v.row_count() + i, j, g2.at(i, j));
        for (int j = 1; j <= g3.col_count(); ++j)
            out.set(v.row_count() + i, v.col_count() + j, g3.at(i, j));
    }
    return out;
}

BinaryMatrix direct_sum(const BinaryMatrix& m, const BinaryMatrix& g) {
    BinaryMatrix out(m.row_count() + g.row_count(), m.col_count() + g.col_count());
    for (int i = 1; i <= m.row_count(); ++i)
        for (int j = 1; j <= m.col_count(); ++j) out.set(i, j, m.at(i, j));
    for (int i = 1; i <= g.row_count(); ++i)
        for (int j = 1; j <= g.col_count(); ++j)
            out.set(m.row_count() + i, m.col_count() + j, g.at(i, j));
    return out;
}

}  // namespace bruhat
