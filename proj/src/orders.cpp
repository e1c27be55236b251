#include "bruhat/orders.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace bruhat {

namespace {

void require_same_class(const BinaryMatrix& a, const BinaryMatrix& c, const char* who) {
    if (a.row_count() != c.row_count() || a.col_count() != c.col_count())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
    if (a.row_sums() != c.row_sums() || a.col_sums() != c.col_sums())
        throw std::invalid_argument(std::string(who) + ": margin mismatch");
}

}  // namespace

bool bruhat_leq(const BinaryMatrix& a, const BinaryMatrix& c) {
    require_same_class(a, c, "bruhat_leq");
    return entrywise_geq(sigma(a), sigma(c));
}

CoverWitness secondary_cover_check(const BinaryMatrix& c, const InterchangePos& p) {
    if (submatrix_type(c, p) != PatternType::L2)
        throw std::invalid_argument("secondary_cover_check: position does not hold L2");
    CoverWitness w{c, apply_interchange(c, p), p, {true, true, true, true}};
    for (int q = p.i + 1; q < p.j; ++q)
        if (c.at(q, p.k) != c.at(q, p.l)) {
            w.conditions[0] = false;
            break;
        }
    for (int q = p.k + 1; q < p.l; ++q)
        if (c.at(p.i, q) != c.at(p.j, q)) {
            w.conditions[1] = false;
            break;
        }
    for (int r = p.i + 1; r < p.j && (w.conditions[2] || w.conditions[3]); ++r)
        for (int q = p.k + 1; q < p.l; ++q) {
            if (c.at(r, p.k) == 0 && c.at(p.i, q) == 0 && c.at(r, q) != 0) w.conditions[2] = false;
            if (c.at(r, p.k) == 1 && c.at(p.i, q) == 1 && c.at(r, q) != 1) w.conditions[3] = false;
        }
    return w;
}

Reach secondary_leq(const BinaryMatrix& a, const BinaryMatrix& c, std::size_t budget) {
    require_same_class(a, c, "secondary_leq");
    if (a == c) return Reach::yes;
    const SigmaMatrix target = sigma(a);
    if (!entrywise_geq(target, sigma(c))) return Reach::no;  // interchanges only raise sigma

    std::unordered_set<BinaryMatrix, MatrixHash> seen;
    std::deque<BinaryMatrix> queue;
    seen.insert(c);
    queue.push_back(c);
    while (!queue.empty()) {
        if (seen.size() > budget) return Reach::exhausted;
        BinaryMatrix u = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : pattern_positions(u, PatternType::L2)) {
            BinaryMatrix v = apply_interchange(u, p);
            if (v == a) return Reach::yes;
            if (!entrywise_geq(target, sigma(v))) continue;
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    return Reach::no;
}

ClassRelations ClassRelations::build(const ClassSpec& spec, std::size_t cap) {
    ClassRelations rel;
    rel.spec_ = spec;
    rel.members_ = bruhat::members(spec, cap);
    const int nn = rel.size();
    rel.index_.reserve(static_cast<std::size_t>(nn) * 2);
    for (int t = 0; t < nn; ++t) rel.index_.emplace(rel.members_[static_cast<std::size_t>(t)], t);

    rel.cells_ = spec.rows() * spec.cols();
    rel.sig_.resize(static_cast<std::size_t>(nn) * static_cast<std::size_t>(rel.cells_));
    for (int t = 0; t < nn; ++t) {
        const SigmaMatrix s = sigma(rel.members_[static_cast<std::size_t>(t)]);
        std::size_t base = static_cast<std::size_t>(t) * static_cast<std::size_t>(rel.cells_);
        for (int i = 1; i <= spec.rows(); ++i)
            for (int j = 1; j <= spec.cols(); ++j)
                rel.sig_[base++] = static_cast<std::int16_t>(s.at(i, j));
    }

    // Single-interchange step edges u -> v, v = u after one L2 -> I2.
    std::vector<std::vector<int>> down(static_cast<std::size_t>(nn));
    for (int u = 0; u < nn; ++u)
        for (const auto& p : pattern_positions(rel.members_[static_cast<std::size_t>(u)], PatternType::L2)) {
            const BinaryMatrix v = apply_interchange(rel.members_[static_cast<std::size_t>(u)], p);
            const auto it = rel.index_.find(v);
            if (it == rel.index_.end())
                throw std::logic_error("ClassRelations: interchange left the class");
            down[static_cast<std::size_t>(u)].push_back(it->second);
        }

    // Reflexive-transitive closure over the step DAG, children first.
    rel.sec_below_.assign(static_cast<std::size_t>(nn), detail::Bitset(static_cast<std::size_t>(nn)));
    std::vector<int> state(static_cast<std::size_t>(nn), 0);  // 0 new, 1 open, 2 done
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < nn; ++root) {
        if (state[static_cast<std::size_t>(root)] == 2) continue;
        stack.emplace_back(root, 0);
        state[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            const auto& kids = down[static_cast<std::size_t>(u)];
            if (next < kids.size()) {
                const int v = kids[next++];
                if (state[static_cast<std::size_t>(v)] == 0) {
                    state[static_cast<std::size_t>(v)] = 1;
                    stack.emplace_back(v, 0);
                }
                continue;
            }
            auto& bits = rel.sec_below_[static_cast<std::size_t>(u)];
            bits.set(static_cast<std::size_t>(u));
            for (int v : kids) bits.or_with(rel.sec_below_[static_cast<std::size_t>(v)]);
            state[static_cast<std::size_t>(u)] = 2;
            stack.pop_back();
        }
    }
    return rel;
}

int ClassRelations::index_of(const BinaryMatrix& a) const {
    const auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

bool ClassRelations::bruhat_leq(int a, int c) const {
    const std::size_t pa = static_cast<std::size_t>(a) * static_cast<std::size_t>(cells_);
    const std::size_t pc = static_cast<std::size_t>(c) * static_cast<std::size_t>(cells_);
    for (int t = 0; t < cells_; ++t)
        if (sig_[pa + static_cast<std::size_t>(t)] < sig_[pc + static_cast<std::size_t>(t)])
            return false;
    return true;
}

std::vector<std::pair<int, int>> ClassRelations::secondary_covers_lemma() const {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < size(); ++c)
        for (const auto& p : pattern_positions(members_[static_cast<std::size_t>(c)], PatternType::L2)) {
            const CoverWitness w = secondary_cover_check(members_[static_cast<std::size_t>(c)], p);
            if (!w.holds()) continue;
            const int a = index_of(w.lower);
            edges.emplace_back(a, c);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<detail::Bitset> ClassRelations::transpose(const std::vector<detail::Bitset>& rel) const {
    std::vector<detail::Bitset> tr(rel.size(), detail::Bitset(rel.size()));
    for (std::size_t c = 0; c < rel.size(); ++c)
        rel[c].for_each([&](std::size_t a) { tr[a].set(c); });
    return tr;
}

std::vector<std::pair<int, int>> ClassRelations::covers_of(
    const std::vector<detail::Bitset>& below, const std::vector<detail::Bitset>& above) {
    // (a, c) is a cover iff a < c and the interval [a, c] is just {a, c}.
    std::vector<std::pair<int, int>> edges;
    for (std::size_t c = 0; c < below.size(); ++c)
        below[c].for_each([&](std::size_t a) {
            if (a == c) return;
            if (above[a].count_and(below[c]) == 2)
                edges.emplace_back(static_cast<int>(a), static_cast<int>(c));
        });
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::pair<int, int>> ClassRelations::secondary_covers_closure() const {
    return covers_of(sec_below_, transpose(sec_below_));
}

std::vector<std::pair<int, int>> ClassRelations::bruhat_covers() const {
    const int nn = size();
    std::vector<detail::Bitset> below(static_cast<std::size_t>(nn),
                                      detail::Bitset(static_cast<std::size_t>(nn)));
    for (int c = 0; c < nn; ++c)
        for (int a = 0; a < nn; ++a)
            if (bruhat_leq(a, c)) below[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(a));
    return covers_of(below, transpose(below));
}

HasseDiagram build_hasse(const ClassSpec& spec, OrderKind kind, std::size_t cap) {
    HasseDiagram h;
    h.kind = kind;
    const ClassRelations rel = ClassRelations::build(spec, cap);
    h.nodes = rel.members();
    h.edges = kind == OrderKind::secondary ? rel.secondary_covers_lemma() : rel.bruhat_covers();
    return h;
}

std::string HasseDiagram::to_dot() const {
    std::string out = "digraph hasse {\n";
    out += "  graph [label=\"";
    out += (kind == OrderKind::bruhat ? "bruhat" : "secondary");
    out += " order\"];\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        out += "  n" + std::to_string(t) + " [label=\"";
        for (int i = 1; i <= nodes[t].row_count(); ++i) {
            out += nodes[t].row_text(i);
            out += "\\l";
        }
        out += "\"];\n";
    }
    for (const auto& [a, c] : edges)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(c) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace bruhat
