#include <doctest.h>

#include <stdexcept>

#include <random>

#include "bruhat/partition.hpp"
#include "oracles.hpp"

using namespace bruhat;

TEST_SUITE("partitions") {

TEST_CASE("sort_desc") {
    CHECK(sort_desc({1, 3, 3, 1}).parts() == std::vector<int>{3, 3, 1, 1});
    CHECK(sort_desc({}).parts().empty());
    CHECK(sort_desc({3, 2, 1}).parts() == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(sort_desc({1, -1}), std::invalid_argument);
}

TEST_CASE("partition normalization and parsing") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition(std::vector<int>{}).length() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({5, 5, 3, 3, 1, 1}).to_string() == "5,5,3,3,1,1");
    CHECK(Partition::parse("5,5,3,3,1,1") == Partition({5, 5, 3, 3, 1, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK(Partition({4, 2}).part(1) == 4);
    CHECK(Partition({4, 2}).part(5) == 0);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({5, 5, 3, 3, 1, 1})) == Partition({6, 4, 4, 2, 2}));
    CHECK(conjugate(Partition({4})) == Partition({1, 1, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is an involution and reverses dominance (exhaustive to 12)") {
    for (int t = 0; t <= 12; ++t) {
        const auto parts = oracles::partitions_of(t);
        std::vector<Partition> ps;
        for (const auto& p : parts) ps.emplace_back(p);
        if (t == 0) ps.emplace_back();
        for (const auto& lam : ps) {
            CHECK(conjugate(conjugate(lam)) == lam);
            for (const auto& mu : ps)
                CHECK(dominance_leq(lam, mu) == dominance_leq(conjugate(mu), conjugate(lam)));
        }
    }
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
    CHECK(dominance_leq(Partition({3, 1}), Partition({3, 1})));
    CHECK(dominance_leq(Partition({5, 5, 3, 3, 1, 1}), Partition({6, 4, 4, 2, 2})));
    CHECK_FALSE(dominance_leq(Partition({4}), Partition({1, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("gale_ryser_feasible") {
    CHECK(gale_ryser_feasible({2, 2, 2}, {2, 2, 2}));
    CHECK_FALSE(gale_ryser_feasible({2, 2}, {3, 1}));
    CHECK_FALSE(gale_ryser_feasible({2, 2}, {2, 1}));   // unequal totals
    CHECK_FALSE(gale_ryser_feasible({-1, 1}, {0, 0})); // malformed
    CHECK(gale_ryser_feasible({}, {}));
    const auto family = special_margin(5, 5).parts();
    CHECK(gale_ryser_feasible(family, family));
}

TEST_CASE("feasibility agrees with brute-force nonemptiness (shapes to 3x3)") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            const auto realized = oracles::realized_margins(m, n);
            std::vector<int> r(static_cast<std::size_t>(m)), s(static_cast<std::size_t>(n));
            auto next = [](std::vector<int>& v, int hi) {
                for (auto& x : v) {
                    if (x < hi) {
                        ++x;
                        return true;
                    }
                    x = 0;
                }
                return false;
            };
            do {
                do {
                    const bool expect = realized.count({r, s}) > 0;
                    CHECK(gale_ryser_feasible(r, s) == expect);
                } while (next(s, m));
            } while (next(r, n));
        }
}

TEST_CASE("ryser_witness") {
    const BinaryMatrix p = ryser_witness({1, 1}, {1, 1});
    CHECK(p.row_sums() == std::vector<int>{1, 1});
    CHECK(p.ones() == 2);

    // deterministic output, frozen
    CHECK(ryser_witness({2, 2, 2}, {2, 2, 2}).to_text() == "110\n101\n011\n");

    const auto family = special_margin(5, 5).parts();  // (5,5,3,3,1,1)
    std::vector<int> increasing(family.rbegin(), family.rend());
    const BinaryMatrix w = ryser_witness(increasing, increasing);
    CHECK(w.row_sums() == increasing);
    CHECK(w.col_sums() == increasing);

    CHECK_THROWS_AS(ryser_witness({2, 2}, {3, 1}), std::invalid_argument);
}

TEST_CASE("ryser_witness margin re-check on random feasible margins") {
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> dim(1, 8);
    std::bernoulli_distribution bit(0.4);
    for (int t = 0; t < 200; ++t) {
        const int m = dim(gen), n = dim(gen);
        BinaryMatrix a(m, n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                if (bit(gen)) a.set(i, j, 1);
        const auto r = a.row_sums(), s = a.col_sums();
        const BinaryMatrix w = ryser_witness(r, s);
        CHECK(w.row_sums() == r);
        CHECK(w.col_sums() == s);
    }
}

TEST_CASE("special_margin instances") {
    CHECK(special_margin(5, 5) == Partition({5, 5, 3, 3, 1, 1}));
    CHECK(special_margin(5, 7) == Partition({5, 5, 5, 5, 3, 3, 1, 1}));
    CHECK(special_margin(6, 6) == Partition({6, 6, 6, 4, 4, 2, 2, 2}));
    CHECK_THROWS_AS(special_margin(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(special_margin(5, 8), std::invalid_argument);
    CHECK_THROWS_AS(special_margin(5, 4), std::invalid_argument);
}

TEST_CASE("verify_lemma_family closed forms and prefix differences") {
    const auto r55 = verify_lemma_family(5, 5);
    CHECK(r55.ok());
    CHECK(r55.conjugate_margin == Partition({6, 4, 4, 2, 2}));
    CHECK(r55.diff_at_k2 == 25 - 40 + 16);            // s = 3
    CHECK(r55.prefix_diffs[1] == 0);                  // s = 2: (6+4)-(5+5)
    CHECK(r55.diff_at_k3 == 0);

    const auto r57 = verify_lemma_family(5, 7);
    CHECK(r57.ok());
    CHECK(r57.diff_at_k1 == 25 - 30 + 9);             // s = 4, m = k+2

    const auto r66 = verify_lemma_family(6, 6);
    CHECK(r66.ok());
    CHECK(r66.margin == Partition({6, 6, 6, 4, 4, 2, 2, 2}));

    CHECK_THROWS_AS(verify_lemma_family(4, 4), std::invalid_argument);
}

TEST_CASE("lemma family holds across the whole tested range") {
    for (int k = 5; k <= 40; ++k)
        for (int m = k; m <= k + 2; ++m) {
            const auto rep = verify_lemma_family(k, m);
            CHECK(rep.dominated);
            CHECK(rep.strictly_below);
            CHECK(rep.closed_forms_match);
            for (long long d : rep.prefix_diffs) CHECK(d >= 0);
        }
}

}  // TEST_SUITE
