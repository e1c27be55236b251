#include <doctest.h>

#include <stdexcept>

#include <random>

#include "bruhat/matrix.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {

BinaryMatrix seed_a() { return BinaryMatrix::from_rows({"1000", "1011", "1101", "0001"}); }
BinaryMatrix seed_c() { return BinaryMatrix::from_rows({"0001", "1011", "1101", "1000"}); }
BinaryMatrix seed_d() { return BinaryMatrix::from_rows({"0001", "1101", "1011", "1000"}); }

BinaryMatrix random_matrix(std::mt19937& gen, int max_dim = 6) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::bernoulli_distribution bit(0.5);
    BinaryMatrix a(dim(gen), dim(gen));
    for (int i = 1; i <= a.row_count(); ++i)
        for (int j = 1; j <= a.col_count(); ++j)
            if (bit(gen)) a.set(i, j, 1);
    return a;
}

void check_sigma_table(const BinaryMatrix& a, const int (&expect)[4][4]) {
    const SigmaMatrix s = sigma(a);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(s.at(i, j) == expect[i - 1][j - 1]);
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction and 1-based access") {
    BinaryMatrix a = BinaryMatrix::from_rows({"10", "01"});
    CHECK(a.row_count() == 2);
    CHECK(a.at(1, 1) == 1);
    CHECK(a.at(1, 2) == 0);
    CHECK(a.at(2, 2) == 1);
    CHECK_THROWS_AS((void)a.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS((void)a.at(1, 3), std::out_of_range);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"10", "0"}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"2"}), std::invalid_argument);
    CHECK(BinaryMatrix().empty());
}

TEST_CASE("text round trip") {
    std::mt19937 gen(7);
    for (int t = 0; t < 50; ++t) {
        const BinaryMatrix a = random_matrix(gen);
        CHECK(BinaryMatrix::from_text(a.to_text()) == a);
    }
    const BinaryMatrix a = seed_a();
    CHECK(a.to_text() == "1000\n1011\n1101\n0001\n");
}

TEST_CASE("canonical order compares rows as binary strings") {
    const BinaryMatrix l2 = BinaryMatrix::from_rows({"01", "10"});
    const BinaryMatrix i2 = BinaryMatrix::from_rows({"10", "01"});
    CHECK(l2 < i2);
}

TEST_CASE("sigma of the three 4x4 matrices matches the known tables") {
    const int sa[4][4] = {{1, 1, 1, 1}, {2, 2, 3, 4}, {3, 4, 5, 7}, {3, 4, 5, 8}};
    const int sc[4][4] = {{0, 0, 0, 1}, {1, 1, 2, 4}, {2, 3, 4, 7}, {3, 4, 5, 8}};
    const int sd[4][4] = {{0, 0, 0, 1}, {1, 2, 2, 4}, {2, 3, 4, 7}, {3, 4, 5, 8}};
    check_sigma_table(seed_a(), sa);
    check_sigma_table(seed_c(), sc);
    check_sigma_table(seed_d(), sd);
}

TEST_CASE("sigma of a zero matrix is zero") {
    const SigmaMatrix s = sigma(BinaryMatrix(3, 5));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(s.at(i, j) == 0);
}

TEST_CASE("sigma is monotone with unit increments and recovers the matrix") {
    std::mt19937 gen(11);
    for (int t = 0; t < 50; ++t) {
        const BinaryMatrix a = random_matrix(gen);
        const SigmaMatrix s = sigma(a);
        CHECK(s.at(a.row_count(), a.col_count()) == a.ones());
        for (int i = 1; i <= a.row_count(); ++i)
            for (int j = 1; j <= a.col_count(); ++j) {
                CHECK(s.at(i, j) >= s.at(i - 1, j));
                CHECK(s.at(i, j) >= s.at(i, j - 1));
                const int delta = s.at(i, j) - s.at(i - 1, j) - s.at(i, j - 1) + s.at(i - 1, j - 1);
                CHECK(delta == a.at(i, j));  // injectivity: entries recoverable
            }
    }
}

TEST_CASE("entrywise_geq on the known sigma chain") {
    CHECK(entrywise_geq(sigma(seed_a()), sigma(seed_c())));
    CHECK(entrywise_geq(sigma(seed_a()), sigma(seed_d())));
    CHECK(entrywise_geq(sigma(seed_d()), sigma(seed_c())));
    CHECK(entrywise_geq(sigma(seed_a()), sigma(seed_a())));
    CHECK_FALSE(entrywise_geq(sigma(seed_c()), sigma(seed_a())));
    CHECK_THROWS_AS(entrywise_geq(sigma(BinaryMatrix(2, 2)), sigma(BinaryMatrix(2, 3))),
                    std::invalid_argument);
}

TEST_CASE("entrywise_geq is a partial order on sigma values") {
    std::mt19937 gen(13);
    std::vector<SigmaMatrix> sigmas;
    for (int t = 0; t < 12; ++t) {
        BinaryMatrix a(3, 3);
        std::bernoulli_distribution bit(0.5);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (bit(gen)) a.set(i, j, 1);
        sigmas.push_back(sigma(a));
    }
    for (const auto& p : sigmas)
        for (const auto& q : sigmas) {
            if (entrywise_geq(p, q) && entrywise_geq(q, p)) CHECK(p == q);  // antisymmetry
            for (const auto& r : sigmas)
                if (entrywise_geq(p, q) && entrywise_geq(q, r)) CHECK(entrywise_geq(p, r));
        }
}

TEST_CASE("submatrix_type classification") {
    CHECK(submatrix_type(seed_c(), InterchangePos(1, 4, 1, 4)) == PatternType::L2);
    CHECK(submatrix_type(BinaryMatrix::from_rows({"10", "01"}), InterchangePos(1, 2, 1, 2)) ==
          PatternType::I2);
    CHECK(submatrix_type(BinaryMatrix::from_rows({"11", "11"}), InterchangePos(1, 2, 1, 2)) ==
          PatternType::Other);
    CHECK_THROWS_AS(submatrix_type(seed_c(), InterchangePos(1, 5, 1, 4)), std::out_of_range);
    CHECK_THROWS_AS(InterchangePos(2, 2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(InterchangePos(1, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("apply_interchange moves between the seed matrices") {
    CHECK(apply_interchange(seed_c(), InterchangePos(1, 4, 1, 4)) == seed_a());
    CHECK(apply_interchange(seed_c(), InterchangePos(2, 3, 2, 3)) == seed_d());
    CHECK_THROWS_AS(apply_interchange(BinaryMatrix::from_rows({"11", "11"}),
                                      InterchangePos(1, 2, 1, 2)),
                    std::invalid_argument);
}

TEST_CASE("interchange is an involution and preserves margins") {
    std::mt19937 gen(17);
    int tried = 0;
    while (tried < 40) {
        const BinaryMatrix a = random_matrix(gen);
        const auto positions = pattern_positions(a, PatternType::L2);
        if (positions.empty()) continue;
        ++tried;
        for (const auto& p : positions) {
            const BinaryMatrix b = apply_interchange(a, p);
            CHECK(b.row_sums() == a.row_sums());
            CHECK(b.col_sums() == a.col_sums());
            CHECK(apply_interchange(b, p) == a);
        }
    }
}

TEST_CASE("complement_rotate basics") {
    BinaryMatrix ones(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) ones.set(i, j, 1);
    CHECK(complement_rotate(ones) == BinaryMatrix(3, 3));

    std::mt19937 gen(19);
    for (int t = 0; t < 40; ++t) {
        const BinaryMatrix a = random_matrix(gen);
        const BinaryMatrix b = complement_rotate(a);
        CHECK(complement_rotate(b) == a);
        // margins map to the complementary class, in reversed order
        const auto rs = a.row_sums();
        const auto bs = b.row_sums();
        for (std::size_t i = 0; i < rs.size(); ++i)
            CHECK(bs[i] == a.col_count() - rs[rs.size() - 1 - i]);
    }
}

TEST_CASE("complement_rotate carries A(n,k) into A(n,n-k)") {
    const BinaryMatrix b = complement_rotate(seed_a());  // margins (1,3,3,1)/(3,1,1,3)
    CHECK(b.row_sums() == std::vector<int>{3, 1, 1, 3});
    CHECK(b.col_sums() == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("block_assemble shapes and margins") {
    const BinaryMatrix g1 = BinaryMatrix::from_rows({"11", "00", "00", "11"});
    const BinaryMatrix g2 = BinaryMatrix::from_rows({"0110", "0110"});
    const BinaryMatrix g3 = BinaryMatrix::from_rows({"01", "10"});
    const BinaryMatrix v6 = block_assemble(seed_a(), g1, g2, g3);
    CHECK(oracles::margins_match(v6, std::vector<int>(6, 3), std::vector<int>(6, 3)));

    // zero off-blocks give the direct sum
    const BinaryMatrix z14(4, 1), z41(1, 4);
    const BinaryMatrix one = BinaryMatrix::from_rows({"1"});
    CHECK(block_assemble(seed_a(), z14, z41, one) == direct_sum(seed_a(), one));

    CHECK_THROWS_AS(block_assemble(seed_a(), g1, g2, BinaryMatrix(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("direct_sum concatenates margins") {
    const BinaryMatrix m = seed_a();
    const BinaryMatrix g = BinaryMatrix::from_rows({"11", "11"});
    const BinaryMatrix s = direct_sum(m, g);
    CHECK(s.row_sums() == std::vector<int>{1, 3, 3, 1, 2, 2});
    CHECK(s.col_sums() == std::vector<int>{3, 1, 1, 3, 2, 2});
    CHECK(direct_sum(m, BinaryMatrix()) == m);
    CHECK(direct_sum(BinaryMatrix(), m) == m);
}

TEST_CASE("margin pair consistency") {
    CHECK(MarginPair{{2, 1}, {1, 1, 1}}.consistent());
    CHECK_FALSE(MarginPair{{2, 1}, {1, 1}}.consistent());
    CHECK_FALSE(MarginPair{{-1, 1}, {0}}.consistent());
    CHECK(MarginPair::constant(3, 2).row_sums == std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(MarginPair::constant(2, 3), std::invalid_argument);
}

}  // TEST_SUITE
