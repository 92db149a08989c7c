#include "doctest.h"

#include <map>
#include <random>
#include <stdexcept>

#include "bfc/symm.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

SymmElement p(const Partition& mu, const Rational& c = 1)
{
    SymmElement f;
    f.add_term(mu, c);
    return f;
}

SchurExpansion s(const Partition& lambda, const Rational& c = 1)
{
    SchurExpansion f;
    f.add_term(lambda, c);
    return f;
}

// Values computed with oracle::character (bialternant coefficients) and
// frozen; rows and columns in partitions_of order.
const std::int64_t s4_table[5][5] = {
    {1, 1, 1, 1, 1},
    {-1, 0, -1, 1, 3},
    {0, -1, 2, 0, 2},
    {1, 0, -1, -1, 3},
    {-1, 1, 1, -1, 1},
};

const std::int64_t s5_table[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},
    {-1, 0, -1, 1, 0, 2, 4},
    {0, -1, 1, -1, 1, 1, 5},
    {1, 0, 0, 0, -2, 0, 6},
    {0, 1, -1, -1, 1, -1, 5},
    {-1, 0, 1, 1, 0, -2, 4},
    {1, -1, -1, 1, 1, -1, 1},
};

} // namespace

TEST_CASE("apply_I examples")
{
    BosonPolynomial f;
    f.add_term(ZMonomial({2, 1}), Rational(3));
    f.add_term(ZMonomial::variable(4), Rational(-1));
    auto g = apply_I(f);
    CHECK(to_string(g) == "-p4 + 3*p2*p1^2");
    CHECK(g.coefficient(Partition{2, 1, 1}) == 3);
    CHECK(apply_I_inverse(g) == f);
}

TEST_CASE("apply_I round trip and isometry on random input")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = oracle::random_boson(rng, 8);
        auto g = oracle::random_boson(rng, 8);
        CHECK(apply_I_inverse(apply_I(f)) == f);
        CHECK(hall_inner(apply_I(f), apply_I(g)) == boson_inner(f, g));
    }
}

TEST_CASE("hall inner product examples")
{
    CHECK(hall_inner(p({2}), p({1, 1})) == 0);
    CHECK(hall_inner(p({1, 1}), p({1, 1})) == 2);
    CHECK(hall_inner(p({3, 1, 1}), p({3, 1, 1})) == 6);
    CHECK(hall_inner(p({2}) + p({1, 1}), p({2}) - p({1, 1})) == 0);
}

TEST_CASE("product of power sums")
{
    CHECK(p({2}) * p({1, 1}) == p({2, 1, 1}));
    CHECK(to_string(p({2}) * p({1}) + make_rational(1, 2) * p({3})) == "1/2*p3 + p2*p1");
}

TEST_CASE("truncate_symm examples")
{
    auto t = truncate_symm(p({2}), 2);
    CHECK(to_string(t) == "x1^2 + x2^2");
    auto u = truncate_symm(p({1, 1}), 2);
    CHECK(u.coefficient({1, 1}) == 2);
    CHECK(u.coefficient({2, 0}) == 1);
    CHECK(truncate_symm(p({}), 3) == TruncatedPolynomial::constant(3, Rational(1)));
    CHECK(truncate_symm(p({1, 1, 1}), 3) == oracle::to_truncated(oracle::power_sum_product(Partition{1, 1, 1}, 3)));
}

TEST_CASE("S3 character table")
{
    CHECK(mn_character({3}, {1, 1, 1}) == 1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({1, 1, 1}, {2, 1}) == -1);
    CHECK(mn_character({1, 1, 1}, {3}) == 1);
    CHECK(mn_character({}, {}) == 1);
    CHECK_THROWS_AS(mn_character({2}, {1}), std::invalid_argument);
}

TEST_CASE("S4 and S5 tables match frozen oracle values")
{
    CharacterTable t4(4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(t4(i, j) == s4_table[i][j]);
    CharacterTable t5(5);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(t5(i, j) == s5_table[i][j]);
}

TEST_CASE("characters against the bialternant oracle up to n = 6")
{
    for (int n = 1; n <= 6; ++n) {
        auto table = character_table(n);
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                CHECK(table->at(lambda, mu) == oracle::character(lambda, mu));
    }
}

TEST_CASE("trivial, sign and standard characters by brute force over S5")
{
    const int n = 5;
    Partition trivial{5}, sign{1, 1, 1, 1, 1}, standard{4, 1};
    oracle::for_each_permutation(n, [&](const std::vector<int>& sigma) {
        Partition mu = oracle::cycle_type(sigma);
        int fixed = 0;
        for (int i = 0; i < n; ++i)
            fixed += sigma[i] == i;
        CHECK(mn_character(trivial, mu) == 1);
        CHECK(mn_character(sign, mu) == oracle::inversion_parity(sigma));
        CHECK(mn_character(standard, mu) == fixed - 1);
    });
}

TEST_CASE("row orthogonality by brute force over S4")
{
    // sum over all 24 permutations of chi^a(sigma) chi^b(sigma) = 24 delta_ab
    auto parts = partitions_of(4);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> sums;
    oracle::for_each_permutation(4, [&](const std::vector<int>& sigma) {
        Partition mu = oracle::cycle_type(sigma);
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b)
                sums[{a, b}] += mn_character(parts[a], mu) * mn_character(parts[b], mu);
    });
    for (const auto& [ab, value] : sums)
        CHECK(value == (ab.first == ab.second ? 24 : 0));
}

TEST_CASE("column orthogonality up to weight 6")
{
    for (int n = 0; n <= 6; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Integer total = 0;
                for (const auto& lambda : parts)
                    total += Integer(static_cast<long>(mn_character(lambda, mu) * mn_character(lambda, nu)));
                CHECK(total == (mu == nu ? z_mu(mu) : Integer(0)));
            }
    }
}

TEST_CASE("squared dimensions add up to n!")
{
    for (int n = 0; n <= 8; ++n) {
        Integer total = 0, factorial = 1;
        for (int k = 2; k <= n; ++k)
            factorial *= k;
        Partition ones(std::vector<int>(n, 1));
        for (const auto& lambda : partitions_of(n)) {
            long d = static_cast<long>(mn_character(lambda, ones));
            total += Integer(d * d);
        }
        CHECK(total == factorial);
    }
}

TEST_CASE("parallel and serial character tables agree")
{
    for (int n = 0; n <= 8; ++n)
        CHECK(CharacterTable(n, Execution::parallel).values() == CharacterTable(n, Execution::serial).values());
}

TEST_CASE("basis change examples")
{
    CHECK(to_string(power_to_schur(p({2}))) == "s(2) - s(1,1)");
    CHECK(to_string(power_to_schur(p({1, 1}))) == "s(2) + s(1,1)");
    CHECK(to_string(schur_to_power(s({2}))) == "1/2*p2 + 1/2*p1^2");
    CHECK(to_string(schur_to_power(s({1, 1}))) == "-1/2*p2 + 1/2*p1^2");
    CHECK(to_string(power_to_schur(p({}))) == "s()");
    CHECK(to_string(SchurExpansion()) == "0");
}

TEST_CASE("basis change round trip")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = oracle::random_symm(rng, 8);
        CHECK(schur_to_power(power_to_schur(f)) == f);
    }
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(power_to_schur(schur_to_power(s(lambda))) == s(lambda));
}

TEST_CASE("schur functions are orthonormal up to weight 6")
{
    for (int a = 0; a <= 6; ++a)
        for (const auto& lambda : partitions_of(a)) {
            auto sl = schur_to_power(s(lambda));
            for (int b = 0; b <= 6; ++b)
                for (const auto& nu : partitions_of(b))
                    CHECK(hall_inner(sl, schur_to_power(s(nu))) == (lambda == nu ? 1 : 0));
        }
}

TEST_CASE("truncated power sums are linearly independent when n >= d")
{
    // Rank of the coefficient matrix of {p_mu : |mu| = d} in d variables.
    for (int d = 1; d <= 6; ++d) {
        auto parts = partitions_of(d);
        std::vector<TruncatedPolynomial> polys;
        for (const auto& mu : parts)
            polys.push_back(truncate_symm(p(mu), d));
        std::map<Exponents, std::size_t> columns;
        for (const auto& f : polys)
            for (const auto& [e, c] : f.terms())
                columns.try_emplace(e, columns.size());
        std::vector<std::vector<Rational>> m(polys.size(), std::vector<Rational>(columns.size()));
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (const auto& [e, c] : polys[i].terms())
                m[i][columns[e]] = c;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < columns.size() && rank < m.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.size() && m[pivot][col] == 0)
                ++pivot;
            if (pivot == m.size())
                continue;
            std::swap(m[pivot], m[rank]);
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][col] == 0)
                    continue;
                Rational factor = m[r][col] / m[rank][col];
                for (std::size_t k = col; k < columns.size(); ++k)
                    m[r][k] -= factor * m[rank][k];
            }
            ++rank;
        }
        CHECK(rank == parts.size());
    }
}
