#include "doctest.h"

#include <random>
#include <stdexcept>

#include "bfc/bridge.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

BosonPolynomial z(const ZMonomial& m)
{
    BosonPolynomial f;
    f.add_term(m, Rational(1));
    return f;
}

} // namespace

TEST_CASE("images of small monomials")
{
    CHECK(to_string(boson_to_fermion(z(ZMonomial::variable(1)))) == "xi[0]");
    CHECK(to_string(boson_to_fermion(z(ZMonomial::variable(1, 2)))) == "xi[-1] + xi[0,1]");
    CHECK(to_string(boson_to_fermion(z(ZMonomial::variable(2)))) == "xi[-1] - xi[0,1]");
    CHECK(to_string(boson_to_fermion(z(ZMonomial()))) == "xi[]");

    FockVector w;
    w.add_term(WedgeMonomial(MayaIndex(Partition{2})), Rational(1));
    CHECK(to_string(fermion_to_boson(w)) == "1/2*z1^2 + 1/2*z2");
}

TEST_CASE("images have integer coefficients given by characters")
{
    for (int d = 0; d <= 7; ++d) {
        auto table = character_table(d);
        for (const auto& m : z_monomials_of_weight(d)) {
            auto image = boson_to_fermion(z(m));
            for (const auto& [wedge, c] : image) {
                CHECK(c.get_den() == 1);
                CHECK(c == Rational(static_cast<long>(table->at(wedge.index().partition(), m.to_partition()))));
            }
        }
    }
}

TEST_CASE("map is an isometry on random polynomials")
{
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = oracle::random_boson(rng, 7);
        auto g = oracle::random_boson(rng, 7);
        CHECK(fock_inner(boson_to_fermion(f), boson_to_fermion(g)) == boson_inner(f, g));
        CHECK(fermion_to_boson(boson_to_fermion(f)) == f);
    }
}

TEST_CASE("verify_isometry pair counts")
{
    auto r0 = verify_isometry(0);
    CHECK(r0.total_pairs() == 1);
    CHECK(r0.passed());

    auto r2 = verify_isometry(2);
    REQUIRE(r2.degrees.size() == 3);
    CHECK(r2.degrees[2].monomials == 2);
    CHECK(r2.degrees[2].pairs == 3);
    CHECK(r2.total_pairs() == 5);
    CHECK(r2.cross_degree_pairs == 5);
    CHECK(r2.passed());
    CHECK(r2.counterexamples.empty());
}

TEST_CASE("verify_isometry serial and parallel agree")
{
    VerifyOptions serial;
    serial.execution = Execution::serial;
    VerifyOptions parallel;
    serial.oracle_degree = parallel.oracle_degree = 5;
    auto a = verify_isometry(6, serial);
    auto b = verify_isometry(6, parallel);
    CHECK(a == b);
    CHECK(a.passed());
    for (const auto& row : a.degrees)
        CHECK(row.oracle == (row.degree <= 5 ? OracleStatus::pass : OracleStatus::skipped));
}

TEST_CASE("verify_isometry degree bound")
{
    CHECK_THROWS_AS(verify_isometry(9), std::out_of_range);
    VerifyOptions options;
    options.max_degree = 3;
    CHECK_THROWS_AS(verify_isometry(4, options), std::out_of_range);
    CHECK(to_string(OracleStatus::fail) == "FAIL");
}
