#include "doctest.h"

#include <random>
#include <set>

#include "bfc/fermion.hpp"
#include "oracles.hpp"

using namespace bfc;

TEST_CASE("normalize_wedge examples")
{
    int swapped[] = {2, -1};
    auto r = normalize_wedge(swapped);
    REQUIRE(r.has_value());
    CHECK(r->sign == -1);
    CHECK(r->monomial.index().partition() == Partition{2});
    CHECK(to_string(r->monomial) == "xi[-1]");

    int sorted[] = {-1, 2};
    auto q = normalize_wedge(sorted);
    REQUIRE(q.has_value());
    CHECK(q->sign == 1);

    int repeated[] = {0, 0};
    CHECK_FALSE(normalize_wedge(repeated).has_value());

    int hits_tail[] = {0, 3};
    CHECK_FALSE(normalize_wedge(hits_tail).has_value());

    CHECK(normalize_wedge({})->monomial.index().is_vacuum());
}

TEST_CASE("explicit tail start outside the charge-zero sector")
{
    int indices[] = {-1, 0};
    CHECK(normalize_wedge(indices, 3).has_value());
    CHECK_THROWS_AS(normalize_wedge(indices, 2), OutOfSector);
    CHECK_THROWS_AS(normalize_wedge(indices, 4), OutOfSector);
}

TEST_CASE("sign is the inversion parity on every short prefix")
{
    // Every sequence of length <= 4 over {-3..6}; the acceptance runner
    // covers length 6.
    std::vector<int> seq;
    std::size_t checked = 0;
    auto visit = [&](auto&& self, int length) -> void {
        if (static_cast<int>(seq.size()) == length) {
            auto r = normalize_wedge(seq);
            std::set<int> distinct(seq.begin(), seq.end());
            int m = length;
            bool collides = distinct.size() != seq.size() || (!seq.empty() && *distinct.rbegin() >= m + 1);
            CHECK(r.has_value() == !collides);
            if (r) {
                CHECK(r->sign == oracle::inversion_parity(seq));
                std::vector<int> ordered(distinct.begin(), distinct.end());
                auto canonical = normalize_wedge(ordered);
                CHECK(canonical->monomial == r->monomial);
            }
            ++checked;
            return;
        }
        for (int v = -3; v <= 6; ++v) {
            seq.push_back(v);
            self(self, length);
            seq.pop_back();
        }
    };
    for (int length = 0; length <= 4; ++length)
        visit(visit, length);
    CHECK(checked == 1 + 10 + 100 + 1000 + 10000);
}

TEST_CASE("fock inner product")
{
    FockVector f, g;
    f.add_term(WedgeMonomial(MayaIndex(Partition{2})), Rational(2));
    f.add_term(WedgeMonomial(MayaIndex(Partition{1, 1})), Rational(1));
    g.add_term(WedgeMonomial(MayaIndex(Partition{2})), make_rational(1, 2));
    CHECK(fock_inner(f, g) == 1);
    CHECK(fock_inner(f, f) == 5);
    CHECK(to_string(f) == "2*xi[-1] + xi[0,1]");
    CHECK(to_string(FockVector()) == "0");
}

TEST_CASE("relabelling round trip and isometry")
{
    std::mt19937 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = oracle::random_fock(rng, 7);
        auto g = oracle::random_fock(rng, 7);
        CHECK(asymm_to_fermion(fermion_to_asymm(f)) == f);
        CHECK(asymm_inner(fermion_to_asymm(f), fermion_to_asymm(g)) == fock_inner(f, g));
    }
}
