#include "bfc/bridge.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "bfc/asymm.hpp"
#include "bfc/symm.hpp"

namespace bfc {

FockVector boson_to_fermion(const BosonPolynomial& f)
{
    return asymm_to_fermion(apply_J(apply_I(f)));
}

BosonPolynomial fermion_to_boson(const FockVector& f)
{
    return apply_I_inverse(apply_J_inverse(fermion_to_asymm(f)));
}

std::size_t IsometryReport::total_pairs() const noexcept
{
    std::size_t total = 0;
    for (const auto& d : degrees)
        total += d.pairs;
    return total;
}

bool IsometryReport::passed() const noexcept
{
    return cross_degree_failures == 0 &&
           std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.passed(); });
}

std::string to_string(OracleStatus status)
{
    switch (status) {
    case OracleStatus::pass:
        return "pass";
    case OracleStatus::fail:
        return "FAIL";
    case OracleStatus::skipped:
        return "skip";
    }
    return "?";
}

namespace {

struct Entry {
    ZMonomial monomial;
    FockVector image;
    bool roundtrip = false;
};

struct PairCheck {
    std::size_t first;
    std::size_t second;
    Rational boson_value;
    Rational fermion_value;
};

} // namespace

IsometryReport verify_isometry(int degree_bound, const VerifyOptions& options)
{
    if (degree_bound < 0 || degree_bound > options.max_degree)
        throw std::out_of_range("degree bound " + std::to_string(degree_bound) + " outside [0, " +
                                std::to_string(options.max_degree) + "]");
    const bool parallel = options.execution == Execution::parallel;

    std::vector<Entry> entries;
    for (int d = 0; d <= degree_bound; ++d)
        for (auto& m : z_monomials_of_weight(d))
            entries.push_back({std::move(m), {}, false});

    // Warm the character-table cache before fanning out.
    for (int d = 0; d <= degree_bound; ++d)
        character_table(d);

    const auto count = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto& e = entries[i];
        const BosonPolynomial f(e.monomial);
        e.image = boson_to_fermion(f);
        e.roundtrip = fermion_to_boson(e.image) == f;
    }

    std::vector<PairCheck> pairs;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i; j < entries.size(); ++j)
            pairs.push_back({i, j, 0, 0});
    const auto pair_count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t p = 0; p < pair_count; ++p) {
        auto& check = pairs[p];
        const auto& a = entries[check.first];
        const auto& b = entries[check.second];
        check.boson_value = boson_inner(BosonPolynomial(a.monomial), BosonPolynomial(b.monomial));
        check.fermion_value = fock_inner(a.image, b.image);
    }

    IsometryReport report;
    report.degree_bound = degree_bound;
    for (int d = 0; d <= degree_bound; ++d)
        report.degrees.push_back(DegreeReport{.degree = d});
    for (const auto& e : entries) {
        auto& row = report.degrees[e.monomial.weight()];
        ++row.monomials;
        row.roundtrip_failures += !e.roundtrip;
    }
    for (const auto& check : pairs) {
        const auto& a = entries[check.first].monomial;
        const auto& b = entries[check.second].monomial;
        const bool ok = check.boson_value == check.fermion_value;
        if (a.weight() == b.weight()) {
            auto& row = report.degrees[a.weight()];
            ++row.pairs;
            row.isometry_failures += !ok;
        } else {
            ++report.cross_degree_pairs;
            report.cross_degree_failures += !(ok && check.boson_value == 0);
        }
        if (!ok)
            report.counterexamples.push_back({a, b, check.boson_value, check.fermion_value});
    }

    std::vector<Partition> lambdas;
    for (int d = 0; d <= std::min(degree_bound, options.oracle_degree); ++d)
        for (auto& lambda : partitions_of(d))
            lambdas.push_back(std::move(lambda));
    std::vector<char> oracle_ok(lambdas.size(), 0);
    const auto lambda_count = static_cast<std::ptrdiff_t>(lambdas.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < lambda_count; ++i)
        oracle_ok[i] = verify_J_oracle(lambdas[i], std::max(lambdas[i].weight(), 1));
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        auto& row = report.degrees[lambdas[i].weight()];
        if (row.oracle == OracleStatus::skipped)
            row.oracle = OracleStatus::pass;
        if (!oracle_ok[i]) {
            row.oracle = OracleStatus::fail;
            ++row.oracle_failures;
            report.oracle_counterexamples.push_back(lambdas[i]);
        }
    }
    return report;
}

} // namespace bfc
