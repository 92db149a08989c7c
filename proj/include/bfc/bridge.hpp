#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bfc/boson.hpp"
#include "bfc/fermion.hpp"
#include "bfc/kernels.hpp"

namespace bfc {

/// F -> Symm -> Asymm -> Lambda: substitute z_k = sum_j x_j^k, multiply by
/// the Vandermonde product, relabel S_l as a wedge monomial.
FockVector boson_to_fermion(const BosonPolynomial& f);
BosonPolynomial fermion_to_boson(const FockVector& f);

struct VerifyOptions {
    /// Largest accepted degree bound.
    int max_degree = 8;
    /// Degrees above this skip the finite-n determinant check.
    int oracle_degree = 7;
    Execution execution = Execution::parallel;
};

enum class OracleStatus { pass, fail, skipped };

struct DegreeReport {
    int degree = 0;
    std::size_t monomials = 0;
    /// Unordered pairs {f, g} of z-monomials of this weight.
    std::size_t pairs = 0;
    std::size_t isometry_failures = 0;
    std::size_t roundtrip_failures = 0;
    OracleStatus oracle = OracleStatus::skipped;
    std::size_t oracle_failures = 0;

    bool passed() const noexcept
    {
        return isometry_failures == 0 && roundtrip_failures == 0 && oracle != OracleStatus::fail;
    }
    friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct Counterexample {
    ZMonomial f;
    ZMonomial g;
    Rational boson_value;
    Rational fermion_value;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct IsometryReport {
    int degree_bound = 0;
    std::vector<DegreeReport> degrees;
    /// Pairs of monomials of different weight; both sides must vanish.
    std::size_t cross_degree_pairs = 0;
    std::size_t cross_degree_failures = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Partition> oracle_counterexamples;

    std::size_t total_pairs() const noexcept;
    bool passed() const noexcept;
    friend bool operator==(const IsometryReport&, const IsometryReport&) = default;
};

/// Checks <f, g>_F == <Bf, Bg>_Lambda for every pair of z-monomials of
/// weight <= degree_bound, the round trip B^-1 B = id on each monomial, and
/// the determinant identity for every lambda up to the oracle degree.
/// Throws std::out_of_range if degree_bound exceeds options.max_degree.
IsometryReport verify_isometry(int degree_bound, const VerifyOptions& options = {});

std::string to_string(OracleStatus status);

} // namespace bfc
