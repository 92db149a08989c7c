#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "bfc/asymm.hpp"
#include "bfc/combinatorics.hpp"
#include "bfc/linear.hpp"

namespace bfc {

/// Semi-infinite product xi_{l_1} xi_{l_2} ... in the charge-zero sector,
/// l_j = j for large j.
class WedgeMonomial {
public:
    WedgeMonomial() = default;
    explicit WedgeMonomial(MayaIndex index) : index_(std::move(index)) {}

    const MayaIndex& index() const noexcept { return index_; }

    friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
    friend auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;

private:
    MayaIndex index_;
};

struct WedgeOrder {
    bool operator()(const WedgeMonomial& a, const WedgeMonomial& b) const noexcept
    {
        return GradedOrder{}(a.index(), b.index());
    }
};

struct FockTag;
using FockVector = LinearCombination<WedgeMonomial, FockTag, WedgeOrder>;

/// Thrown for wedge products outside the charge-zero sector.
class OutOfSector : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SignedWedge {
    int sign;
    WedgeMonomial monomial;
};

/// Brings xi_{a_1} ... xi_{a_m} xi_t xi_{t+1} ... to canonical increasing
/// order. `tail_start` defaults to m + 1; any other value puts the product
/// in a nonzero charge sector and throws OutOfSector. Returns nullopt when
/// an index repeats, including a collision with the tail.
std::optional<SignedWedge> normalize_wedge(std::span<const int> indices, std::optional<int> tail_start = std::nullopt);

Rational fock_inner(const FockVector& f, const FockVector& g);

FockVector asymm_to_fermion(const AsymmVector& f);
AsymmVector fermion_to_asymm(const FockVector& f);

/// `xi[-1,1]`, vacuum as `xi[]`.
std::string to_string(const WedgeMonomial& w);
std::string to_string(const FockVector& f);

} // namespace bfc
