#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros so equal partitions have identical storage.
class Partition {
public:
    Partition() = default;

    /// Accepts a weakly decreasing sequence of non-negative integers; trailing
    /// zeros are dropped. Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Part j repeated multiplicities[j-1] times.
    static Partition from_multiplicities(std::span<const int> multiplicities);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based; zero beyond the last part.
    int part(int j) const noexcept { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }

    /// Entry j-1 holds the multiplicity of part j; no trailing zeros.
    std::vector<int> multiplicities() const;

    /// Union of parts (the multiset sum used by p_mu * p_nu = p_{mu u nu}).
    Partition merged(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Strictly increasing l_1 < l_2 < ... with l_j = j for all large j.
/// Stored as the partition with l_j = j - lambda_j; the numeric prefix is
/// materialized on demand.
class MayaIndex {
public:
    MayaIndex() = default;
    explicit MayaIndex(Partition partition) : partition_(std::move(partition)) {}

    /// Interprets `prefix` as l_1..l_k followed by l_j = j for j > k.
    /// Throws std::invalid_argument if the sequence is not strictly
    /// increasing or does not run into the tail (l_k >= k + 1).
    static MayaIndex from_prefix(std::span<const int> prefix);

    const Partition& partition() const noexcept { return partition_; }

    /// l_1..l_m where m is the number of parts.
    std::vector<int> prefix() const;

    /// l_j for any j >= 1.
    int at(int j) const noexcept { return j - partition_.part(j); }

    bool is_vacuum() const noexcept { return partition_.empty(); }

    friend bool operator==(const MayaIndex&, const MayaIndex&) = default;
    friend std::strong_ordering operator<=>(const MayaIndex& a, const MayaIndex& b)
    {
        return a.partition_ <=> b.partition_;
    }

private:
    Partition partition_;
};

/// All partitions of n in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int n);

/// prod_j k_j! j^{k_j}, k_j the multiplicity of part j.
Integer z_mu(const Partition& mu);

MayaIndex partition_to_maya(const Partition& lambda);
Partition maya_to_partition(const MayaIndex& l);
Partition maya_to_partition(std::span<const int> prefix);

/// Rendering order for every basis in the library: by weight, then
/// reverse-lexicographic within a weight.
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept
    {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        return b < a;
    }
    bool operator()(const MayaIndex& a, const MayaIndex& b) const noexcept
    {
        return (*this)(a.partition(), b.partition());
    }
};

/// `(3,1,1)`, empty as `()`.
std::string to_string(const Partition& p);
/// `[-1,1]`, vacuum as `[]`.
std::string to_string(const MayaIndex& l);
std::string format_sequence(std::span<const int> values, char open, char close);

} // namespace bfc
