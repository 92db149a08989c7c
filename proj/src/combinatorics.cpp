#include "bfc/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bfc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_multiplicities(std::span<const int> multiplicities)
{
    std::vector<int> parts;
    for (int j = static_cast<int>(multiplicities.size()); j >= 1; --j) {
        if (multiplicities[j - 1] < 0)
            throw std::invalid_argument("negative multiplicity");
        parts.insert(parts.end(), multiplicities[j - 1], j);
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> k(parts_.empty() ? 0 : parts_.front(), 0);
    for (int part : parts_)
        ++k[part - 1];
    return k;
}

Partition Partition::merged(const Partition& other) const
{
    std::vector<int> parts;
    parts.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

MayaIndex MayaIndex::from_prefix(std::span<const int> prefix)
{
    const int k = static_cast<int>(prefix.size());
    for (int j = 1; j < k; ++j)
        if (prefix[j] <= prefix[j - 1])
            throw std::invalid_argument("Maya sequence must be strictly increasing");
    if (k > 0 && prefix[k - 1] >= k + 1)
        throw std::invalid_argument("Maya sequence does not stabilize to l_j = j");
    std::vector<int> parts(k);
    for (int j = 1; j <= k; ++j)
        parts[j - 1] = j - prefix[j - 1];
    return MayaIndex(Partition(std::move(parts)));
}

std::vector<int> MayaIndex::prefix() const
{
    std::vector<int> l(partition_.length());
    for (int j = 1; j <= partition_.length(); ++j)
        l[j - 1] = at(j);
    return l;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lexicographic successor: split the rightmost part > 1.
    std::vector<int> parts{n};
    while (true) {
        out.emplace_back(parts);
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty())
            break;
        int carry = ones + 1;
        int size = --parts.back();
        while (carry > size) {
            parts.push_back(size);
            carry -= size;
        }
        parts.push_back(carry);
    }
    return out;
}

Integer z_mu(const Partition& mu)
{
    Integer z = 1;
    auto k = mu.multiplicities();
    for (int j = 1; j <= static_cast<int>(k.size()); ++j) {
        for (int i = 2; i <= k[j - 1]; ++i)
            z *= i;
        for (int i = 0; i < k[j - 1]; ++i)
            z *= j;
    }
    return z;
}

MayaIndex partition_to_maya(const Partition& lambda)
{
    return MayaIndex(lambda);
}

Partition maya_to_partition(const MayaIndex& l)
{
    return l.partition();
}

Partition maya_to_partition(std::span<const int> prefix)
{
    return MayaIndex::from_prefix(prefix).partition();
}

std::string format_sequence(std::span<const int> values, char open, char close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            os << ',';
        os << values[i];
    }
    os << close;
    return os.str();
}

std::string to_string(const Partition& p)
{
    return format_sequence(p.parts(), '(', ')');
}

std::string to_string(const MayaIndex& l)
{
    return format_sequence(l.prefix(), '[', ']');
}

} // namespace bfc
