#include "bfc/fermion.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bfc {

std::optional<SignedWedge> normalize_wedge(std::span<const int> indices, std::optional<int> tail_start)
{
    const int m = static_cast<int>(indices.size());
    const int tail = tail_start.value_or(m + 1);
    if (tail != m + 1)
        throw OutOfSector("wedge with " + std::to_string(m) + " leading factors and tail from " + std::to_string(tail) +
                          " has charge " + std::to_string(m + 1 - tail));

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return indices[a] < indices[b]; });
    std::vector<int> sorted(m);
    for (int i = 0; i < m; ++i)
        sorted[i] = indices[order[i]];
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    if (m > 0 && sorted.back() >= tail)
        return std::nullopt;

    // Parity of the sorting permutation from its cycle count.
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (int j = i; !seen[j]; j = order[j])
            seen[j] = true;
    }
    const int sign = (m - cycles) % 2 ? -1 : 1;
    return SignedWedge{sign, WedgeMonomial(MayaIndex::from_prefix(sorted))};
}

Rational fock_inner(const FockVector& f, const FockVector& g)
{
    return diagonal_inner(f, g, [](const WedgeMonomial&) { return Rational(1); });
}

FockVector asymm_to_fermion(const AsymmVector& f)
{
    FockVector out;
    for (const auto& [l, c] : f)
        out.add_term(WedgeMonomial(l), c);
    return out;
}

AsymmVector fermion_to_asymm(const FockVector& f)
{
    AsymmVector out;
    for (const auto& [w, c] : f)
        out.add_term(w.index(), c);
    return out;
}

std::string to_string(const WedgeMonomial& w)
{
    return "xi" + to_string(w.index());
}

std::string to_string(const FockVector& f)
{
    return render_combination(f, [](const WedgeMonomial& w) { return to_string(w); });
}

} // namespace bfc
