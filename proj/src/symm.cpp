#include "bfc/symm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bfc {

SymmElement operator*(const SymmElement& f, const SymmElement& g)
{
    SymmElement product;
    for (const auto& [mu, cf] : f)
        for (const auto& [nu, cg] : g)
            product.add_term(mu.merged(nu), cf * cg);
    return product;
}

SymmElement apply_I(const BosonPolynomial& f)
{
    SymmElement out;
    for (const auto& [m, c] : f)
        out.add_term(m.to_partition(), c);
    return out;
}

BosonPolynomial apply_I_inverse(const SymmElement& f)
{
    BosonPolynomial out;
    for (const auto& [mu, c] : f)
        out.add_term(ZMonomial::from_partition(mu), c);
    return out;
}

Rational hall_inner(const SymmElement& f, const SymmElement& g)
{
    return diagonal_inner(f, g, [](const Partition& mu) { return Rational(z_mu(mu)); });
}

TruncatedPolynomial truncate_symm(const SymmElement& f, int n)
{
    TruncatedPolynomial out(n);
    std::map<int, TruncatedPolynomial> power_sums;
    for (const auto& [mu, c] : f) {
        TruncatedPolynomial term = TruncatedPolynomial::constant(n, c);
        auto k = mu.multiplicities();
        for (int j = 1; j <= static_cast<int>(k.size()); ++j) {
            if (k[j - 1] == 0)
                continue;
            auto it = power_sums.try_emplace(j, TruncatedPolynomial::power_sum(n, j)).first;
            term = term * pow(it->second, k[j - 1]);
        }
        out += term;
    }
    return out;
}

namespace {

// Beta-set (abacus) form of Murnaghan-Nakayama: removing a rim hook of
// length k moves a bead from b to an empty position b - k, with sign
// (-1)^(beads strictly between).
std::int64_t strip_ribbons(const std::vector<int>& beads, const std::vector<int>& mu, std::size_t next)
{
    if (next == mu.size())
        return 1;
    const int k = mu[next];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int target = beads[i] - k;
        if (target < 0 || std::binary_search(beads.begin(), beads.end(), target))
            continue;
        auto lo = std::upper_bound(beads.begin(), beads.end(), target);
        const auto between = static_cast<std::size_t>(std::distance(lo, beads.begin() + i));
        std::vector<int> moved = beads;
        moved.erase(moved.begin() + i);
        moved.insert(std::upper_bound(moved.begin(), moved.end(), target), target);
        const std::int64_t sub = strip_ribbons(moved, mu, next + 1);
        total += between % 2 ? -sub : sub;
    }
    return total;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("mn_character: weights differ: " + to_string(lambda) + " vs " + to_string(mu));
    const int m = lambda.length();
    std::vector<int> beads(m);
    for (int j = 1; j <= m; ++j)
        beads[m - j] = lambda.part(j) + m - j;
    return strip_ribbons(beads, mu.parts(), 0);
}

CharacterTable::CharacterTable(int n, Execution exec)
    : n_(n),
      partitions_(partitions_of(n)),
      values_(exec == Execution::parallel ? kernels::omp::character_matrix(n) : kernels::serial::character_matrix(n))
{
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
    // partitions_ is in reverse-lexicographic order.
    auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
    if (it == partitions_.end() || *it != p)
        throw std::out_of_range("partition " + to_string(p) + " is not of weight " + std::to_string(n_));
    return static_cast<std::size_t>(it - partitions_.begin());
}

std::shared_ptr<const CharacterTable> character_table(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const CharacterTable>(n);
    return slot;
}

SchurExpansion power_to_schur(const SymmElement& f)
{
    SchurExpansion out;
    for (const auto& [mu, c] : f) {
        auto table = character_table(mu.weight());
        const std::size_t col = table->index_of(mu);
        for (std::size_t row = 0; row < table->partitions().size(); ++row) {
            const std::int64_t chi = (*table)(row, col);
            if (chi != 0)
                out.add_term(table->partitions()[row], c * Rational(static_cast<long>(chi)));
        }
    }
    return out;
}

SymmElement schur_to_power(const SchurExpansion& f)
{
    SymmElement out;
    for (const auto& [lambda, c] : f) {
        auto table = character_table(lambda.weight());
        const std::size_t row = table->index_of(lambda);
        for (std::size_t col = 0; col < table->partitions().size(); ++col) {
            const std::int64_t chi = (*table)(row, col);
            if (chi == 0)
                continue;
            const Partition& mu = table->partitions()[col];
            out.add_term(mu, c * Rational(static_cast<long>(chi)) / Rational(z_mu(mu)));
        }
    }
    return out;
}

std::string power_monomial_string(const Partition& mu)
{
    std::string out;
    const auto k = mu.multiplicities();
    for (int j = static_cast<int>(k.size()); j >= 1; --j) {
        if (k[j - 1] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'p' + std::to_string(j);
        if (k[j - 1] > 1)
            out += '^' + std::to_string(k[j - 1]);
    }
    return out;
}

std::string to_string(const SymmElement& f)
{
    return render_combination(f, [](const Partition& mu) { return power_monomial_string(mu); });
}

std::string to_string(const SchurExpansion& f)
{
    return render_combination(f, [](const Partition& lambda) { return "s" + to_string(lambda); });
}

} // namespace bfc
