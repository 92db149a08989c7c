#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "bfc/kernels.hpp"
#include "bfc/symm.hpp"

namespace bfc::kernels::omp {

namespace {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int v : e)
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};

using Accumulator = std::unordered_map<Exponents, Rational, ExponentsHash>;

// Products below this many term pairs are not worth a parallel region.
constexpr std::size_t parallel_threshold = 4096;

TruncatedPolynomial merge(int variables, std::vector<Accumulator>& partial)
{
    TruncatedPolynomial out(variables);
    for (auto& local : partial)
        for (auto& [e, c] : local)
            out.add_term(e, c);
    return out;
}

// Exponent vectors packed 8 bits per variable with x_1 in the most
// significant byte, so integer order is lexicographic order. Valid while
// n <= 8 and no exponent of the product exceeds 255: packed addition then
// never carries.
constexpr int packed_bits = 8;
constexpr int packed_max_variables = 64 / packed_bits;
constexpr int packed_max_exponent = (1 << packed_bits) - 1;

int max_exponent(const TruncatedPolynomial& f)
{
    int m = 0;
    for (const auto& [e, c] : f.terms())
        for (int v : e)
            m = std::max(m, v);
    return m;
}

std::vector<std::pair<std::uint64_t, const Rational*>> pack(const TruncatedPolynomial& f)
{
    std::vector<std::pair<std::uint64_t, const Rational*>> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t key = 0;
        for (int v : e)
            key = (key << packed_bits) | static_cast<std::uint64_t>(v);
        out.emplace_back(key, &c);
    }
    return out;
}

TruncatedPolynomial unpack(int n, std::vector<std::unordered_map<std::uint64_t, Rational>>& partial)
{
    auto& merged = partial.front();
    for (std::size_t t = 1; t < partial.size(); ++t)
        for (auto& [key, c] : partial[t])
            merged[key] += c;

    std::vector<std::pair<std::uint64_t, Rational*>> sorted;
    sorted.reserve(merged.size());
    for (auto& [key, c] : merged)
        if (c != 0)
            sorted.emplace_back(key, &c);
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<std::pair<Exponents, Rational>> terms;
    terms.reserve(sorted.size());
    for (auto& [key, c] : sorted) {
        Exponents e(n);
        for (int i = n - 1; i >= 0; --i, key >>= packed_bits)
            e[i] = static_cast<int>(key & packed_max_exponent);
        terms.emplace_back(std::move(e), std::move(*c));
    }
    return TruncatedPolynomial::from_sorted_terms(n, std::move(terms));
}

// Exact int64 accumulation is safe when every coefficient is an integer
// and sum|a| * max|b| stays below 2^62, which bounds every partial sum.
bool fits_integer_path(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    Integer sum_a = 0;
    Integer max_b = 0;
    for (const auto& [e, c] : a.terms()) {
        if (c.get_den() != 1)
            return false;
        sum_a += abs(c.get_num());
    }
    for (const auto& [e, c] : b.terms()) {
        if (c.get_den() != 1)
            return false;
        if (abs(c.get_num()) > max_b)
            max_b = abs(c.get_num());
    }
    Integer limit = 1;
    limit <<= 62;
    return sum_a * max_b < limit;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> pack_integers(const TruncatedPolynomial& f)
{
    std::vector<std::pair<std::uint64_t, std::int64_t>> out;
    out.reserve(f.size());
    for (const auto& [key, c] : pack(f))
        out.emplace_back(key, c->get_num().get_si());
    return out;
}

TruncatedPolynomial multiply_packed_integers(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    const auto outer = pack_integers(a.size() >= b.size() ? a : b);
    const auto inner = pack_integers(a.size() >= b.size() ? b : a);
    const bool parallel = outer.size() * inner.size() >= parallel_threshold;

    std::vector<std::unordered_map<std::uint64_t, std::int64_t>> partial(parallel ? omp_get_max_threads() : 1);
    const auto count = static_cast<std::ptrdiff_t>(outer.size());
#pragma omp parallel if (parallel)
    {
        auto& local = partial[omp_get_thread_num()];
        local.reserve(outer.size() + inner.size());
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t r = 0; r < count; ++r) {
            const auto [ka, ca] = outer[r];
            for (const auto& [kb, cb] : inner)
                local[ka + kb] += ca * cb;
        }
    }

    std::vector<std::unordered_map<std::uint64_t, Rational>> rational(1);
    auto& merged = rational.front();
    merged.reserve(partial.front().size());
    for (auto& local : partial)
        for (const auto& [key, c] : local)
            if (c != 0)
                merged[key] += Rational(static_cast<long>(c));
    return unpack(a.variables(), rational);
}

TruncatedPolynomial multiply_packed(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    const auto outer = pack(a.size() >= b.size() ? a : b);
    const auto inner = pack(a.size() >= b.size() ? b : a);
    const bool parallel = outer.size() * inner.size() >= parallel_threshold;

    std::vector<std::unordered_map<std::uint64_t, Rational>> partial(parallel ? omp_get_max_threads() : 1);
    const auto count = static_cast<std::ptrdiff_t>(outer.size());
#pragma omp parallel if (parallel)
    {
        auto& local = partial[omp_get_thread_num()];
        local.reserve(outer.size() + inner.size());
        Rational product;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t r = 0; r < count; ++r) {
            const auto& [ka, ca] = outer[r];
            for (const auto& [kb, cb] : inner) {
                mpq_mul(product.get_mpq_t(), ca->get_mpq_t(), cb->get_mpq_t());
                local[ka + kb] += product;
            }
        }
    }
    return unpack(a.variables(), partial);
}

} // namespace

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
{
    if (a.variables() != b.variables())
        throw std::invalid_argument("multiplying polynomials in different variable counts");
    if (a.variables() <= packed_max_variables && max_exponent(a) + max_exponent(b) <= packed_max_exponent)
        return fits_integer_path(a, b) ? multiply_packed_integers(a, b) : multiply_packed(a, b);
    if (a.size() * b.size() < parallel_threshold)
        return serial::multiply(a, b);

    const auto& outer = a.size() >= b.size() ? a : b;
    const auto& inner = a.size() >= b.size() ? b : a;
    std::vector<const TruncatedPolynomial::map_type::value_type*> rows;
    rows.reserve(outer.size());
    for (const auto& term : outer.terms())
        rows.push_back(&term);

    const int n = a.variables();
    std::vector<Accumulator> partial(omp_get_max_threads());
    const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel
    {
        auto& local = partial[omp_get_thread_num()];
        Exponents e(n);
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t r = 0; r < count; ++r) {
            const auto& [ea, ca] = *rows[r];
            for (const auto& [eb, cb] : inner.terms()) {
                for (int i = 0; i < n; ++i)
                    e[i] = ea[i] + eb[i];
                local[e] += ca * cb;
            }
        }
    }
    return merge(n, partial);
}

namespace {

template <class Coeff>
using PackedTerms = std::vector<std::pair<std::uint64_t, Coeff>>;

// One factor (x_i - x_j): every term splits in two, then equal keys are
// combined after a sort.
template <class Coeff>
PackedTerms<Coeff> times_difference(const PackedTerms<Coeff>& terms, std::uint64_t step_i, std::uint64_t step_j)
{
    const auto count = static_cast<std::ptrdiff_t>(terms.size());
    PackedTerms<Coeff> expanded(2 * terms.size());
#pragma omp parallel for schedule(static) if (count >= 2048)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        expanded[2 * t] = {terms[t].first + step_i, terms[t].second};
        expanded[2 * t + 1] = {terms[t].first + step_j, -terms[t].second};
    }
    std::sort(expanded.begin(), expanded.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    PackedTerms<Coeff> combined;
    combined.reserve(expanded.size());
    for (auto& [key, c] : expanded) {
        if (!combined.empty() && combined.back().first == key)
            combined.back().second += c;
        else {
            if (!combined.empty() && combined.back().second == 0)
                combined.pop_back();
            combined.emplace_back(key, std::move(c));
        }
    }
    if (!combined.empty() && combined.back().second == 0)
        combined.pop_back();
    return combined;
}

} // namespace

TruncatedPolynomial multiply_by_differences(const TruncatedPolynomial& f, std::span<const std::pair<int, int>> factors)
{
    const int n = f.variables();
    if (n > packed_max_variables || max_exponent(f) + static_cast<int>(factors.size()) > packed_max_exponent)
        return serial::multiply_by_differences(f, factors);
    for (const auto& [i, j] : factors)
        if (i < 1 || j < 1 || i > n || j > n)
            throw std::out_of_range("variable index out of range");

    auto step = [n](int i) { return std::uint64_t{1} << (packed_bits * (n - i)); };

    // Each factor at most doubles sum|c|.
    Integer sum_abs = 0;
    bool integral = true;
    for (const auto& [e, c] : f.terms()) {
        integral = integral && c.get_den() == 1;
        sum_abs += abs(c.get_num());
    }
    Integer limit = 1;
    limit <<= 62;
    Integer bound = sum_abs;
    bound <<= static_cast<mp_bitcnt_t>(factors.size());

    std::vector<std::unordered_map<std::uint64_t, Rational>> result(1);
    if (integral && bound < limit) {
        PackedTerms<std::int64_t> terms;
        for (const auto& [key, c] : pack(f))
            terms.emplace_back(key, c->get_num().get_si());
        for (const auto& [i, j] : factors)
            terms = times_difference(terms, step(i), step(j));
        for (const auto& [key, c] : terms)
            result.front().emplace(key, Rational(static_cast<long>(c)));
    } else {
        PackedTerms<Rational> terms;
        for (const auto& [key, c] : pack(f))
            terms.emplace_back(key, *c);
        for (const auto& [i, j] : factors)
            terms = times_difference(terms, step(i), step(j));
        for (auto& [key, c] : terms)
            result.front().emplace(key, std::move(c));
    }
    return unpack(n, result);
}

TruncatedPolynomial alternant(std::span<const int> exponents)
{
    const int n = static_cast<int>(exponents.size());
    const bool packable = n <= packed_max_variables &&
                          std::all_of(exponents.begin(), exponents.end(),
                                      [](int v) { return v >= 0 && v <= packed_max_exponent; });
    if (!packable || n < 6)
        return serial::alternant(exponents);

    std::int64_t total = 1;
    for (int i = 2; i <= n; ++i)
        total *= i;

    // Each thread decodes the Lehmer code of its first rank and walks the
    // rest of its chunk with next_permutation, which visits ranks in order.
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms(total);
#pragma omp parallel
    {
        const std::int64_t threads = omp_get_num_threads();
        const std::int64_t t = omp_get_thread_num();
        const std::int64_t begin = total * t / threads;
        const std::int64_t end = total * (t + 1) / threads;

        std::vector<int> pool(n), sigma(n);
        for (int i = 0; i < n; ++i)
            pool[i] = i;
        std::int64_t rest = begin;
        std::int64_t radix = total;
        for (int i = 0; i < n; ++i) {
            radix /= (n - i);
            sigma[i] = pool[rest / radix];
            pool.erase(pool.begin() + rest / radix);
            rest %= radix;
        }

        for (std::int64_t rank = begin; rank < end; ++rank) {
            std::uint64_t key = 0;
            int inversions = 0;
            for (int i = 0; i < n; ++i) {
                key = (key << packed_bits) | static_cast<std::uint64_t>(exponents[sigma[i]]);
                for (int j = i + 1; j < n; ++j)
                    inversions += sigma[i] > sigma[j];
            }
            terms[rank] = {key, inversions % 2 ? -1 : 1};
            std::next_permutation(sigma.begin(), sigma.end());
        }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<std::pair<Exponents, Rational>> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::uint64_t key = terms[i].first;
        std::int64_t c = 0;
        for (; i < terms.size() && terms[i].first == key; ++i)
            c += terms[i].second;
        if (c == 0)
            continue;
        Exponents e(n);
        for (int v = n - 1; v >= 0; --v, key >>= packed_bits)
            e[v] = static_cast<int>(key & packed_max_exponent);
        out.emplace_back(std::move(e), Rational(static_cast<long>(c)));
    }
    return TruncatedPolynomial::from_sorted_terms(n, std::move(out));
}

std::vector<std::int64_t> character_matrix(int n)
{
    auto parts = partitions_of(n);
    const auto size = static_cast<std::ptrdiff_t>(parts.size());
    std::vector<std::int64_t> values(parts.size() * parts.size());
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::ptrdiff_t row = 0; row < size; ++row)
        for (std::ptrdiff_t col = 0; col < size; ++col)
            values[row * size + col] = mn_character(parts[row], parts[col]);
    return values;
}

} // namespace bfc::kernels::omp
