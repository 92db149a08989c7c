#include "bfc/io.hpp"

#include <vector>

namespace bfc {

namespace {

using json = nlohmann::json;

json partition_json(const Partition& p)
{
    return json(p.parts());
}

Partition partition_from(const json& value, const char* key)
{
    if (!value.is_array())
        throw FormatError(std::string("'") + key + "' must be a list of positive integers");
    std::vector<int> parts;
    for (const auto& x : value) {
        if (!x.is_number_integer())
            throw FormatError(std::string("'") + key + "' must be a list of positive integers");
        parts.push_back(x.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("'") + key + "': " + e.what());
    }
}

Rational coeff_from(const json& term)
{
    if (!term.contains("coeff") || !term["coeff"].is_string())
        throw FormatError("each term needs a string 'coeff'");
    try {
        return parse_rational(term["coeff"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("coeff: ") + e.what());
    }
}

template <class Combination, class KeyWriter>
json terms_json(const Combination& f, KeyWriter&& write_key)
{
    json terms = json::array();
    for (const auto& [key, coeff] : f) {
        json term{{"coeff", to_string(coeff)}};
        write_key(term, key);
        terms.push_back(std::move(term));
    }
    return terms;
}

template <class Combination>
Combination partition_keyed(const json& terms, const char* key)
{
    Combination out;
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains(key))
            throw FormatError(std::string("each term needs '") + key + "'");
        out.add_term(typename Combination::key_type(partition_from(term[key], key)), coeff_from(term));
    }
    return out;
}

BosonPolynomial boson_from(const json& terms)
{
    BosonPolynomial out;
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("exponents") || !term["exponents"].is_object())
            throw FormatError("each boson term needs an 'exponents' object");
        std::vector<int> k;
        for (const auto& [name, power] : term["exponents"].items()) {
            int j = 0;
            try {
                std::size_t used = 0;
                j = std::stoi(name, &used);
                if (used != name.size())
                    j = 0;
            } catch (const std::exception&) {
                j = 0;
            }
            if (j < 1 || j > 1000)
                throw FormatError("exponent keys must be variable indices >= 1, got '" + name + "'");
            if (!power.is_number_integer() || power.get<int>() < 0)
                throw FormatError("exponents must be non-negative integers");
            if (static_cast<int>(k.size()) < j)
                k.resize(j, 0);
            k[j - 1] = power.get<int>();
        }
        out.add_term(ZMonomial(std::move(k)), coeff_from(term));
    }
    return out;
}

FockVector fermion_from(const json& terms)
{
    FockVector out;
    for (const auto& term : terms) {
        if (!term.is_object())
            throw FormatError("fermion terms must be objects");
        const Rational c = coeff_from(term);
        if (term.contains("partition")) {
            out.add_term(WedgeMonomial(MayaIndex(partition_from(term["partition"], "partition"))), c);
            continue;
        }
        if (!term.contains("indices") || !term["indices"].is_array())
            throw FormatError("each fermion term needs 'partition' or 'indices'");
        std::vector<int> indices;
        for (const auto& x : term["indices"]) {
            if (!x.is_number_integer())
                throw FormatError("'indices' must be integers");
            indices.push_back(x.get<int>());
        }
        std::optional<int> tail;
        if (term.contains("tail_start")) {
            if (!term["tail_start"].is_number_integer())
                throw FormatError("'tail_start' must be an integer");
            tail = term["tail_start"].get<int>();
        }
        if (auto normalized = normalize_wedge(indices, tail))
            out.add_term(normalized->monomial, normalized->sign * c);
    }
    return out;
}

} // namespace

std::string space_name(const AnyVector& v)
{
    static const char* names[] = {"boson", "symm-p", "symm-s", "asymm", "fermion"};
    return names[v.index()];
}

json to_json(const AnyVector& v)
{
    json terms = std::visit(
        [](const auto& f) -> json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, BosonPolynomial>) {
                return terms_json(f, [](json& t, const ZMonomial& m) {
                    json table = json::object();
                    for (int j = 1; j <= static_cast<int>(m.exponents().size()); ++j)
                        if (m.exponent(j))
                            table[std::to_string(j)] = m.exponent(j);
                    t["exponents"] = std::move(table);
                });
            } else if constexpr (std::is_same_v<T, SymmElement>) {
                return terms_json(f, [](json& t, const Partition& mu) { t["mu"] = partition_json(mu); });
            } else if constexpr (std::is_same_v<T, SchurExpansion>) {
                return terms_json(f, [](json& t, const Partition& lambda) { t["lambda"] = partition_json(lambda); });
            } else if constexpr (std::is_same_v<T, AsymmVector>) {
                return terms_json(f, [](json& t, const MayaIndex& l) { t["partition"] = partition_json(l.partition()); });
            } else {
                return terms_json(f, [](json& t, const WedgeMonomial& w) {
                    t["partition"] = partition_json(w.index().partition());
                });
            }
        },
        v);
    return json{{"space", space_name(v)}, {"terms", std::move(terms)}};
}

AnyVector from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("space") || !doc["space"].is_string())
        throw FormatError("document needs a string 'space'");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw FormatError("document needs a 'terms' list");
    const auto space = doc["space"].get<std::string>();
    const auto& terms = doc["terms"];
    if (space == "boson")
        return boson_from(terms);
    if (space == "symm-p")
        return partition_keyed<SymmElement>(terms, "mu");
    if (space == "symm-s")
        return partition_keyed<SchurExpansion>(terms, "lambda");
    if (space == "asymm")
        return partition_keyed<AsymmVector>(terms, "partition");
    if (space == "fermion")
        return fermion_from(terms);
    throw FormatError("unknown space '" + space + "'");
}

std::string to_string(const AnyVector& v)
{
    return std::visit([](const auto& f) { return to_string(f); }, v);
}

int max_weight(const AnyVector& v)
{
    return std::visit(
        [](const auto& f) {
            int w = -1;
            for (const auto& [key, coeff] : f) {
                using K = std::decay_t<decltype(key)>;
                if constexpr (std::is_same_v<K, ZMonomial> || std::is_same_v<K, Partition>)
                    w = std::max(w, key.weight());
                else if constexpr (std::is_same_v<K, MayaIndex>)
                    w = std::max(w, key.partition().weight());
                else
                    w = std::max(w, key.index().partition().weight());
            }
            return w;
        },
        v);
}

} // namespace bfc
