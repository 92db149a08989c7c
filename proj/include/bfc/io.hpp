#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "bfc/asymm.hpp"
#include "bfc/boson.hpp"
#include "bfc/fermion.hpp"
#include "bfc/symm.hpp"

// Machine-readable vectors: {"space": S, "terms": [{"coeff": "a/b", KEY}]}
// where KEY is "exponents" (object j -> k_j) for boson, "mu" for symm-p,
// "lambda" for symm-s and "partition" for asymm/fermion. Fermion terms may
// instead give "indices" (and optionally "tail_start"), which are
// normalized by anticommutation.

namespace bfc {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyVector = std::variant<BosonPolynomial, SymmElement, SchurExpansion, AsymmVector, FockVector>;

/// "boson", "symm-p", "symm-s", "asymm" or "fermion".
std::string space_name(const AnyVector& v);

nlohmann::json to_json(const AnyVector& v);

/// Throws FormatError on schema violations and OutOfSector for wedge
/// products with nonzero charge.
AnyVector from_json(const nlohmann::json& doc);

/// Text rendering of whichever space `v` lives in.
std::string to_string(const AnyVector& v);

/// Highest weight among the terms; -1 for zero.
int max_weight(const AnyVector& v);

} // namespace bfc
