#pragma once

#include <json.hpp>

#include "striphom/fimod.hpp"

namespace striphom {

using Json = nlohmann::json;

// Canonical rational text: "p" for integers, "p/q" otherwise, both from the
// canonical GMP form (q > 0, gcd 1).
std::string rational_str(const Rational& q);

// A chain as a list of {"coefficient": rational string, "symbol": text},
// sorted by symbol text; the empty list is the zero chain.
Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

// Class-function values listed over the partitions of n in canonical order.
Json class_values_json(const ClassFunction& f);  // [{"partition", "value"}]
Json decomposition_json(const std::map<Partition, long>& mults);

Json h1_report_json(const H1Verification& rep);
Json direct_sum_report_json(const DirectSumReport& rep);

}  // namespace striphom
