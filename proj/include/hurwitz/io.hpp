#pragma once

#include <string>

#include "json.hpp"

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/integrable.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::io {

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Rationals travel as strings: "num/den", or "num" when den = 1.
Json rational_to_json(const Rational& r);

Json monomial_to_json(const MonomialKey& key);
MonomialKey monomial_from_json(const Json& j);

/// List of {dq, b, mu, nu, aux, numerator, denominator} in key order.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j, Truncation t);

/// {"d", "b", "mu", "nu", "value", "genus", "connected"}; genus is an
/// integer, "non-integral", or null for disconnected counts.
Json record_to_json(const HurwitzRecord& r);

/// {"identity", "orders", "pass", "first_failure", "residual_terms", "note"}.
Json report_to_json(const VerificationReport& r);

/// Partition as a quoted CSV field, e.g. "\"3,1,1\"".
std::string csv_partition(const Partition& p);

std::string record_csv_header();
std::string record_to_csv(const HurwitzRecord& r);
std::string record_to_human(const HurwitzRecord& r);
std::string report_to_human(const VerificationReport& r);

} // namespace hurwitz::io
