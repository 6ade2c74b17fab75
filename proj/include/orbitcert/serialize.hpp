#pragma once

#include "orbitcert/certify.hpp"
#include "orbitcert/integral.hpp"
#include "orbitcert/lsinduce.hpp"
#include "orbitcert/orbits.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace orbitcert {

using Json = nlohmann::json;

// Weights are arrays of "p/q" strings.
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const ConditionCheck& c);
Json to_json(const CertificateReport& r);
Json to_json(const IntegralSystem& sys, const std::optional<std::size_t>& cor68);
Json to_json(const LeviDescriptor& levi);

// "type" and "ambient" may be omitted from the object when supplied by the
// caller; when both are present they must agree. Validates the result.
LeviDescriptor levi_from_json(const Json& j, std::optional<Classical> type = std::nullopt,
                              std::optional<int> ambient = std::nullopt);

Json rigid_table_json();
Json duality_table_json();
std::string rigid_table_csv();
std::string duality_table_csv();

} // namespace orbitcert
