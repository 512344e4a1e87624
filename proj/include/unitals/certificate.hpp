#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace unitals {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kCertificateSchema = 1;

// One verified property: a stable check name, the property it certifies,
// the verdict, exact tallies, and counterexamples/witnesses if any.
struct CheckRecord {
    std::string name;
    std::string property;
    bool pass = true;
    Json tallies = Json::object();
    Json witnesses = Json::array();
};

struct Certificate {
    std::vector<CheckRecord> checks;

    CheckRecord& add(std::string name, std::string property, bool pass);
    void append(const Certificate& other);
    bool pass() const;
    const CheckRecord* find(const std::string& name) const;

    Json to_json() const;
    static Certificate from_json(const Json& j);
};

// Top-level document written by the CLI: version, echoed config, checks.
Json certificate_document(const Json& config, const Certificate& cert);

}  // namespace unitals
