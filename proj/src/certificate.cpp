#include "unitals/certificate.hpp"

#include <algorithm>

namespace unitals {

CheckRecord& Certificate::add(std::string name, std::string property, bool pass) {
    checks.push_back({std::move(name), std::move(property), pass, Json::object(), Json::array()});
    return checks.back();
}

void Certificate::append(const Certificate& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

bool Certificate::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* Certificate::find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

Json Certificate::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name},
                       {"property", c.property},
                       {"verdict", c.pass ? "PASS" : "FAIL"},
                       {"tallies", c.tallies},
                       {"witnesses", c.witnesses}});
    return arr;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate cert;
    for (const auto& c : j) {
        auto& rec = cert.add(c.at("name"), c.at("property"), c.at("verdict") == "PASS");
        rec.tallies = c.value("tallies", Json::object());
        rec.witnesses = c.value("witnesses", Json::array());
    }
    return cert;
}

Json certificate_document(const Json& config, const Certificate& cert) {
    return {{"schema_version", kCertificateSchema},
            {"tool_version", kToolVersion},
            {"config", config},
            {"verdict", cert.pass() ? "PASS" : "FAIL"},
            {"checks", cert.to_json()}};
}

}  // namespace unitals
