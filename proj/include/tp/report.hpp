#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace tp {

/// Outcome of an exhaustive or property check. A failing report always
/// carries a witness. Serialization is deterministic: timing is kept out
/// of the JSON so identical runs produce identical bytes.
struct verification_report {
    std::string claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    bool pass = false;
    nlohmann::ordered_json witness;  // null unless failing or informative
    std::optional<std::uint64_t> seed;
    double wall_ms = 0.0;  // not serialized

    static verification_report passed(std::string claim, nlohmann::ordered_json params) {
        verification_report r;
        r.claim = std::move(claim);
        r.params = std::move(params);
        r.pass = true;
        return r;
    }

    static verification_report failed(std::string claim, nlohmann::ordered_json params,
                                      nlohmann::ordered_json witness) {
        verification_report r;
        r.claim = std::move(claim);
        r.params = std::move(params);
        r.pass = false;
        r.witness = std::move(witness);
        return r;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["claim"] = claim;
        j["params"] = params;
        j["status"] = pass ? "pass" : "fail";
        if (seed) j["seed"] = *seed;
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }

    std::string to_json_line() const { return to_json().dump(); }
};

} // namespace tp
