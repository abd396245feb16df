#pragma once

// Threat registry: definitions with their STRIDE categories and DREAD
// sub-scores, countermeasures, and the published priority labels.
//
// Registry files are JSON:
//
//   {
//     "threats": [
//       { "id": "arch.dos", "name": "...", "family": "architecture",
//         "stride": ["DenialOfService"],
//         "damage": {"legal": 0, "reputation": 10, "productivity": 10},
//         "attributes": {"reproducibility": 8, "exploitability": 8,
//                        "affected_users": 10, "discoverability": 10},
//         "paper_priority_label": "Critical",          (optional)
//         "applicability_rule": "public_exposure" }
//     ],
//     "mitigations": [
//       { "threat_id": "arch.dos", "countermeasures": "...",
//         "attack_mitigations": ["Filter network traffic"] }
//     ]
//   }
//
// Unknown keys are rejected at every level.

#include "mcrisk/rules.hpp"
#include "mcrisk/scoring.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcrisk {

enum class VectorFamily { Architecture, Api, Authentication, Automation, Management, Legislation };

inline constexpr std::array<VectorFamily, 6> kAllFamilies = {
    VectorFamily::Architecture, VectorFamily::Api,        VectorFamily::Authentication,
    VectorFamily::Automation,   VectorFamily::Management, VectorFamily::Legislation};

inline std::string_view to_string(VectorFamily f) noexcept {
    switch (f) {
        case VectorFamily::Architecture: return "architecture";
        case VectorFamily::Api: return "api";
        case VectorFamily::Authentication: return "authentication";
        case VectorFamily::Automation: return "automation";
        case VectorFamily::Management: return "management";
        case VectorFamily::Legislation: return "legislation";
    }
    return "architecture";
}

inline std::optional<VectorFamily> parse_family(std::string_view s) noexcept {
    for (VectorFamily f : kAllFamilies) {
        if (s == to_string(f)) return f;
    }
    return std::nullopt;
}

enum class StrideCategory {
    Spoofing,
    Tampering,
    Repudiation,
    InformationDisclosure,
    DenialOfService,
    ElevationOfPrivilege,
};

inline constexpr std::array<StrideCategory, 6> kAllStride = {
    StrideCategory::Spoofing,        StrideCategory::Tampering,
    StrideCategory::Repudiation,     StrideCategory::InformationDisclosure,
    StrideCategory::DenialOfService, StrideCategory::ElevationOfPrivilege};

inline std::string_view to_string(StrideCategory c) noexcept {
    switch (c) {
        case StrideCategory::Spoofing: return "Spoofing";
        case StrideCategory::Tampering: return "Tampering";
        case StrideCategory::Repudiation: return "Repudiation";
        case StrideCategory::InformationDisclosure: return "InformationDisclosure";
        case StrideCategory::DenialOfService: return "DenialOfService";
        case StrideCategory::ElevationOfPrivilege: return "ElevationOfPrivilege";
    }
    return "Spoofing";
}

/// Long-form category names as printed in STRIDE tables.
inline std::string_view display_name(StrideCategory c) noexcept {
    switch (c) {
        case StrideCategory::Spoofing: return "Spoofing Identity";
        case StrideCategory::Tampering: return "Tampering with Data";
        case StrideCategory::Repudiation: return "Repudiation";
        case StrideCategory::InformationDisclosure: return "Information Disclosure";
        case StrideCategory::DenialOfService: return "Denial of Service";
        case StrideCategory::ElevationOfPrivilege: return "Elevation of Privilege";
    }
    return "Spoofing Identity";
}

inline std::optional<StrideCategory> parse_stride(std::string_view s) noexcept {
    for (StrideCategory c : kAllStride) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

using StrideSet = std::set<StrideCategory>;

struct ThreatDefinition {
    std::string id;
    std::string name;
    VectorFamily family = VectorFamily::Architecture;
    StrideSet stride;
    DamageTriple damage;
    AttributeQuad attributes;
    std::optional<Band> paper_priority_label;
    std::string applicability_rule;

    RiskScore score() const { return total_risk(damage, attributes); }

    friend bool operator==(const ThreatDefinition&, const ThreatDefinition&) = default;
};

struct MitigationEntry {
    std::string threat_id;
    std::string countermeasures;
    std::vector<std::string> attack_mitigations;  // empty where no ATT&CK mitigation applies

    friend bool operator==(const MitigationEntry&, const MitigationEntry&) = default;
};

class RegistryError : public std::runtime_error {
public:
    enum class Kind { Syntax, Schema, Range, DuplicateId, DanglingReference, UnknownRule };

    RegistryError(Kind kind, std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          kind_(kind),
          path_(std::move(path)) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

private:
    Kind kind_;
    std::string path_;
};

class UnknownThreat : public std::runtime_error {
public:
    explicit UnknownThreat(const std::string& id)
        : UnknownThreat(id, "unknown threat '" + id + "'") {}
    UnknownThreat(const std::string& id, const std::string& message)
        : std::runtime_error(message), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// Validated, immutable set of threat definitions and mitigation entries.
class Registry {
public:
    Registry() = default;

    /// Throws RegistryError if any definition or mitigation invariant fails.
    Registry(std::vector<ThreatDefinition> threats, std::vector<MitigationEntry> mitigations)
        : threats_(std::move(threats)), mitigations_(std::move(mitigations)) {
        validate();
    }

    const std::vector<ThreatDefinition>& threats() const noexcept { return threats_; }
    const std::vector<MitigationEntry>& mitigations() const noexcept { return mitigations_; }

    const ThreatDefinition* find_threat(std::string_view id) const noexcept {
        for (const auto& t : threats_) {
            if (t.id == id) return &t;
        }
        return nullptr;
    }

    const MitigationEntry* find_mitigation(std::string_view threat_id) const noexcept {
        for (const auto& m : mitigations_) {
            if (m.threat_id == threat_id) return &m;
        }
        return nullptr;
    }

    friend bool operator==(const Registry&, const Registry&) = default;

private:
    void validate() const {
        std::set<std::string_view> ids;
        for (std::size_t i = 0; i < threats_.size(); ++i) {
            const auto& t = threats_[i];
            const std::string path = "threats[" + std::to_string(i) + "]";
            if (t.id.empty()) throw RegistryError(RegistryError::Kind::Schema, path + ".id", "empty id");
            if (!ids.insert(t.id).second) {
                throw RegistryError(RegistryError::Kind::DuplicateId, path + ".id",
                                    "duplicate threat id '" + t.id + "'");
            }
            if (t.name.empty()) {
                throw RegistryError(RegistryError::Kind::Schema, path + ".name", "empty name");
            }
            if (t.stride.empty()) {
                throw RegistryError(RegistryError::Kind::Schema, path + ".stride",
                                    "stride set must not be empty");
            }
            check_range(path + ".damage.legal", t.damage.legal);
            check_range(path + ".damage.reputation", t.damage.reputation);
            check_range(path + ".damage.productivity", t.damage.productivity);
            check_range(path + ".attributes.reproducibility", t.attributes.reproducibility);
            check_range(path + ".attributes.exploitability", t.attributes.exploitability);
            check_range(path + ".attributes.affected_users", t.attributes.affected_users);
            check_range(path + ".attributes.discoverability", t.attributes.discoverability);
            if (!find_rule(t.applicability_rule)) {
                throw RegistryError(RegistryError::Kind::UnknownRule, path + ".applicability_rule",
                                    "unknown applicability rule '" + t.applicability_rule + "'");
            }
        }
        std::set<std::string_view> mitigated;
        for (std::size_t i = 0; i < mitigations_.size(); ++i) {
            const auto& m = mitigations_[i];
            const std::string path = "mitigations[" + std::to_string(i) + "]";
            if (!ids.count(m.threat_id)) {
                throw RegistryError(RegistryError::Kind::DanglingReference, path + ".threat_id",
                                    "mitigation references unknown threat '" + m.threat_id + "'");
            }
            if (!mitigated.insert(m.threat_id).second) {
                throw RegistryError(RegistryError::Kind::DuplicateId, path + ".threat_id",
                                    "second mitigation entry for '" + m.threat_id + "'");
            }
            if (m.countermeasures.empty()) {
                throw RegistryError(RegistryError::Kind::Schema, path + ".countermeasures",
                                    "countermeasures must not be empty");
            }
        }
    }

    static void check_range(const std::string& path, int v) {
        if (!in_score_range(v)) {
            throw RegistryError(RegistryError::Kind::Range, path,
                                "score " + std::to_string(v) + " outside [0, 10]");
        }
    }

    std::vector<ThreatDefinition> threats_;
    std::vector<MitigationEntry> mitigations_;
};

// ---------------------------------------------------------------------------
// JSON file format

namespace registry_json {

using json = nlohmann::ordered_json;

inline void expect_keys(const json& obj, const std::string& path,
                        std::initializer_list<std::string_view> required,
                        std::initializer_list<std::string_view> optional = {}) {
    if (!obj.is_object()) throw RegistryError(RegistryError::Kind::Schema, path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& key = it.key();
        const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                           std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) {
            throw RegistryError(RegistryError::Kind::Schema, path + "." + key, "unknown field");
        }
    }
    for (std::string_view key : required) {
        if (!obj.contains(std::string(key))) {
            throw RegistryError(RegistryError::Kind::Schema, path + "." + std::string(key),
                                "missing required field");
        }
    }
}

inline std::string get_string(const json& obj, const std::string& key, const std::string& path) {
    const json& v = obj.at(key);
    if (!v.is_string()) {
        throw RegistryError(RegistryError::Kind::Schema, path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

inline int get_score(const json& obj, const std::string& key, const std::string& path) {
    const json& v = obj.at(key);
    const std::string field = path + "." + key;
    if (!v.is_number_integer()) {
        throw RegistryError(RegistryError::Kind::Schema, field, "expected an integer");
    }
    const auto raw = v.get<std::int64_t>();
    if (raw < kMinSubScore || raw > kMaxSubScore) {
        throw RegistryError(RegistryError::Kind::Range, field,
                            "score " + std::to_string(raw) + " outside [0, 10]");
    }
    return static_cast<int>(raw);
}

inline ThreatDefinition threat_from_json(const json& j, const std::string& path) {
    expect_keys(j, path,
                {"id", "name", "family", "stride", "damage", "attributes", "applicability_rule"},
                {"paper_priority_label"});
    ThreatDefinition t;
    t.id = get_string(j, "id", path);
    t.name = get_string(j, "name", path);
    const std::string family = get_string(j, "family", path);
    const auto fam = parse_family(family);
    if (!fam) {
        throw RegistryError(RegistryError::Kind::Schema, path + ".family",
                            "unknown vector family '" + family + "'");
    }
    t.family = *fam;

    const json& stride = j.at("stride");
    if (!stride.is_array()) {
        throw RegistryError(RegistryError::Kind::Schema, path + ".stride", "expected a list");
    }
    for (std::size_t i = 0; i < stride.size(); ++i) {
        const std::string p = path + ".stride[" + std::to_string(i) + "]";
        if (!stride[i].is_string()) throw RegistryError(RegistryError::Kind::Schema, p, "expected a string");
        const auto cat = parse_stride(stride[i].get<std::string>());
        if (!cat) {
            throw RegistryError(RegistryError::Kind::Schema, p,
                                "unknown STRIDE category '" + stride[i].get<std::string>() + "'");
        }
        t.stride.insert(*cat);
    }
    if (t.stride.empty()) {
        throw RegistryError(RegistryError::Kind::Schema, path + ".stride",
                            "stride set must not be empty");
    }

    const std::string dpath = path + ".damage";
    const json& d = j.at("damage");
    expect_keys(d, dpath, {"legal", "reputation", "productivity"});
    t.damage = {get_score(d, "legal", dpath), get_score(d, "reputation", dpath),
                get_score(d, "productivity", dpath)};

    const std::string apath = path + ".attributes";
    const json& a = j.at("attributes");
    expect_keys(a, apath, {"reproducibility", "exploitability", "affected_users", "discoverability"});
    t.attributes = {get_score(a, "reproducibility", apath), get_score(a, "exploitability", apath),
                    get_score(a, "affected_users", apath), get_score(a, "discoverability", apath)};

    if (j.contains("paper_priority_label")) {
        const std::string label = get_string(j, "paper_priority_label", path);
        const auto band = parse_band(label);
        if (!band || label != to_string(*band)) {
            throw RegistryError(RegistryError::Kind::Schema, path + ".paper_priority_label",
                                "unknown band '" + label + "'");
        }
        t.paper_priority_label = band;
    }
    t.applicability_rule = get_string(j, "applicability_rule", path);
    return t;
}

inline MitigationEntry mitigation_from_json(const json& j, const std::string& path) {
    expect_keys(j, path, {"threat_id", "countermeasures", "attack_mitigations"});
    MitigationEntry m;
    m.threat_id = get_string(j, "threat_id", path);
    m.countermeasures = get_string(j, "countermeasures", path);
    const json& list = j.at("attack_mitigations");
    if (!list.is_array()) {
        throw RegistryError(RegistryError::Kind::Schema, path + ".attack_mitigations",
                            "expected a list");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!list[i].is_string()) {
            throw RegistryError(RegistryError::Kind::Schema,
                                path + ".attack_mitigations[" + std::to_string(i) + "]",
                                "expected a string");
        }
        m.attack_mitigations.push_back(list[i].get<std::string>());
    }
    return m;
}

inline json to_json(const ThreatDefinition& t) {
    json j;
    j["id"] = t.id;
    j["name"] = t.name;
    j["family"] = to_string(t.family);
    json stride = json::array();
    for (StrideCategory c : t.stride) stride.push_back(to_string(c));
    j["stride"] = std::move(stride);
    j["damage"] = {{"legal", t.damage.legal},
                   {"reputation", t.damage.reputation},
                   {"productivity", t.damage.productivity}};
    j["attributes"] = {{"reproducibility", t.attributes.reproducibility},
                       {"exploitability", t.attributes.exploitability},
                       {"affected_users", t.attributes.affected_users},
                       {"discoverability", t.attributes.discoverability}};
    if (t.paper_priority_label) j["paper_priority_label"] = to_string(*t.paper_priority_label);
    j["applicability_rule"] = t.applicability_rule;
    return j;
}

inline json to_json(const MitigationEntry& m) {
    json j;
    j["threat_id"] = m.threat_id;
    j["countermeasures"] = m.countermeasures;
    j["attack_mitigations"] = m.attack_mitigations;
    return j;
}

}  // namespace registry_json

/// Parses and validates a registry document. Throws RegistryError with a
/// field path such as "threats[3].damage.legal".
inline Registry load_registry(std::string_view document) {
    using registry_json::json;
    json root;
    try {
        root = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw RegistryError(RegistryError::Kind::Syntax, "", e.what());
    }
    registry_json::expect_keys(root, "$", {"threats", "mitigations"});

    std::vector<ThreatDefinition> threats;
    const json& tlist = root.at("threats");
    if (!tlist.is_array()) throw RegistryError(RegistryError::Kind::Schema, "threats", "expected a list");
    for (std::size_t i = 0; i < tlist.size(); ++i) {
        threats.push_back(registry_json::threat_from_json(tlist[i], "threats[" + std::to_string(i) + "]"));
    }
    std::vector<MitigationEntry> mitigations;
    const json& mlist = root.at("mitigations");
    if (!mlist.is_array()) {
        throw RegistryError(RegistryError::Kind::Schema, "mitigations", "expected a list");
    }
    for (std::size_t i = 0; i < mlist.size(); ++i) {
        mitigations.push_back(
            registry_json::mitigation_from_json(mlist[i], "mitigations[" + std::to_string(i) + "]"));
    }
    return Registry(std::move(threats), std::move(mitigations));
}

inline std::string serialize_registry(const Registry& registry) {
    using registry_json::json;
    json root;
    root["threats"] = json::array();
    for (const auto& t : registry.threats()) root["threats"].push_back(registry_json::to_json(t));
    root["mitigations"] = json::array();
    for (const auto& m : registry.mitigations()) {
        root["mitigations"].push_back(registry_json::to_json(m));
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

inline const MitigationEntry& lookup_mitigations(const Registry& registry,
                                                 std::string_view threat_id) {
    if (!registry.find_threat(threat_id)) throw UnknownThreat(std::string(threat_id));
    const MitigationEntry* entry = registry.find_mitigation(threat_id);
    if (!entry) {
        throw UnknownThreat(std::string(threat_id),
                            "threat '" + std::string(threat_id) + "' has no mitigation entry");
    }
    return *entry;
}

struct ConsistencyDiscrepancy {
    std::string threat_id;
    Band paper_label = Band::Low;
    Band computed_band = Band::Low;
    std::string total_display;

    friend bool operator==(const ConsistencyDiscrepancy&, const ConsistencyDiscrepancy&) = default;
};

/// Compares each stored priority label with the band computed from the
/// definition's sub-scores. Entries without a label are skipped.
inline std::vector<ConsistencyDiscrepancy> check_band_consistency(const Registry& registry) {
    std::vector<ConsistencyDiscrepancy> out;
    for (const auto& t : registry.threats()) {
        if (!t.paper_priority_label) continue;
        const RiskScore s = t.score();
        if (s.band != *t.paper_priority_label) {
            out.push_back({t.id, *t.paper_priority_label, s.band, s.total_display});
        }
    }
    return out;
}

}  // namespace mcrisk
