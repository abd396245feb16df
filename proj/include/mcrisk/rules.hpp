#pragma once

// Catalog of applicability rules. A rule decides which parts of an
// architecture a threat attaches to; the evaluation lives in surface.hpp.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace mcrisk {

enum class TargetKind : std::uint8_t { Node, Link, ProviderPair, JurisdictionPair, Global };

inline std::string_view to_string(TargetKind k) noexcept {
    switch (k) {
        case TargetKind::Node: return "node";
        case TargetKind::Link: return "link";
        case TargetKind::ProviderPair: return "provider_pair";
        case TargetKind::JurisdictionPair: return "jurisdiction_pair";
        case TargetKind::Global: return "global";
    }
    return "global";
}

class TargetKinds {
public:
    constexpr TargetKinds() = default;
    constexpr TargetKinds(std::initializer_list<TargetKind> kinds) {
        for (TargetKind k : kinds) bits_ |= bit(k);
    }
    constexpr bool contains(TargetKind k) const noexcept { return (bits_ & bit(k)) != 0; }

private:
    static constexpr std::uint8_t bit(TargetKind k) noexcept {
        return static_cast<std::uint8_t>(1U << static_cast<unsigned>(k));
    }
    std::uint8_t bits_ = 0;
};

struct ApplicabilityRule {
    std::string_view rule_id;
    std::string_view description;
    TargetKinds target_kinds;
};

inline constexpr std::string_view kGlobalTarget = "global";

inline constexpr std::array<ApplicabilityRule, 15> kApplicabilityRules = {{
    {"public_exposure", "each node in a public subnet and each user_session link",
     {TargetKind::Node, TargetKind::Link}},
    {"all_nodes", "one instance covering every node", {TargetKind::Node}},
    {"cross_provider_links", "each link whose endpoints sit on different providers",
     {TargetKind::Link}},
    {"vpn_links", "each vpn link", {TargetKind::Link}},
    {"virtualized_nodes", "each virtualized node", {TargetKind::Node}},
    {"multiple_providers", "one global instance when two or more providers are present",
     {TargetKind::Global}},
    {"api_links", "each api link", {TargetKind::Link}},
    {"cross_provider_api_links", "each api link that crosses providers", {TargetKind::Link}},
    {"api_hub_nodes", "each node that terminates two or more api links", {TargetKind::Node}},
    {"session_links", "each user_session link", {TargetKind::Link}},
    {"cross_provider_data_links", "each api or storage_io link that crosses providers",
     {TargetKind::Link}},
    {"divergent_iam", "one global instance when providers use two or more identity domains",
     {TargetKind::Global}},
    {"automation",
     "one instance when automation is enabled, covering orchestrated nodes (or global)",
     {TargetKind::Node, TargetKind::Global}},
    {"provider_pairs", "each unordered pair of distinct providers", {TargetKind::ProviderPair}},
    {"jurisdiction_pairs", "each unordered pair of distinct provider jurisdictions",
     {TargetKind::JurisdictionPair}},
}};

inline const ApplicabilityRule* find_rule(std::string_view rule_id) noexcept {
    for (const auto& r : kApplicabilityRules) {
        if (r.rule_id == rule_id) return &r;
    }
    return nullptr;
}

}  // namespace mcrisk
