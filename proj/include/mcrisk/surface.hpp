#pragma once

// Attack-surface enumeration: binds each registry threat to the parts of an
// architecture its applicability rule selects, then ranks the result.

#include "mcrisk/model.hpp"
#include "mcrisk/registry.hpp"
#include "mcrisk/rules.hpp"
#include "mcrisk/scoring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mcrisk {

struct ThreatInstance {
    ThreatDefinition threat;
    std::vector<std::string> targets;
    RiskScore score;

    const std::string& threat_id() const noexcept { return threat.id; }

    friend bool operator==(const ThreatInstance&, const ThreatInstance&) = default;
};

namespace detail {

using TargetSets = std::vector<std::vector<std::string>>;

inline std::string pair_id(const std::string& a, const std::string& b) {
    return a < b ? a + "|" + b : b + "|" + a;
}

template <typename Pred>
TargetSets each_node(const ArchitectureModel& m, Pred pred) {
    TargetSets out;
    for (const auto& n : m.nodes()) {
        if (pred(n)) out.push_back({n.id});
    }
    return out;
}

template <typename Pred>
TargetSets each_link(const ArchitectureModel& m, Pred pred) {
    TargetSets out;
    for (const auto& l : m.links()) {
        if (pred(l)) out.push_back({l.id});
    }
    return out;
}

inline TargetSets unordered_pairs(const std::vector<std::string>& sorted_unique) {
    TargetSets out;
    for (std::size_t i = 0; i < sorted_unique.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted_unique.size(); ++j) {
            out.push_back({pair_id(sorted_unique[i], sorted_unique[j])});
        }
    }
    return out;
}

inline TargetSets apply_rule(const ApplicabilityRule& rule, const ArchitectureModel& m) {
    const std::string_view id = rule.rule_id;
    const auto is_api = [](const Link& l) { return l.kind == LinkKind::Api; };
    const auto is_session = [](const Link& l) { return l.kind == LinkKind::UserSession; };

    if (id == "public_exposure") {
        TargetSets out = each_node(m, [](const Node& n) { return n.subnet == Subnet::Public; });
        TargetSets sessions = each_link(m, is_session);
        out.insert(out.end(), sessions.begin(), sessions.end());
        return out;
    }
    if (id == "all_nodes") {
        std::vector<std::string> all;
        for (const auto& n : m.nodes()) all.push_back(n.id);
        return {all};
    }
    if (id == "cross_provider_links") {
        return each_link(m, [](const Link& l) { return l.crosses_provider; });
    }
    if (id == "vpn_links") {
        return each_link(m, [](const Link& l) { return l.kind == LinkKind::Vpn; });
    }
    if (id == "virtualized_nodes") {
        return each_node(m, [](const Node& n) { return n.virtualized; });
    }
    if (id == "multiple_providers") {
        if (m.providers().size() >= 2) return {{std::string(kGlobalTarget)}};
        return {};
    }
    if (id == "api_links") return each_link(m, is_api);
    if (id == "cross_provider_api_links") {
        return each_link(m, [&](const Link& l) { return is_api(l) && l.crosses_provider; });
    }
    if (id == "api_hub_nodes") {
        std::map<std::string, int> api_degree;
        for (const auto& l : m.links()) {
            if (!is_api(l)) continue;
            ++api_degree[l.from];
            if (l.to != l.from) ++api_degree[l.to];
        }
        return each_node(m, [&](const Node& n) {
            auto it = api_degree.find(n.id);
            return it != api_degree.end() && it->second >= 2;
        });
    }
    if (id == "session_links") return each_link(m, is_session);
    if (id == "cross_provider_data_links") {
        return each_link(m, [](const Link& l) {
            return l.crosses_provider &&
                   (l.kind == LinkKind::Api || l.kind == LinkKind::StorageIo);
        });
    }
    if (id == "divergent_iam") {
        std::set<std::string> domains;
        for (const auto& p : m.providers()) domains.insert(p.iam_domain);
        if (domains.size() >= 2) return {{std::string(kGlobalTarget)}};
        return {};
    }
    if (id == "automation") {
        if (!m.automation_enabled()) return {};
        std::vector<std::string> orchestrated;
        for (const auto& n : m.nodes()) {
            if (n.orchestrated) orchestrated.push_back(n.id);
        }
        if (orchestrated.empty()) orchestrated.emplace_back(kGlobalTarget);
        return {orchestrated};
    }
    if (id == "provider_pairs") {
        std::vector<std::string> ids;
        for (const auto& p : m.providers()) ids.push_back(p.id);
        return unordered_pairs(ids);
    }
    if (id == "jurisdiction_pairs") {
        std::set<std::string> codes;
        for (const auto& p : m.providers()) codes.insert(p.jurisdiction);
        return unordered_pairs({codes.begin(), codes.end()});
    }
    throw RegistryError(RegistryError::Kind::UnknownRule, "",
                        "no evaluator for applicability rule '" + std::string(id) + "'");
}

}  // namespace detail

/// Applies every registry threat's rule to the model. Output is in registry
/// order, then by target list.
inline std::vector<ThreatInstance> enumerate_instances(const ArchitectureModel& model,
                                                       const Registry& registry) {
    std::vector<ThreatInstance> out;
    for (const auto& threat : registry.threats()) {
        const ApplicabilityRule* rule = find_rule(threat.applicability_rule);
        if (!rule) {
            throw RegistryError(RegistryError::Kind::UnknownRule, threat.id,
                                "unknown applicability rule '" + threat.applicability_rule + "'");
        }
        detail::TargetSets sets = detail::apply_rule(*rule, model);
        std::sort(sets.begin(), sets.end());
        const RiskScore score = threat.score();
        for (auto& targets : sets) out.push_back({threat, std::move(targets), score});
    }
    return out;
}

inline std::vector<ThreatInstance> rank_instances(std::vector<ThreatInstance> instances) {
    return rank_assessments(std::move(instances), &ThreatInstance::score,
                            &ThreatInstance::threat_id);
}

/// Enumerates and ranks; the entry point behind `mcrisk assess`.
inline std::vector<ThreatInstance> assess(const ArchitectureModel& model, const Registry& registry) {
    return rank_instances(enumerate_instances(model, registry));
}

}  // namespace mcrisk
