#pragma once

// The built-in threat registry: 24 multi-cloud threats across six attack
// vector families, in risk-analysis table order.
//
// Slug <-> name mapping (names are the risk-analysis table's descriptions):
//
//   arch.dos                Architecture: DoS attacks
//   arch.encryption_diff    Architecture: Differing Encryption Offerings and Capabilities
//   arch.cves               Architecture: CVEs
//   arch.vpn                Architecture: VPN Infiltration
//   arch.virt_stack         Architecture: Guest OS, Hypervisor, and Host OS
//   arch.multi_provider     Architecture: Addition of Multiple Cloud Providers
//   api.format              API : Interface Format Consistency
//   api.priv_elev           API : Privilege Elevation
//   api.conflict            API : Multiple API Connections Conflict
//   api.malformed           API : Malformed Packets
//   auth.session_hijack     Authentication : Session Hijacking
//   auth.substitution       Authentication : Substitution Attack
//   auth.mitm               Authentication : Man-in-the-Middle
//   auth.inconsistent_acl   Authentication : Inconsistent User ACL
//   auto.dynamic_config     Automation : Dynamic changes to config causing inconsistency
//   auto.data_poisoning     Automation : Data poisoning
//   mgmt.sla                Difference in Management: Service Level Agreement (SLAs)
//   mgmt.cma                Difference in Management: Cloud Management Agreement
//   mgmt.monetization       Difference in Management: Monetization
//   mgmt.auto_scaling       Difference in Management: Auto-Scaling
//   legis.data_privacy      Mismatch in Cyber Legislation: Data Privacy Laws
//   legis.data_control      Mismatch in Cyber Legislation: Data Control
//   legis.data_sharing      Mismatch in Cyber Legislation: Data Release/Sharing
//   legis.data_sovereignty  Mismatch in Cyber Legislation: Data Sovereignty Laws

#include "mcrisk/registry.hpp"

#include <utility>
#include <vector>

namespace mcrisk {

namespace detail {

struct CanonicalRow {
    const char* id;
    const char* name;
    VectorFamily family;
    StrideSet stride;
    DamageTriple damage;
    AttributeQuad attributes;
    Band label;
    const char* rule;
    const char* countermeasures;
    std::vector<std::string> attack_mitigations;
};

inline Registry make_canonical_registry() {
    using F = VectorFamily;
    using S = StrideCategory;
    const StrideSet all(kAllStride.begin(), kAllStride.end());

    // clang-format off
    const std::vector<CanonicalRow> rows = {
        {"arch.dos", "Architecture: DoS attacks", F::Architecture,
         {S::DenialOfService}, {0, 10, 10}, {8, 8, 10, 10}, Band::Critical, "public_exposure",
         "WAF w/DDoS mitigation", {"Filter network traffic"}},
        {"arch.encryption_diff", "Architecture: Differing Encryption Offerings and Capabilities", F::Architecture,
         {S::InformationDisclosure}, {0, 6, 7}, {7, 8, 4, 7}, Band::High, "cross_provider_links",
         "ITIL - Change Management - Secrets Management", {}},
        {"arch.cves", "Architecture: CVEs", F::Architecture,
         all, {0, 9, 9}, {9, 10, 10, 9}, Band::Critical, "all_nodes",
         "Patch Management - System Hardening", {"Patch"}},
        {"arch.vpn", "Architecture: VPN Infiltration", F::Architecture,
         {S::InformationDisclosure}, {0, 8, 5}, {6, 9, 2, 4}, Band::High, "vpn_links",
         "ICAM-MFA, Network segmentation", {"Network segmentation", "MFA"}},
        {"arch.virt_stack", "Architecture: Guest OS, Hypervisor, and Host OS", F::Architecture,
         {S::Tampering}, {0, 7, 6}, {5, 8, 2, 3}, Band::Medium, "virtualized_nodes",
         "Patch Management - System Hardening", {"User Acct Mgmt"}},
        {"arch.multi_provider", "Architecture: Addition of Multiple Cloud Providers", F::Architecture,
         all, {0, 7, 6}, {5, 6, 2, 2}, Band::Medium, "multiple_providers",
         "ITIL - Change Management - CMDB", {}},
        {"api.format", "API : Interface Format Consistency", F::Api,
         {S::Tampering}, {0, 7, 8}, {2, 2, 2, 7}, Band::Medium, "api_links",
         "ITIL - Change Management - CMDB", {}},
        {"api.priv_elev", "API : Privilege Elevation", F::Api,
         {S::ElevationOfPrivilege}, {0, 9, 6}, {8, 10, 3, 2}, Band::High, "cross_provider_api_links",
         "PAM - least privilege", {"Monitor", "Audit GPO", "PAM", "User Acct mgmt"}},
        {"api.conflict", "API : Multiple API Connections Conflict", F::Api,
         {S::Tampering}, {0, 5, 8}, {2, 3, 2, 8}, Band::Medium, "api_hub_nodes",
         "ITIL - Change Management - CMDB", {}},
        {"api.malformed", "API : Malformed Packets", F::Api,
         {S::DenialOfService}, {0, 6, 9}, {8, 7, 3, 9}, Band::High, "api_links",
         "API security & encryption", {"Monitoring"}},
        {"auth.session_hijack", "Authentication : Session Hijacking", F::Authentication,
         {S::Spoofing}, {0, 6, 4}, {7, 8, 1, 4}, Band::Medium, "session_links",
         "TLS encryption on all sessions & MFA", {"MFA", "delete persistent cookies"}},
        {"auth.substitution", "Authentication : Substitution Attack", F::Authentication,
         {S::DenialOfService}, {0, 7, 9}, {10, 10, 2, 2}, Band::High, "cross_provider_data_links",
         "Secure Block-cypher - timestamp", {"Audit", "PAM", "Cert Mgmt"}},
        {"auth.mitm", "Authentication : Man-in-the-Middle", F::Authentication,
         {S::InformationDisclosure}, {0, 9, 5}, {7, 9, 10, 2}, Band::High, "cross_provider_data_links",
         "Secrets Management - DNSsec", {"Static network config"}},
        {"auth.inconsistent_acl", "Authentication : Inconsistent User ACL", F::Authentication,
         {S::ElevationOfPrivilege}, {0, 9, 5}, {3, 9, 6, 2}, Band::High, "divergent_iam",
         "ICAM - SCIM/SAML", {"ICAM"}},
        {"auto.dynamic_config", "Automation : Dynamic changes to config causing inconsistency", F::Automation,
         {S::DenialOfService}, {0, 5, 8}, {5, 8, 7, 3}, Band::High, "automation",
         "SOAR Configuration Management - ITIL", {}},
        {"auto.data_poisoning", "Automation : Data poisoning", F::Automation,
         {S::Tampering}, {0, 4, 6}, {10, 10, 8, 3}, Band::High, "automation",
         "ICAM - Data Encryption - Secrets Management", {"Filter network traffic", "IPS"}},
        {"mgmt.sla", "Difference in Management: Service Level Agreement (SLAs)", F::Management,
         {S::Repudiation}, {0, 4, 4}, {4, 4, 6, 6}, Band::Medium, "provider_pairs",
         "ITIL - Service Level Management - CMDB", {}},
        {"mgmt.cma", "Difference in Management: Cloud Management Agreement", F::Management,
         {S::Repudiation}, {0, 4, 4}, {4, 4, 4, 6}, Band::Medium, "provider_pairs",
         "ITIL - Supplier Management", {}},
        {"mgmt.monetization", "Difference in Management: Monetization", F::Management,
         {S::Repudiation}, {0, 5, 5}, {4, 4, 4, 4}, Band::Medium, "provider_pairs",
         "ITIL - Supplier Management", {}},
        {"mgmt.auto_scaling", "Difference in Management: Auto-Scaling", F::Management,
         {S::DenialOfService}, {0, 8, 9}, {6, 5, 7, 2}, Band::Medium, "provider_pairs",
         "ITIL - Event Management", {}},
        {"legis.data_privacy", "Mismatch in Cyber Legislation: Data Privacy Laws", F::Legislation,
         {S::InformationDisclosure}, {10, 6, 2}, {1, 3, 6, 6}, Band::Medium, "jurisdiction_pairs",
         "Regulatory Compliance Management", {}},
        {"legis.data_control", "Mismatch in Cyber Legislation: Data Control", F::Legislation,
         {S::InformationDisclosure}, {10, 6, 2}, {1, 4, 6, 6}, Band::Medium, "jurisdiction_pairs",
         "Data Governance", {}},
        {"legis.data_sharing", "Mismatch in Cyber Legislation: Data Release/Sharing", F::Legislation,
         {S::InformationDisclosure}, {10, 7, 2}, {1, 4, 6, 6}, Band::Medium, "jurisdiction_pairs",
         "Data Governance", {}},
        {"legis.data_sovereignty", "Mismatch in Cyber Legislation: Data Sovereignty Laws", F::Legislation,
         {S::InformationDisclosure}, {10, 5, 2}, {1, 4, 6, 6}, Band::Medium, "jurisdiction_pairs",
         "Data Governance", {}},
    };
    // clang-format on

    std::vector<ThreatDefinition> threats;
    std::vector<MitigationEntry> mitigations;
    for (const auto& r : rows) {
        threats.push_back({r.id, r.name, r.family, r.stride, r.damage, r.attributes, r.label, r.rule});
        mitigations.push_back({r.id, r.countermeasures, r.attack_mitigations});
    }
    return Registry(std::move(threats), std::move(mitigations));
}

}  // namespace detail

inline const Registry& canonical_registry() {
    static const Registry registry = detail::make_canonical_registry();
    return registry;
}

}  // namespace mcrisk
