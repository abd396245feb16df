#pragma once

// DREAD scoring: damage averaging, total risk, priority bands and ranking.
//
// All arithmetic is exact. Totals are multiples of 1/3 because only the
// damage average introduces a denominator; rounding happens once, when a
// total is turned into its two-decimal display string.

#include "mcrisk/error.hpp"
#include "mcrisk/text.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcrisk {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kMinSubScore = 0;
inline constexpr int kMaxSubScore = 10;

struct DamageTriple {
    int legal = 0;
    int reputation = 0;
    int productivity = 0;

    friend bool operator==(const DamageTriple&, const DamageTriple&) = default;
};

struct AttributeQuad {
    int reproducibility = 0;
    int exploitability = 0;
    int affected_users = 0;
    int discoverability = 0;

    friend bool operator==(const AttributeQuad&, const AttributeQuad&) = default;
};

enum class Band { Low, Medium, High, Critical };

inline constexpr std::array<Band, 4> kAllBands = {Band::Low, Band::Medium, Band::High,
                                                  Band::Critical};

inline std::string_view to_string(Band b) noexcept {
    switch (b) {
        case Band::Low: return "Low";
        case Band::Medium: return "Medium";
        case Band::High: return "High";
        case Band::Critical: return "Critical";
    }
    return "Low";
}

/// Case-insensitive; returns nullopt for anything outside the four band names.
inline std::optional<Band> parse_band(std::string_view s) noexcept {
    for (Band b : kAllBands) {
        if (text::iequals(s, to_string(b))) return b;
    }
    return std::nullopt;
}

struct RiskScore {
    Rational average_damage;
    Rational total;
    std::string total_display;
    Band band = Band::Low;

    friend bool operator==(const RiskScore&, const RiskScore&) = default;
};

inline bool in_score_range(int v) noexcept { return v >= kMinSubScore && v <= kMaxSubScore; }

inline bool is_valid(const DamageTriple& d) noexcept {
    return in_score_range(d.legal) && in_score_range(d.reputation) &&
           in_score_range(d.productivity);
}

inline bool is_valid(const AttributeQuad& a) noexcept {
    return in_score_range(a.reproducibility) && in_score_range(a.exploitability) &&
           in_score_range(a.affected_users) && in_score_range(a.discoverability);
}

/// Formats a rational with two decimals, rounding half away from zero.
inline std::string format_fixed2(const Rational& value) {
    const bool negative = value < 0;
    const Rational magnitude = negative ? -value : value;
    // floor(|v| * 100 + 1/2), computed on integers.
    const std::int64_t num = magnitude.numerator();
    const std::int64_t den = magnitude.denominator();
    const std::int64_t cents = (num * 200 + den) / (2 * den);
    std::string out = negative && cents != 0 ? "-" : "";
    out += std::to_string(cents / 100);
    out += '.';
    const std::int64_t frac = cents % 100;
    if (frac < 10) out += '0';
    out += std::to_string(frac);
    return out;
}

inline Rational average_damage(const DamageTriple& d) {
    if (!is_valid(d)) throw ContractViolation("damage sub-score outside [0, 10]");
    return Rational(d.legal + d.reputation + d.productivity, 3);
}

/// Half-open bands: Low [0,11), Medium [11,25), High [25,40), Critical [40,50].
inline Band classify_band(const Rational& total) {
    if (total < 0 || total > 50) {
        throw ContractViolation("total risk " + format_fixed2(total) + " outside [0, 50]");
    }
    if (total >= 40) return Band::Critical;
    if (total >= 25) return Band::High;
    if (total >= 11) return Band::Medium;
    return Band::Low;
}

inline RiskScore total_risk(const DamageTriple& d, const AttributeQuad& a) {
    if (!is_valid(a)) throw ContractViolation("threat attribute outside [0, 10]");
    RiskScore s;
    s.average_damage = average_damage(d);
    s.total = s.average_damage + a.reproducibility + a.exploitability + a.affected_users +
              a.discoverability;
    s.total_display = format_fixed2(s.total);
    s.band = classify_band(s.total);
    return s;
}

/// Orders scored items by descending total, then descending average damage, then
/// ascending threat id. Items equal under all three keep their input order.
///
/// `score_of` projects an item to its RiskScore and `id_of` to its threat id.
template <typename T, typename ScoreProj, typename IdProj>
std::vector<T> rank_assessments(std::vector<T> items, ScoreProj score_of, IdProj id_of) {
    std::stable_sort(items.begin(), items.end(), [&](const T& lhs, const T& rhs) {
        const RiskScore& a = std::invoke(score_of, lhs);
        const RiskScore& b = std::invoke(score_of, rhs);
        if (a.total != b.total) return a.total > b.total;
        if (a.average_damage != b.average_damage) return a.average_damage > b.average_damage;
        return std::string_view(std::invoke(id_of, lhs)) <
               std::string_view(std::invoke(id_of, rhs));
    });
    return items;
}

}  // namespace mcrisk
