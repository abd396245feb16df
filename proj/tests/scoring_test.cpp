#include "mcrisk/scoring.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace mcrisk;

namespace {

// Risk-analysis table rows: printed total, then the seven sub-scores in table
// column order. Copied from the published table, not computed.
struct PrintedRow {
    const char* total;
    DamageTriple d;
    AttributeQuad a;
};

const std::vector<PrintedRow> kPrinted = {
    {"42.67", {0, 10, 10}, {8, 8, 10, 10}}, {"30.33", {0, 6, 7}, {7, 8, 4, 7}},
    {"44.00", {0, 9, 9}, {9, 10, 10, 9}},   {"25.33", {0, 8, 5}, {6, 9, 2, 4}},
    {"22.33", {0, 7, 6}, {5, 8, 2, 3}},     {"19.33", {0, 7, 6}, {5, 6, 2, 2}},
    {"18.00", {0, 7, 8}, {2, 2, 2, 7}},     {"28.00", {0, 9, 6}, {8, 10, 3, 2}},
    {"19.33", {0, 5, 8}, {2, 3, 2, 8}},     {"32.00", {0, 6, 9}, {8, 7, 3, 9}},
    {"23.33", {0, 6, 4}, {7, 8, 1, 4}},     {"29.33", {0, 7, 9}, {10, 10, 2, 2}},
    {"32.67", {0, 9, 5}, {7, 9, 10, 2}},    {"24.67", {0, 9, 5}, {3, 9, 6, 2}},
    {"27.33", {0, 5, 8}, {5, 8, 7, 3}},     {"34.33", {0, 4, 6}, {10, 10, 8, 3}},
    {"22.67", {0, 4, 4}, {4, 4, 6, 6}},     {"20.67", {0, 4, 4}, {4, 4, 4, 6}},
    {"19.33", {0, 5, 5}, {4, 4, 4, 4}},     {"25.67", {0, 8, 9}, {6, 5, 7, 2}},
    {"22.00", {10, 6, 2}, {1, 3, 6, 6}},    {"23.00", {10, 6, 2}, {1, 4, 6, 6}},
    {"23.33", {10, 7, 2}, {1, 4, 6, 6}},    {"22.67", {10, 5, 2}, {1, 4, 6, 6}},
};

// Band oracle on integers: with T = 3 * total, the cut points 11, 25, 40
// become 33, 75, 120.
Band band_oracle(int three_total) {
    if (three_total >= 120) return Band::Critical;
    if (three_total >= 75) return Band::High;
    if (three_total >= 33) return Band::Medium;
    return Band::Low;
}

int three_times_total(const DamageTriple& d, const AttributeQuad& a) {
    return d.legal + d.reputation + d.productivity +
           3 * (a.reproducibility + a.exploitability + a.affected_users + a.discoverability);
}

}  // namespace

TEST(Scoring, PrintedTotalsReproduceExactly) {
    ASSERT_EQ(kPrinted.size(), 24u);
    for (const auto& row : kPrinted) {
        EXPECT_EQ(total_risk(row.d, row.a).total_display, row.total);
    }
}

TEST(Scoring, AverageDamageExamples) {
    EXPECT_EQ(average_damage({0, 10, 10}), Rational(20, 3));
    EXPECT_EQ(format_fixed2(average_damage({0, 10, 10})), "6.67");
    EXPECT_EQ(average_damage({0, 0, 0}), Rational(0));
    EXPECT_EQ(average_damage({10, 6, 2}), Rational(6));
}

TEST(Scoring, TotalRiskExamples) {
    const RiskScore dos = total_risk({0, 10, 10}, {8, 8, 10, 10});
    EXPECT_EQ(dos.total, Rational(128, 3));
    EXPECT_EQ(dos.total_display, "42.67");
    EXPECT_EQ(dos.band, Band::Critical);

    const RiskScore cves = total_risk({0, 9, 9}, {9, 10, 10, 9});
    EXPECT_EQ(cves.total_display, "44.00");
    EXPECT_EQ(cves.band, Band::Critical);

    const RiskScore lo = total_risk({0, 0, 0}, {0, 0, 0, 0});
    EXPECT_EQ(lo.total_display, "0.00");
    EXPECT_EQ(lo.band, Band::Low);

    const RiskScore hi = total_risk({10, 10, 10}, {10, 10, 10, 10});
    EXPECT_EQ(hi.total_display, "50.00");
    EXPECT_EQ(hi.band, Band::Critical);
}

TEST(Scoring, OutOfRangeSubScoresViolateContract) {
    EXPECT_THROW(total_risk({11, 0, 0}, {0, 0, 0, 0}), ContractViolation);
    EXPECT_THROW(total_risk({0, -1, 0}, {0, 0, 0, 0}), ContractViolation);
    EXPECT_THROW(total_risk({0, 0, 0}, {0, 0, 11, 0}), ContractViolation);
    EXPECT_THROW(average_damage({0, 0, 42}), ContractViolation);
}

TEST(Scoring, BandExamplesAndBoundaries) {
    EXPECT_EQ(classify_band(Rational(128, 3)), Band::Critical);
    EXPECT_EQ(classify_band(Rational(44)), Band::Critical);
    EXPECT_EQ(classify_band(Rational(98, 3)), Band::High);
    EXPECT_EQ(classify_band(Rational(18)), Band::Medium);
    EXPECT_EQ(classify_band(Rational(74, 3)), Band::Medium);
    EXPECT_EQ(classify_band(Rational(77, 3)), Band::High);
    EXPECT_EQ(classify_band(Rational(0)), Band::Low);
    EXPECT_EQ(classify_band(Rational(11)), Band::Medium);
    EXPECT_EQ(classify_band(Rational(25)), Band::High);
    EXPECT_EQ(classify_band(Rational(40)), Band::Critical);
    EXPECT_EQ(classify_band(Rational(50)), Band::Critical);
    EXPECT_EQ(classify_band(Rational(32, 3)), Band::Low);
    EXPECT_EQ(classify_band(Rational(119, 3)), Band::High);
    EXPECT_THROW(classify_band(Rational(-1, 3)), ContractViolation);
    EXPECT_THROW(classify_band(Rational(151, 3)), ContractViolation);
}

TEST(Scoring, BandPartitionOverEveryReachableTotal) {
    // Totals are k/3 for k in [0, 150].
    for (int k = 0; k <= 150; ++k) {
        EXPECT_EQ(classify_band(Rational(k, 3)), band_oracle(k)) << "k=" << k;
    }
}

TEST(Scoring, BandNamesRoundTrip) {
    for (Band b : kAllBands) EXPECT_EQ(parse_band(to_string(b)), b);
    EXPECT_EQ(parse_band("critical"), Band::Critical);
    EXPECT_EQ(parse_band("HIGH"), Band::High);
    EXPECT_FALSE(parse_band("severe"));
}

TEST(Scoring, FormatFixed2RoundsHalfUp) {
    EXPECT_EQ(format_fixed2(Rational(1, 200)), "0.01");
    EXPECT_EQ(format_fixed2(Rational(1, 201)), "0.00");
    EXPECT_EQ(format_fixed2(Rational(2, 3)), "0.67");
    EXPECT_EQ(format_fixed2(Rational(1, 3)), "0.33");
    EXPECT_EQ(format_fixed2(Rational(7)), "7.00");
    EXPECT_EQ(format_fixed2(Rational(1005, 100)), "10.05");
    EXPECT_EQ(format_fixed2(Rational(-2, 3)), "-0.67");
}

TEST(ScoringProperty, MonotonicityOverRandomTuples) {
    std::mt19937_64 rng(0x5c0e);
    std::uniform_int_distribution<int> sub(0, 10);
    for (int iter = 0; iter < 10000; ++iter) {
        DamageTriple d{sub(rng), sub(rng), sub(rng)};
        AttributeQuad a{sub(rng), sub(rng), sub(rng), sub(rng)};
        const RiskScore base = total_risk(d, a);
        EXPECT_EQ(base.band, band_oracle(three_times_total(d, a)));

        int* damage[] = {&d.legal, &d.reputation, &d.productivity};
        for (int* field : damage) {
            if (*field == 10) continue;
            ++*field;
            EXPECT_EQ(total_risk(d, a).total - base.total, Rational(1, 3));
            --*field;
        }
        int* attrs[] = {&a.reproducibility, &a.exploitability, &a.affected_users,
                        &a.discoverability};
        for (int* field : attrs) {
            if (*field == 10) continue;
            ++*field;
            EXPECT_EQ(total_risk(d, a).total - base.total, Rational(1));
            --*field;
        }
    }
}

namespace {

struct Item {
    std::string id;
    RiskScore score;
};

Item item(std::string id, DamageTriple d, AttributeQuad a) { return {std::move(id), total_risk(d, a)}; }

std::vector<Item> rank(std::vector<Item> items) {
    return rank_assessments(std::move(items), &Item::score, &Item::id);
}

}  // namespace

TEST(Ranking, EmptyInput) { EXPECT_TRUE(rank({}).empty()); }

TEST(Ranking, IdenticalScoresOrderedById) {
    const auto out = rank({item("zeta", {1, 2, 3}, {4, 4, 4, 4}), item("alpha", {1, 2, 3}, {4, 4, 4, 4})});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].id, "alpha");
    EXPECT_EQ(out[1].id, "zeta");
}

TEST(Ranking, EqualTotalsPreferHigherDamage) {
    // Both total 20: 3 damage + 17 attributes vs 0 damage + 20 attributes.
    const auto out = rank({item("a", {0, 0, 0}, {5, 5, 5, 5}), item("b", {3, 3, 3}, {5, 4, 4, 4})});
    ASSERT_EQ(out[0].score.total, out[1].score.total);
    EXPECT_EQ(out[0].id, "b");
}

TEST(RankingProperty, OutputIsSortedPermutation) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> sub(0, 10);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Item> in;
        const int n = std::uniform_int_distribution<int>(0, 30)(rng);
        for (int i = 0; i < n; ++i) {
            in.push_back(item("t" + std::to_string(sub(rng)), {sub(rng), sub(rng), sub(rng)},
                              {sub(rng), sub(rng), sub(rng), sub(rng)}));
        }
        const auto out = rank(in);
        ASSERT_EQ(out.size(), in.size());
        auto key = [](const Item& x) { return x.id + "/" + x.score.total_display; };
        std::vector<std::string> ki, ko;
        for (const auto& x : in) ki.push_back(key(x));
        for (const auto& x : out) ko.push_back(key(x));
        std::sort(ki.begin(), ki.end());
        std::sort(ko.begin(), ko.end());
        EXPECT_EQ(ki, ko);
        for (std::size_t i = 1; i < out.size(); ++i) {
            const auto& p = out[i - 1].score;
            const auto& c = out[i].score;
            ASSERT_TRUE(p.total > c.total ||
                        (p.total == c.total && (p.average_damage > c.average_damage ||
                                                (p.average_damage == c.average_damage &&
                                                 out[i - 1].id <= out[i].id))));
        }
    }
}
