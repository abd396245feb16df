#include "support.hpp"

#include <gtest/gtest.h>

using namespace mcrisk;
using mcrisk::testing::Gen;

namespace {

const char* kMinimal =
    "jurisdiction US; provider p1 { region: US }; node web1 { tier: web, provider: p1, subnet: public }";

std::vector<dsl::ParseError> errors_of(std::string_view src) {
    auto r = dsl::parse(src);
    EXPECT_FALSE(r.ok());
    return r.errors;
}

std::string_view at(std::string_view src, const dsl::SourceSpan& span) {
    return src.substr(span.offset, std::min(span.length, src.size() - span.offset));
}

}  // namespace

TEST(Dsl, MinimalSource) {
    auto r = dsl::parse(kMinimal);
    ASSERT_TRUE(r.ok()) << r.errors.front().format();
    EXPECT_EQ(r.model->nodes().size(), 1u);
    const Node& n = r.model->nodes()[0];
    EXPECT_EQ(n.tier, Tier::Web);
    EXPECT_EQ(n.subnet, Subnet::Public);
    EXPECT_TRUE(n.virtualized);
    EXPECT_FALSE(n.orchestrated);
    EXPECT_EQ(r.model->providers()[0].iam_domain, "p1");
    EXPECT_FALSE(r.model->automation_enabled());
}

TEST(Dsl, HealthcareFixture) {
    const ArchitectureModel m = mcrisk::testing::healthcare_model();
    EXPECT_EQ(m.nodes().size(), 4u);
    EXPECT_EQ(m.links().size(), 3u);
    EXPECT_EQ(m.providers().size(), 4u);
    EXPECT_EQ(m.jurisdictions().size(), 4u);
    EXPECT_EQ(m.name(), "Healthcare patient portal");
    EXPECT_FALSE(m.find_node("patient-records")->virtualized);
    EXPECT_EQ(*m.find_link("db-to-records")->encryption, "TLS 1.3");
    EXPECT_TRUE(validate_architecture(m).empty());
}

TEST(Dsl, UnknownTierPointsAtValue) {
    const std::string src = "jurisdiction US;\nprovider p1 { region: US }\nnode w { tier: webserver, provider: p1, subnet: public }\n";
    const auto errors = errors_of(src);
    ASSERT_EQ(errors.size(), 1u);
    EXPECT_EQ(errors[0].kind, dsl::ErrorKind::Semantic);
    EXPECT_EQ(errors[0].message, "unknown tier 'webserver'");
    EXPECT_EQ(at(src, errors[0].span), "webserver");
    EXPECT_EQ(errors[0].span.line, 3u);
    EXPECT_EQ(errors[0].span.column, 16u);
    EXPECT_EQ(errors[0].format("x.mcarch").rfind("x.mcarch:3:16: semantic error: unknown tier", 0), 0u);
}

TEST(Dsl, ColumnsCountCodePoints) {
    const std::string src = "architecture \"Pörtal 東\"; node n { tier: bogus }";
    const auto errors = errors_of(src);
    ASSERT_FALSE(errors.empty());
    const auto it = std::find_if(errors.begin(), errors.end(),
                                 [](const auto& e) { return e.message == "unknown tier 'bogus'"; });
    ASSERT_NE(it, errors.end());
    EXPECT_EQ(at(src, it->span), "bogus");
    // 43 bytes precede "bogus" but only 40 code points.
    EXPECT_EQ(it->span.offset, 43u);
    EXPECT_EQ(it->span.column, 41u);
}

TEST(Dsl, DanglingReferencePointsAtValue) {
    const std::string src = "jurisdiction US; provider p1 { region: US }\nnode a { tier: web, provider: gcp, subnet: public }";
    const auto errors = errors_of(src);
    ASSERT_EQ(errors.size(), 1u);
    EXPECT_NE(errors[0].message.find("'gcp'"), std::string::npos);
    EXPECT_EQ(at(src, errors[0].span), "gcp");
    ASSERT_TRUE(errors[0].hint);
}

TEST(Dsl, RecoversAndReportsSeveralErrors) {
    const std::string src =
        "jurisdiction US;\n"
        "provider p1 { region: US\n"                       // missing '}'
        "node a { tier: web provider: p1 }\n"              // missing ','
        "node b { tier: app, provider: p1, subnet: dmz }\n"
        "link l { from: a, to: b, kind: api, colour: red }\n";
    const auto errors = errors_of(src);
    ASSERT_GE(errors.size(), 3u);
    std::vector<std::size_t> lines;
    for (const auto& e : errors) lines.push_back(e.span.line);
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
    EXPECT_EQ(errors[0].kind, dsl::ErrorKind::Syntactic);
    EXPECT_EQ(lines.front(), 3u);
    EXPECT_TRUE(std::any_of(errors.begin(), errors.end(), [](const auto& e) {
        return e.message == "unknown subnet 'dmz'";
    }));
    EXPECT_TRUE(std::any_of(errors.begin(), errors.end(), [](const auto& e) {
        return e.message == "unknown field 'colour' in link";
    }));
}

TEST(Dsl, LexicalErrors) {
    auto e = errors_of("jurisdiction US; provider p { region: US, iam: \"open");
    ASSERT_FALSE(e.empty());
    EXPECT_EQ(e[0].kind, dsl::ErrorKind::Lexical);

    e = errors_of("node a { tier: web, provider: p, subnet: public } @");
    EXPECT_TRUE(std::any_of(e.begin(), e.end(), [](const auto& x) { return x.kind == dsl::ErrorKind::Lexical; }));
}

TEST(Dsl, FieldRules) {
    auto e = errors_of("jurisdiction US; provider p { region: US } node a { tier: web, provider: p }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].message, "node 'a' is missing required field 'subnet'");

    e = errors_of("jurisdiction US; provider p { region: US, region: US } node a { tier: web, provider: p, subnet: public }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].message, "field 'region' given more than once");

    e = errors_of("jurisdiction US; provider p { region: US, iam: corp } node a { tier: web, provider: p, subnet: public }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].message, "field 'iam' expects a quoted string");

    e = errors_of("jurisdiction US; provider p { region: US } node a { tier: web, provider: p, subnet: public, virtualized: yes }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].message, "unknown boolean 'yes'");
}

TEST(Dsl, EncryptionValues) {
    const std::string head = "jurisdiction US; provider p { region: US } node a { tier: web, provider: p, subnet: public }\n";
    auto r = dsl::parse(head + "link l { from: a, to: a, kind: api, encryption: none }");
    ASSERT_TRUE(r.ok());
    EXPECT_FALSE(r.model->links()[0].encryption);
    r = dsl::parse(head + "link l { from: a, to: a, kind: api }");
    ASSERT_TRUE(r.ok());
    EXPECT_FALSE(r.model->links()[0].encryption);
    EXPECT_FALSE(dsl::parse(head + "link l { from: a, to: a, kind: api, encryption: tls }").ok());
    EXPECT_FALSE(dsl::parse(head + "link l { from: a, to: a, kind: api, encryption: \"\" }").ok());
}

TEST(Dsl, EmptyAndDuplicateDeclarations) {
    auto e = errors_of("");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].message, "architecture declares no nodes");
    e = errors_of("# only a comment\njurisdiction US;\n");
    ASSERT_EQ(e.size(), 1u);

    e = errors_of(std::string(kMinimal) + "\nnode web1 { tier: app, provider: p1, subnet: private }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].span.line, 2u);
    EXPECT_NE(e[0].message.find("duplicate"), std::string::npos);

    e = errors_of(std::string(kMinimal) + "\nautomation { enabled: true }\nautomation { enabled: false }");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].span.line, 3u);
}

TEST(Dsl, LineEndingsAndComments) {
    const std::string crlf = "jurisdiction US;\r\nprovider p1 { region: US } # trailing\r\n"
                             "node w { tier: web,\r\n provider: p1, subnet: nope }\r\n";
    auto e = errors_of(crlf);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].span.line, 4u);
    EXPECT_EQ(at(crlf, e[0].span), "nope");

    const std::string cr = "jurisdiction US;\rprovider p1 { region: US }\rnode w { tier: web, provider: p1, subnet: nope }";
    e = errors_of(cr);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].span.line, 3u);
}

TEST(Dsl, StringEscapes) {
    const std::string src = R"(architecture "say \"hi\"\n\\ok\t"; )" + std::string(kMinimal);
    auto r = dsl::parse(src);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.model->name(), "say \"hi\"\n\\ok\t");
}

TEST(Dsl, SerializeMinimalIsCanonical) {
    const ArchitectureModel m = mcrisk::testing::parse_or_throw(kMinimal);
    const std::string text = dsl::serialize(m);
    EXPECT_EQ(text,
              "jurisdiction US;\n"
              "\n"
              "provider p1 {\n"
              "  region: US,\n"
              "  iam: \"p1\"\n"
              "}\n"
              "\n"
              "node web1 {\n"
              "  tier: web,\n"
              "  provider: p1,\n"
              "  subnet: public,\n"
              "  virtualized: true,\n"
              "  orchestrated: false\n"
              "}\n"
              "\n"
              "automation {\n"
              "  enabled: false\n"
              "}\n");
    EXPECT_EQ(mcrisk::testing::parse_or_throw(text), m);
    EXPECT_EQ(dsl::serialize(mcrisk::testing::parse_or_throw(text)), text);
}

TEST(Dsl, HealthcareRoundTrips) {
    const ArchitectureModel m = mcrisk::testing::healthcare_model();
    EXPECT_EQ(mcrisk::testing::parse_or_throw(dsl::serialize(m)), m);
}

TEST(Dsl, SerializeRejectsNonIdentifierIds) {
    ArchitectureParts p;
    p.jurisdictions = {{"US", "US"}};
    p.providers = {{"p 1", "p 1", "US", "x"}};
    p.nodes = {{"n", Tier::Web, "p 1", Subnet::Public}};
    EXPECT_THROW(dsl::serialize(build_architecture(p)), ContractViolation);
}

TEST(DslProperty, RoundTripOverGeneratedModels) {
    Gen g(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        const ArchitectureModel m = build_architecture(mcrisk::testing::random_parts(g));
        const std::string text = dsl::serialize(m);
        auto r = dsl::parse(text);
        ASSERT_TRUE(r.ok()) << r.errors.front().format() << "\n" << text;
        ASSERT_EQ(*r.model, m) << text;
    }
}

TEST(DslProperty, SerializationIgnoresInputOrder) {
    Gen g(8);
    for (int iter = 0; iter < 200; ++iter) {
        ArchitectureParts parts = mcrisk::testing::random_parts(g);
        const std::string first = dsl::serialize(build_architecture(parts));
        std::shuffle(parts.jurisdictions.begin(), parts.jurisdictions.end(), g.rng);
        std::shuffle(parts.providers.begin(), parts.providers.end(), g.rng);
        std::shuffle(parts.links.begin(), parts.links.end(), g.rng);
        EXPECT_EQ(dsl::serialize(build_architecture(parts)), first);
    }
}

TEST(DslProperty, ShortFuzzRun) {
    Gen g(0xf00d);
    const std::vector<std::string> seeds = {
        kMinimal, mcrisk::testing::slurp(mcrisk::testing::data_path("healthcare-portal.mcarch")),
        mcrisk::testing::slurp(mcrisk::testing::data_path("single-provider.mcarch"))};
    for (int iter = 0; iter < 3000; ++iter) {
        const std::string input = g.coin(0.2) ? mcrisk::testing::random_bytes(g)
                                              : mcrisk::testing::mutate(g, g.pick(seeds));
        const std::string problem = mcrisk::testing::check_parse(input);
        ASSERT_TRUE(problem.empty()) << problem << "\ninput: " << input;
    }
}
