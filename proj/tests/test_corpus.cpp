#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace jaeger;

namespace {

const CorpusEntry& entry(const char* name) { return *find_entry(bundled_corpus(), name); }

}  // namespace

TEST(Corpus, BundledParses) {
    const auto& c = bundled_corpus();
    EXPECT_GE(c.size(), 10U);
    for (const auto& e : c) {
        const auto d = e.diagram();
        ASSERT_TRUE(e.components) << e.name;
        EXPECT_EQ(*e.components, d.component_count()) << e.name;
        EXPECT_EQ(*e.components, testsupport::traced_components(d)) << e.name;
        EXPECT_TRUE(e.oracle_homfly) << e.name;
        EXPECT_TRUE(e.oracle_kauffman) << e.name;
        EXPECT_LE(d.crossing_count(), 6) << e.name;
    }
    for (const char* n : {"empty", "circle", "trefoil", "figure-eight", "hopf-positive", "6_1"})
        EXPECT_NE(find_entry(c, n), nullptr) << n;
    EXPECT_EQ(find_entry(c, "no-such-knot"), nullptr);
}

TEST(Corpus, NamesUnique) {
    std::set<std::string> names;
    for (const auto& e : bundled_corpus()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
}

TEST(Corpus, OraclesMirrorCovariant) {
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"trefoil", "trefoil-left"}, {"curl-positive", "curl-negative"}, {"hopf-positive", "hopf-negative"}};
    for (const auto& [x, y] : pairs) {
        const auto& a = entry(x);
        const auto& b = entry(y);
        EXPECT_EQ(canonical_code(mirror(a.diagram())), canonical_code(b.diagram())) << x;
        EXPECT_EQ(*b.oracle_kauffman, a.oracle_kauffman->inverted()) << x;
        EXPECT_EQ(*b.oracle_homfly, a.oracle_homfly->inverted()) << x;
    }
    // Amphichiral.
    const auto& f8 = entry("figure-eight");
    EXPECT_EQ(*f8.oracle_kauffman, f8.oracle_kauffman->inverted());
}

TEST(Corpus, CrossCheckPasses) {
    const auto rep = cross_check(bundled_corpus(), 2);
    ASSERT_EQ(rep.rows.size(), bundled_corpus().size());
    for (const auto& r : rep.rows) EXPECT_TRUE(r.passed()) << r.name << " " << r.error;
    EXPECT_TRUE(rep.passed());
}

TEST(Corpus, PerturbedOracleFails) {
    auto c = bundled_corpus();
    auto* e = const_cast<CorpusEntry*>(find_entry(c, "trefoil"));
    *e->oracle_kauffman = *e->oracle_kauffman + RationalFunction(Laurent::monomial(1, 0, 1));
    const auto rep = cross_check(c);
    EXPECT_FALSE(rep.passed());
    for (const auto& r : rep.rows) EXPECT_EQ(r.passed(), r.name != "trefoil") << r.name;

    auto d = bundled_corpus();
    const_cast<CorpusEntry*>(find_entry(d, "figure-eight"))->oracle_homfly.reset();
    EXPECT_FALSE(cross_check(d).passed());
}

TEST(Corpus, EmptyCorpus) {
    const auto c = parse_corpus("");
    EXPECT_TRUE(c.empty());
    const auto rep = cross_check(c, 4);
    EXPECT_TRUE(rep.rows.empty());
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(parse_corpus("# only a comment\n\n").empty());
}

TEST(Corpus, FormatRoundTrip) {
    const auto& c = bundled_corpus();
    const auto text = format_corpus(c);
    const auto back = parse_corpus(text);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(back[i].name, c[i].name);
        EXPECT_EQ(back[i].diagram(), c[i].diagram());
        EXPECT_EQ(back[i].components, c[i].components);
        EXPECT_EQ(*back[i].oracle_homfly, *c[i].oracle_homfly);
        EXPECT_EQ(*back[i].oracle_kauffman, *c[i].oracle_kauffman);
    }
    EXPECT_EQ(format_corpus(back), text);
}

TEST(Corpus, RegeneratedOraclesMatchFrozen) {
    for (const auto& e : bundled_corpus()) {
        CorpusEntry bare{e.name, e.pd, std::nullopt, std::nullopt, std::nullopt};
        const auto r = with_oracles(bare);
        EXPECT_EQ(r.components, e.components) << e.name;
        EXPECT_EQ(*r.oracle_homfly, *e.oracle_homfly) << e.name;
        EXPECT_EQ(*r.oracle_kauffman, *e.oracle_kauffman) << e.name;
    }
}

TEST(Corpus, ParseErrors) {
    EXPECT_THROW((void)parse_corpus("pd: X[1,1,2,2]\n"), ParseError);
    EXPECT_THROW((void)parse_corpus("name: x\nbogus: 1\n"), ParseError);
    EXPECT_THROW((void)parse_corpus("name: x\nno colon here\n"), ParseError);
    EXPECT_THROW((void)parse_corpus("name: x\noracle_homfly: a^\n"), ParseError);
    const auto c = parse_corpus("name: bad\npd: X[1,2,3,4]\n");
    ASSERT_EQ(c.size(), 1U);
    const auto row = check_entry(c[0]);
    EXPECT_FALSE(row.passed());
    EXPECT_FALSE(row.parsed);
    EXPECT_FALSE(row.error.empty());
}
