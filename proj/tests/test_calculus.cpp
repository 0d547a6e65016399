#include "platlab/curve_oracle.hpp"
#include "platlab/errors.hpp"
#include "platlab/twist_calculus.hpp"

#include <gtest/gtest.h>

using namespace platlab;

namespace {

Weight m(int i, int j) { return Weight::var(i, j); }

// Weights printed beside the four circles, written with m = |t|.
std::vector<Weight> printed_weights() {
    return {m(2, 3) * m(3, 3) * m(4, 2), m(2, 3) * m(3, 3),
            m(2, 3) + m(4, 3) * (Weight(1) + m(2, 3) * m(3, 3) + m(2, 3) * m(3, 4)), Weight(1) + m(2, 3) * m(3, 4)};
}

int oracle_hits(const TwistSpec& spec, int upto, int segment) {
    auto c = transport_explicit(spec, initial_boundary(spec.b), {}, upto);
    return segment_counts(reduce_minimal(axis_word(c, spec.b)))[segment];
}

}  // namespace

TEST(Weight, CanonicalText) {
    Weight w = m(3, 3) * m(2, 3) + Weight(2);
    EXPECT_EQ(w.str(), "m2_3*m3_3 + 2");
    EXPECT_EQ((w - w).str(), "0");
    EXPECT_TRUE((w - w).is_zero());
}

TEST(Weight, Evaluate) {
    auto spec = uniform_spec(3);
    EXPECT_EQ(printed_weights()[2].evaluate(spec), 60);
    EXPECT_EQ(Weight::signed_var(spec, 3, 1).evaluate(spec), -3);
}

TEST(Weight, Compare) {
    MagnitudeRanges r;
    EXPECT_EQ(compare(m(2, 3) * m(3, 3), m(2, 3), r), Order::greater);
    EXPECT_EQ(compare(m(2, 3), m(2, 3), r), Order::equal);
    EXPECT_THROW(compare(m(2, 3), m(3, 3), r), AmbiguousOrder);
    r.per_var[magnitude_var(2, 3)] = {5, 6};
    r.per_var[magnitude_var(3, 3)] = {2, 4};
    EXPECT_EQ(compare(m(2, 3), m(3, 3), r), Order::greater);
    EXPECT_FALSE(provably_positive(m(2, 3) - m(4, 3), {}));
}

TEST(Calculus, StrandsThroughBase) {
    auto d = initial_diagram(4);
    EXPECT_EQ(strands_through(d, {2, 3}), Weight(1));
    EXPECT_TRUE(strands_through(d, {2, 1}).is_zero());
    EXPECT_THROW(strands_through(d, {3, 4}), UnresolvedDiagram);
}

TEST(Calculus, StrandsThroughMatchesOracle) {
    for (int mag : {2, 3}) {
        auto spec = uniform_spec(mag);
        auto d = apply_level(initial_diagram(4), 2, spec);
        EXPECT_EQ(strands_through(d, {3, 4}).evaluate(spec), oracle_hits(spec, 2, 7));
        EXPECT_EQ(strands_through(d, {3, 3}).evaluate(spec), oracle_hits(spec, 2, 5));
    }
}

TEST(Calculus, LevelTwoOnBase) {
    auto d = apply_level(initial_diagram(4, true), 2, uniform_spec(2));
    ASSERT_EQ(d.bundles.size(), 2u);
    const auto& bd = d.bundles[1];
    EXPECT_EQ(*bd.loop, (LoopId{2, 3}));
    EXPECT_EQ(bd.weight, m(2, 3));
    EXPECT_EQ(bd.flag, Flag::under);
}

TEST(Calculus, LevelThreeSymbolic) {
    auto spec = uniform_spec(2);
    auto d = apply_level(apply_level(initial_diagram(4, true), 2, spec), 3, spec);
    std::map<LoopId, Weight> added;
    for (const auto& bd : d.bundles) {
        if (bd.added_at_level == 3) {
            added[*bd.loop] = bd.weight;
            EXPECT_EQ(bd.flag, Flag::over);
        }
    }
    ASSERT_EQ(added.size(), 2u);
    EXPECT_EQ(added.at({3, 3}), m(2, 3) * m(3, 3));
    EXPECT_EQ(added.at({3, 4}), m(2, 3) * m(3, 4));
}

TEST(Calculus, LevelMissingEveryDiskIsIdentity) {
    auto spec = uniform_spec(2);
    auto d = base_diagram(4, 7, 8);
    d.level = 2;
    auto e = apply_level(d, 3, spec);
    EXPECT_EQ(e.bundles.size(), d.bundles.size());
    EXPECT_THROW(apply_level(d, 4, spec), UnresolvedDiagram);
}

TEST(Calculus, ResolvePairSevenThree) {
    auto r = resolve_pair(Weight(7), Weight(3), {});
    EXPECT_EQ(r.reroute, Weight(3));
    EXPECT_EQ(r.pass, Weight(4));
    EXPECT_TRUE(r.first_larger);
}

TEST(Calculus, SingleBundleUnchanged) {
    auto d = initial_diagram(4);
    auto r = resolve_crossings(d);
    EXPECT_TRUE(r.resolved);
    ASSERT_EQ(r.families.size(), 1u);
    EXPECT_EQ(r.families[0].weight, Weight(1));
}

TEST(Calculus, NumericSummaries) {
    auto s2 = summary(transport(uniform_spec(2)), uniform_spec(2));
    EXPECT_EQ(s2.values, (std::vector<std::int64_t>{8, 4, 20, 5}));
    EXPECT_TRUE(s2.all_hold());
    auto s3 = summary(transport(uniform_spec(3)), uniform_spec(3));
    EXPECT_EQ(s3.values, (std::vector<std::int64_t>{27, 9, 60, 10}));
    EXPECT_TRUE(s3.all_hold());
}

TEST(Calculus, SymbolicMatchesPrintedWeights) {
    TransportOptions opts;
    opts.symbolic = true;
    auto s = summary(transport(uniform_spec(2), opts), uniform_spec(2));
    EXPECT_EQ(s.N, printed_weights());
    EXPECT_TRUE(s.proved_positive);
    EXPECT_TRUE(s.proved_inequalities);
}

TEST(Calculus, BrokenSignPatternIsAmbiguous) {
    auto spec = validate_spec(4, 4, {{2, {2, 2, 2}}, {3, {2, 2, 2, 2}}, {4, {2, 2, 2}}});
    EXPECT_THROW(transport(spec), AmbiguousOrder);
}

TEST(Calculus, PredictedCountsMatchOracle) {
    for (int mag : {2, 3}) {
        auto spec = uniform_spec(mag);
        auto predicted = predicted_axis_counts(transport(spec));
        auto seen = segment_counts(reduce_minimal(axis_word(transport_explicit(spec, initial_boundary(4)), 4)));
        for (int s = 1; s <= 8; ++s) EXPECT_EQ(predicted[s].evaluate(spec), seen[s]) << "segment " << s;
    }
}
