#include "platlab/errors.hpp"
#include "platlab/matching.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace platlab;

namespace {

Token tok(int number, LaneId lane, int track) { return {number, lane, track, ""}; }

MatchingProblem problem(std::vector<Token> w) {
    MatchingProblem p;
    p.word = std::move(w);
    return p;
}

bool allowed(const MatchingProblem& p, const Token& a, const Token& b) {
    if (a.number != b.number) return false;
    if (p.constraints.same_lane && a.lane == b.lane) return false;
    if (p.constraints.same_track && a.track >= 0 && a.track == b.track) return false;
    if (p.constraints.two_arc && a.number == 2 && a.track < 0 && b.track < 0) return false;
    return true;
}

// Tries every partner for the first token and recurses on both sides.
bool brute_force(const MatchingProblem& p, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return true;
    for (std::size_t k = lo + 1; k < hi; k += 2) {
        if (allowed(p, p.word[lo], p.word[k]) && brute_force(p, lo + 1, k) && brute_force(p, k + 1, hi)) return true;
    }
    return false;
}

MatchingProblem random_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 16), num(2, 4), track(-1, 2), beta(2, 4), ord(0, 2), coin(0, 3);
    MatchingProblem p;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int number = num(rng);
        int t = track(rng);
        if (t < 0 && number != 2) t = 0;
        p.word.push_back(tok(number, {beta(rng), ord(rng)}, t));
    }
    p.constraints.same_lane = coin(rng) != 0;
    p.constraints.same_track = coin(rng) != 0;
    p.constraints.two_arc = coin(rng) != 0;
    return p;
}

const Labyrinth& lab_two() {
    static Labyrinth lab = analyze_labyrinth(uniform_spec(2));
    return lab;
}

}  // namespace

TEST(Matching, SameLaneIsBlocked) {
    auto p = problem({tok(3, {3, 1}, 0), tok(3, {3, 1}, 1)});
    auto v = feasible(p);
    EXPECT_FALSE(v.feasible);
    EXPECT_EQ(v.cause, Rule::SameLaneForbidden);
}

TEST(Matching, TwoOffTrackPointsNeedATrack) {
    auto p = problem({tok(2, {2, 0}, kOffTrack), tok(2, {2, 1}, kOffTrack)});
    auto v = feasible(p);
    EXPECT_FALSE(v.feasible);
    EXPECT_EQ(v.cause, Rule::TwoArcNeedsTrack);
}

TEST(Matching, SameTrackIsBlocked) {
    auto p = problem({tok(4, {4, 1}, 2), tok(4, {4, 2}, 2)});
    EXPECT_EQ(feasible(p).cause, Rule::SameTrackForbidden);
    p.constraints.same_track = false;
    EXPECT_TRUE(feasible(p).feasible);
}

TEST(Matching, SingleLegalChord) {
    auto p = problem({tok(3, {3, 1}, 0), tok(3, {3, 2}, 1)});
    auto v = feasible(p);
    ASSERT_TRUE(v.feasible);
    EXPECT_EQ(v.chords, (std::vector<Chord>{{0, 1}}));
    EXPECT_TRUE(check_matching(p, v.chords));
}

TEST(Matching, OddWordReportsOddCount) {
    auto p = problem({tok(3, {3, 1}, 0), tok(3, {3, 2}, 1), tok(3, {3, 3}, 2)});
    auto v = feasible(p);
    EXPECT_FALSE(v.feasible);
    EXPECT_EQ(v.cause, Rule::OddCount);
}

TEST(Matching, Validation) {
    EXPECT_THROW(problem({tok(3, {3, 1}, kOffTrack)}).validate(), ConfigError);
    EXPECT_THROW(problem({tok(5, {3, 1}, 0)}).validate(), ConfigError);
    EXPECT_NO_THROW(problem({tok(2, {2, 0}, kOffTrack)}).validate());
}

TEST(Matching, CheckerRejectsBadMatchings) {
    auto p = problem({tok(3, {3, 1}, 0), tok(2, {2, 1}, 0), tok(3, {3, 2}, 1), tok(2, {2, 2}, 1)});
    std::string why;
    EXPECT_FALSE(check_matching(p, {{0, 2}, {1, 3}}, &why));
    EXPECT_FALSE(why.empty());
    EXPECT_FALSE(check_matching(p, {{0, 1}, {2, 3}}, &why));
    EXPECT_FALSE(check_matching(p, {{0, 2}}, &why));
}

TEST(Matching, ParityScreen) {
    auto p = problem({tok(3, {3, 1}, 0), tok(2, {2, 1}, 0), tok(3, {3, 2}, 1), tok(2, {2, 2}, 1)});
    auto v = parity_screen(p);
    EXPECT_FALSE(v.pass);
    EXPECT_FALSE(v.stranded.empty());
    EXPECT_TRUE(parity_screen(problem({})).pass);
    EXPECT_TRUE(feasible(problem({})).feasible);
}

TEST(Matching, AgreesWithBruteForce) {
    std::mt19937_64 rng(20240917);
    int feasible_count = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        auto p = random_problem(rng);
        auto v = feasible(p);
        ASSERT_EQ(v.feasible, brute_force(p, 0, p.word.size())) << "trial " << trial;
        if (v.feasible) {
            ++feasible_count;
            std::string why;
            EXPECT_TRUE(check_matching(p, v.chords, &why)) << why;
            EXPECT_TRUE(parity_screen(p).pass);
        } else {
            EXPECT_NE(v.cause, Rule::none);
            EXPECT_LE(v.trace.size(), 256u);
        }
    }
    EXPECT_GT(feasible_count, 100);
}

TEST(Cases, ReplayAtTwo) {
    const auto& lab = lab_two();
    EXPECT_THROW(replay_case(1, lab), CaseInapplicable);
    auto two = replay_case(2, lab);
    EXPECT_TRUE(two.infeasible);
    EXPECT_EQ(two.variants, 84);
    auto three = replay_case(3, lab);
    EXPECT_TRUE(three.infeasible);
    EXPECT_TRUE(three.schematic);
    for (const auto& s : two.steps) EXPECT_FALSE(s.verdict.feasible) << s.label;
}

TEST(Cases, OneInterposedBrownTrack) {
    CaseOptions opt;
    opt.max_brown = 1;
    opt.max_gap = 0;
    auto words = case_words(2, lab_two(), opt);
    ASSERT_EQ(words.size(), 2u);
    for (const auto& [label, p] : words) EXPECT_FALSE(feasible(p).feasible) << label;
}

TEST(Cases, CaseOneWithBrownFours) {
    Labyrinth lab = lab_two();
    const auto& orange = lab.track(Color::orange).entries;
    auto& brown = lab.tracks[static_cast<std::size_t>(Color::brown)];
    // 3 4 3 2 3 4 3 on lanes borrowed from the orange track
    brown.entries = {orange[0], orange[1], orange[2], orange[5], orange[2], orange[1], orange[0]};
    ASSERT_TRUE(brown.has_fours());
    ASSERT_TRUE(brown.palindrome());
    auto v = replay_case(1, lab);
    EXPECT_TRUE(v.infeasible);
    EXPECT_FALSE(v.schematic);
    EXPECT_EQ(v.variants, 4);
}
