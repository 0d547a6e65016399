#include "platlab/errors.hpp"
#include "platlab/plat_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

using namespace platlab;

namespace {

TwistRows even_rows() { return {{2, {2, 2, 2}}, {3, {-2, -2, -2, -2}}, {4, {2, 2, 2}}}; }

// Walks every strand bottom to top, applying each region's swap when its
// twist is odd.
std::vector<int> walk_permutation(const TwistSpec& s) {
    int n = 2 * s.b;
    std::vector<int> pos(n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int i = 2; i <= s.h; ++i) {
        for (int j = 1; j <= TwistSpec::row_length(i, s.b); ++j) {
            if (s.at(i, j) % 2 == 0) continue;
            int col = TwistSpec::region_column(i, j);
            for (int k = 1; k <= n; ++k) {
                if (pos[k] == col) pos[k] = col + 1;
                else if (pos[k] == col + 1) pos[k] = col;
            }
        }
    }
    return pos;
}

int find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = find(p, p[x]); }

std::vector<std::vector<int>> union_find_components(const TwistSpec& s) {
    int n = 2 * s.b;
    auto perm = walk_permutation(s);
    std::vector<int> inv(n + 1), parent(n + 1);
    for (int k = 1; k <= n; ++k) inv[perm[k]] = k;
    std::iota(parent.begin(), parent.end(), 0);
    for (int k = 1; k < n; k += 2) {
        parent[find(parent, k)] = find(parent, k + 1);
        parent[find(parent, inv[k])] = find(parent, inv[k + 1]);
    }
    std::map<int, std::vector<int>> groups;
    for (int k = 1; k <= n; ++k) groups[find(parent, k)].push_back(k);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

// Over/under along each closed component, with the left strand of a positive
// region passing over. The mirror convention gives the same verdict.
bool walk_alternating(const TwistSpec& s) {
    int n = 2 * s.b;
    std::vector<std::vector<bool>> seq(n + 1);
    std::vector<int> pos(n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int i = 2; i <= s.h; ++i) {
        for (int j = 1; j <= TwistSpec::row_length(i, s.b); ++j) {
            int t = s.at(i, j);
            int col = TwistSpec::region_column(i, j);
            for (int c = 0; c < std::abs(t); ++c) {
                for (int k = 1; k <= n; ++k) {
                    if (pos[k] == col) seq[k].push_back(t > 0);
                    else if (pos[k] == col + 1) seq[k].push_back(t < 0);
                }
                for (int k = 1; k <= n; ++k) {
                    if (pos[k] == col) pos[k] = col + 1;
                    else if (pos[k] == col + 1) pos[k] = col;
                }
            }
        }
    }
    std::vector<int> from_top(n + 1);
    for (int k = 1; k <= n; ++k) from_top[pos[k]] = k;
    std::vector<bool> seen(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<bool> cyc;
        int k = start;
        while (!seen[k]) {
            seen[k] = true;
            cyc.insert(cyc.end(), seq[k].begin(), seq[k].end());
            int top = pos[k];
            int partner_top = top % 2 == 1 ? top + 1 : top - 1;
            int down = from_top[partner_top];
            seen[down] = true;
            cyc.insert(cyc.end(), seq[down].rbegin(), seq[down].rend());
            k = down % 2 == 1 ? down + 1 : down - 1;
        }
        for (std::size_t a = 0; a < cyc.size(); ++a) {
            if (cyc.size() > 1 && cyc[a] == cyc[(a + 1) % cyc.size()]) return false;
        }
    }
    return true;
}

}  // namespace

TEST(PlatModel, UniformTwoIsFamilyMember) {
    auto s = validate_spec(4, 4, even_rows());
    EXPECT_TRUE(s.twisted);
    EXPECT_TRUE(s.sign_pattern);
    EXPECT_TRUE(s.family);
    EXPECT_EQ(s.min_magnitude, 2);
}

TEST(PlatModel, WrongRowLengthIsShapeError) {
    TwistRows rows = even_rows();
    rows[2] = {2, 2, 2, 2};
    EXPECT_THROW(validate_spec(4, 4, rows), ShapeError);
}

TEST(PlatModel, SmallMagnitudeIsTwistednessError) {
    TwistRows rows = even_rows();
    rows[3][1] = -1;
    EXPECT_THROW(validate_spec(4, 4, rows), TwistednessError);
    EXPECT_NO_THROW(validate_spec(4, 4, rows, 1));
}

TEST(PlatModel, FlippedSignBreaksPattern) {
    TwistRows rows = even_rows();
    rows[3][0] = 2;
    auto s = validate_spec(4, 4, rows);
    EXPECT_FALSE(s.sign_pattern);
    EXPECT_FALSE(s.family);
}

TEST(PlatModel, EvenTwistsGiveIdentity) {
    auto p = strand_permutation(validate_spec(4, 4, even_rows()));
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(p[k], k);
}

TEST(PlatModel, OneOddRegionIsItsTransposition) {
    TwistRows rows = even_rows();
    rows[2][1] = 3;  // region (2,2) spans columns 4,5
    auto p = strand_permutation(validate_spec(4, 4, rows));
    EXPECT_EQ(p[4], 5);
    EXPECT_EQ(p[5], 4);
    for (int k : {1, 2, 3, 6, 7, 8}) EXPECT_EQ(p[k], k);
}

TEST(PlatModel, PermutationMatchesStrandWalk) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mag(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
        TwistRows rows = {{2, {}}, {3, {}}, {4, {}}};
        for (int i = 2; i <= 4; ++i) {
            for (int j = 0; j < TwistSpec::row_length(i, 4); ++j) rows[i].push_back((i == 3 ? -1 : 1) * mag(rng));
        }
        auto s = validate_spec(4, 4, rows);
        EXPECT_EQ(strand_permutation(s), walk_permutation(s));
        EXPECT_EQ(component_partition(s), union_find_components(s));
        EXPECT_EQ(is_alternating(build_diagram(s)), walk_alternating(s));
    }
}

TEST(PlatModel, OddFirstRegionOfMiddleRow) {
    TwistRows rows = even_rows();
    rows[3][0] = -3;
    auto s = validate_spec(4, 4, rows);
    auto p = strand_permutation(s);
    EXPECT_EQ(p[1], 2);
    EXPECT_EQ(p[2], 1);
    EXPECT_EQ(component_partition(s), union_find_components(s));
}

TEST(PlatModel, EvenPartitionIsCapPairs) {
    auto parts = component_partition(validate_spec(4, 4, even_rows()));
    std::vector<std::vector<int>> want = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    EXPECT_EQ(parts, want);
}

TEST(PlatModel, PartitionDependsOnlyOnParity) {
    auto base = pattern_spec({2, 2, 3, 3, 3, 3, 3, 3, 2, 3});
    auto bumped = pattern_spec({4, 2, 5, 3, 5, 3, 3, 5, 2, 3});
    EXPECT_EQ(component_partition(base), component_partition(bumped));
}

TEST(PlatModel, CrossingCountIsTwistSum) {
    auto d = build_diagram(uniform_spec(2));
    EXPECT_EQ(d.crossings.size(), 20u);
    TwistRows rows = even_rows();
    rows[2][0] = 5;
    auto d5 = build_diagram(validate_spec(4, 4, rows));
    int in_region = 0;
    for (const auto& c : d5.crossings) {
        if (c.level == 2 && c.region == 1) {
            ++in_region;
            EXPECT_EQ(c.sign, 1);
        }
    }
    EXPECT_EQ(in_region, 5);
    EXPECT_EQ(d5.crossings.size(), 23u);
}

TEST(PlatModel, TraversalClosesUp) {
    auto d = build_diagram(uniform_spec(3));
    EXPECT_EQ(d.endpoints_matched, 16);
    std::size_t visits = 0;
    for (const auto& t : d.traversal) visits += t.size();
    EXPECT_EQ(visits, 2 * d.crossings.size());
}

TEST(PlatModel, Alternation) {
    EXPECT_TRUE(is_alternating(build_diagram(uniform_spec(2))));
    EXPECT_TRUE(is_alternating(single_region_diagram(3)));
    auto positive = validate_spec(4, 4, {{2, {2, 2, 2}}, {3, {2, 2, 2, 2}}, {4, {2, 2, 2}}});
    EXPECT_EQ(is_alternating(build_diagram(positive)), walk_alternating(positive));
    EXPECT_FALSE(is_alternating(build_diagram(positive)));
}

TEST(PlatModel, SplitDiagrams) {
    EXPECT_FALSE(is_split_diagram(build_diagram(uniform_spec(2))));
    auto zero = validate_spec(4, 4, {{2, {0, 0, 0}}, {3, {0, 0, 0, 0}}, {4, {0, 0, 0}}}, 0, true);
    EXPECT_TRUE(is_split_diagram(build_diagram(zero)));
    // the odd region merges the first two caps; the even one links the result to the third
    auto joined = validate_spec(4, 3, {{2, {1, 2}}, {3, {0, 0, 0}}, {4, {0, 0}}}, 0, true);
    EXPECT_EQ(component_partition(joined).size(), 2u);
    EXPECT_FALSE(is_split_diagram(build_diagram(joined)));
}

TEST(PlatModel, FamilyReports) {
    auto u = family_membership(uniform_spec(2));
    EXPECT_TRUE(u.member);
    EXPECT_GE(u.l1_crossings, 8);
    EXPECT_TRUE(u.separated);

    TwistRows rows = even_rows();
    rows[2][1] = 3;
    auto odd = family_membership(validate_spec(4, 4, rows));
    EXPECT_FALSE(odd.member);
    EXPECT_NE(std::find(odd.reasons.begin(), odd.reasons.end(), "t_2^2 odd"), odd.reasons.end());

    EXPECT_TRUE(family_membership(uniform_spec(4)).member);

    auto mixed = family_membership(pattern_spec({2, 2, 3, 3, 3, 3, 3, 3, 2, 3}));
    EXPECT_TRUE(mixed.member);
    EXPECT_GE(mixed.component_count, 2);
    EXPECT_TRUE(mixed.separated);
}
