#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace platlab {

using TwistRows = std::map<int, std::vector<int>>;

// Twist data for an (h,b)-plat. Levels i = 2..h carry a row; odd rows have
// b entries, even rows b-1. Entry j of row i is t_i^j (1-based j).
struct TwistSpec {
    int h = 4;
    int b = 4;
    TwistRows rows;

    int min_magnitude = 0;
    int twistedness = 0;  // level n demanded at validation
    bool twisted = false;
    bool sign_pattern = false;
    bool family = false;
    bool raw = false;

    int at(int i, int j) const { return rows.at(i).at(static_cast<std::size_t>(j - 1)); }
    int magnitude(int i, int j) const;
    bool is_twisted(int n) const { return min_magnitude >= n; }

    static int row_length(int i, int b) { return i % 2 == 1 ? b : b - 1; }
    // Leftmost column of the twist region (i,j); the region spans (col, col+1).
    static int region_column(int i, int j) { return i % 2 == 0 ? 2 * j : 2 * j - 1; }
};

// raw = true permits zero entries (diagram testing mode); n = 0 skips the
// twistedness demand.
TwistSpec validate_spec(int h, int b, const TwistRows& rows, int n = 2, bool raw = false);

// Uniform sign-pattern spec: row 2 = +m, row 3 = -m, row 4 = +m.
TwistSpec uniform_spec(int m);

// Sign-pattern (4,4) spec from the ten magnitudes in row order.
TwistSpec pattern_spec(const std::vector<int>& magnitudes);

// perm[k] = top column reached by the strand starting at bottom column k (1-based, perm[0] unused).
std::vector<int> strand_permutation(const TwistSpec& spec);

std::vector<std::pair<int, int>> bottom_caps(int b);
std::vector<std::pair<int, int>> top_caps(int h, int b);

// Each component is the sorted list of bottom marked points it contains.
std::vector<std::vector<int>> component_partition(const TwistSpec& spec);

struct Crossing {
    int level = 0;
    int region = 0;      // j
    int index = 0;       // 1..|t|
    int sign = 0;        // sign of t_i^j
    int left_strand = 0;   // bottom column of the strand in the left position
    int right_strand = 0;
    bool left_over = false;
};

struct StrandVisit {
    int crossing = 0;
    bool over = false;
};

struct LinkDiagram {
    int h = 0;
    int b = 0;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;  // by bottom column
    std::vector<std::vector<StrandVisit>> traversal;  // per component, cyclic
    int endpoints_matched = 0;
};

LinkDiagram build_diagram(const TwistSpec& spec);

// Diagram of one isolated twist region of |t| crossings (two strands, closed by caps).
LinkDiagram single_region_diagram(int t);

bool is_alternating(const LinkDiagram& d);
bool is_split_diagram(const LinkDiagram& d);

// Crossings whose two strands both belong to the given components.
int subdiagram_crossings(const LinkDiagram& d, const std::vector<int>& component_ids);

struct FamilyReport {
    bool member = false;
    std::vector<std::string> reasons;
    int t22 = 0;
    int t42 = 0;
    int component_count = 0;
    std::vector<int> component_crossings;
    int l1_crossings = 0;  // components meeting columns 1..b
    bool separated = false;  // {1,2} and {2b-1,2b} in different components
};

FamilyReport family_membership(const TwistSpec& spec);

}  // namespace platlab
