#pragma once

#include "platlab/labyrinth.hpp"

#include <string>
#include <utility>
#include <vector>

namespace platlab {

constexpr int kOffTrack = -1;

struct Token {
    int number = 2;
    LaneId lane;
    int track = kOffTrack;
    std::string label;
};

enum class Rule { none, NumberMismatch, SameLaneForbidden, SameTrackForbidden, TwoArcNeedsTrack, OddCount, Blocked };
std::string rule_name(Rule r);

struct Constraints {
    bool same_lane = true;
    bool same_track = true;
    bool two_arc = true;
};

// Circular word of numbered points. Off-track tokens must be 2-points.
struct MatchingProblem {
    std::vector<Token> word;
    Constraints constraints;

    void validate() const;  // throws ConfigError
    Rule chord_rule(std::size_t i, std::size_t j) const;
};

using Chord = std::pair<int, int>;

struct TraceRecord {
    int lo = 0;  // token interval [lo, hi], or chord endpoints
    int hi = 0;
    Rule rule = Rule::none;
};

struct Verdict {
    bool feasible = false;
    std::vector<Chord> chords;
    Rule cause = Rule::none;
    std::vector<TraceRecord> trace;
};

// Interval dynamic program; the trace explains the lexicographically first
// blocked decomposition of each failing interval.
Verdict feasible(const MatchingProblem& p);

// Independent check of a claimed matching: perfect, non-crossing, equal
// numbers and all enabled constraints.
bool check_matching(const MatchingProblem& p, const std::vector<Chord>& chords, std::string* why = nullptr);

struct ParityVerdict {
    bool pass = true;
    std::vector<int> stranded;  // tokens with no parity-valid partner
    std::vector<TraceRecord> failures;
};
ParityVerdict parity_screen(const MatchingProblem& p);

struct CaseOptions {
    int max_gap = 3;    // off-track 2-points between consecutive tracks
    int max_brown = 2;  // brown tracks between two orange tracks
};

struct CaseStep {
    std::string label;
    std::vector<int> numbers;
    Verdict verdict;
};

struct CaseVerdict {
    int which = 0;
    bool schematic = false;  // brown piece is the fixed 3 2 3 stand-in, not read from the spec
    bool infeasible = false;
    int variants = 0;
    std::vector<CaseStep> steps;
    std::vector<std::string> notes;
};

// Primary-piece words for the outermost 4-arc hypothesis of each case.
std::vector<std::pair<std::string, MatchingProblem>> case_words(int which, const Labyrinth& lab,
                                                                const CaseOptions& opt, bool* schematic = nullptr);
CaseVerdict replay_case(int which, const Labyrinth& lab, const CaseOptions& opt = {});
CaseVerdict replay_case(int which, const TwistSpec& spec, const OracleConfig& cfg = {}, const CaseOptions& opt = {});

}  // namespace platlab
