#include "platlab/matching.hpp"

#include "platlab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace platlab {

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::none: return "none";
        case Rule::NumberMismatch: return "NumberMismatch";
        case Rule::SameLaneForbidden: return "SameLaneForbidden";
        case Rule::SameTrackForbidden: return "SameTrackForbidden";
        case Rule::TwoArcNeedsTrack: return "TwoArcNeedsTrack";
        case Rule::OddCount: return "OddCount";
        case Rule::Blocked: return "Blocked";
    }
    return "?";
}

void MatchingProblem::validate() const {
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& t = word[i];
        if (t.number < 2 || t.number > 4) throw ConfigError("token " + std::to_string(i) + " has number outside 2..4");
        if (t.track == kOffTrack && t.number != 2) {
            throw ConfigError("token " + std::to_string(i) + " is off every track but is not a 2-point");
        }
    }
}

Rule MatchingProblem::chord_rule(std::size_t i, std::size_t j) const {
    const Token& a = word[i];
    const Token& b = word[j];
    if (a.number != b.number) return Rule::NumberMismatch;
    if (constraints.same_lane && a.lane == b.lane) return Rule::SameLaneForbidden;
    if (constraints.same_track && a.track != kOffTrack && a.track == b.track) return Rule::SameTrackForbidden;
    if (constraints.two_arc && a.number == 2 && a.track == kOffTrack && b.track == kOffTrack) return Rule::TwoArcNeedsTrack;
    return Rule::none;
}

namespace {

constexpr std::size_t kTraceCap = 256;

bool constraint_rule(Rule r) {
    return r == Rule::SameLaneForbidden || r == Rule::SameTrackForbidden || r == Rule::TwoArcNeedsTrack;
}

class Solver {
public:
    explicit Solver(const MatchingProblem& p) : p_(p), n_(p.word.size()) {
        ok_.assign(n_ + 1, std::vector<char>(n_ + 1, 0));
        split_.assign(n_ + 1, std::vector<int>(n_ + 1, -1));
        for (std::size_t i = 0; i <= n_; ++i) ok_[i][i] = 1;
        for (std::size_t len = 2; len <= n_; len += 2) {
            for (std::size_t i = 0; i + len <= n_; ++i) {
                std::size_t j = i + len;
                for (std::size_t k = i + 1; k < j; k += 2) {
                    if (p_.chord_rule(i, k) != Rule::none) continue;
                    if (ok_[i + 1][k] && ok_[k + 1][j]) {
                        ok_[i][j] = 1;
                        split_[i][j] = static_cast<int>(k);
                        break;
                    }
                }
            }
        }
    }

    bool ok(std::size_t i, std::size_t j) const { return ok_[i][j]; }

    void witness(std::size_t i, std::size_t j, std::vector<Chord>& out) const {
        while (i < j) {
            auto k = static_cast<std::size_t>(split_[i][j]);
            out.emplace_back(static_cast<int>(i), static_cast<int>(k));
            witness(i + 1, k, out);
            i = k + 1;
        }
    }

    void explain(std::size_t i, std::size_t j, std::vector<TraceRecord>& trace) {
        if (i >= j || ok_[i][j] || !explained_.insert({i, j}).second || trace.size() >= kTraceCap) return;
        std::map<int, int> counts;
        for (std::size_t x = i; x < j; ++x) ++counts[p_.word[x].number];
        for (auto [num, c] : counts) {
            (void)num;
            if (c % 2 != 0) {
                trace.push_back({static_cast<int>(i), static_cast<int>(j - 1), Rule::OddCount});
                break;
            }
        }
        bool any = false;
        for (std::size_t k = i + 1; k < j; ++k) {
            if (p_.word[k].number != p_.word[i].number) continue;
            any = true;
            Rule r = p_.chord_rule(i, k);
            if (r != Rule::none) {
                trace.push_back({static_cast<int>(i), static_cast<int>(k), r});
                continue;
            }
            if (!ok_[i + 1][k]) {
                explain(i + 1, k, trace);
            } else {
                explain(k + 1, j, trace);
            }
        }
        if (!any) trace.push_back({static_cast<int>(i), static_cast<int>(j - 1), Rule::Blocked});
    }

private:
    const MatchingProblem& p_;
    std::size_t n_;
    std::vector<std::vector<char>> ok_;
    std::vector<std::vector<int>> split_;
    std::set<std::pair<std::size_t, std::size_t>> explained_;
};

}  // namespace

Verdict feasible(const MatchingProblem& p) {
    p.validate();
    Verdict v;
    std::size_t n = p.word.size();
    Solver s(p);
    if (s.ok(0, n)) {
        v.feasible = true;
        s.witness(0, n, v.chords);
        std::sort(v.chords.begin(), v.chords.end());
        return v;
    }
    s.explain(0, n, v.trace);
    for (const auto& r : v.trace) {
        if (constraint_rule(r.rule)) {
            v.cause = r.rule;
            break;
        }
    }
    if (v.cause == Rule::none && !v.trace.empty()) v.cause = v.trace.front().rule;
    return v;
}

bool check_matching(const MatchingProblem& p, const std::vector<Chord>& chords, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    int n = static_cast<int>(p.word.size());
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : chords) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) return fail("chord out of range");
        if (partner[static_cast<std::size_t>(a)] >= 0 || partner[static_cast<std::size_t>(b)] >= 0) {
            return fail("token used twice");
        }
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        Rule r = p.chord_rule(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        if (r != Rule::none) return fail("chord (" + std::to_string(a) + "," + std::to_string(b) + ") violates " + rule_name(r));
    }
    if (std::find(partner.begin(), partner.end(), -1) != partner.end()) return fail("not perfect");
    for (auto [a, b] : chords) {
        int lo = std::min(a, b), hi = std::max(a, b);
        for (auto [c, d] : chords) {
            int x = std::min(c, d), y = std::max(c, d);
            if (lo < x && x < hi && hi < y) return fail("chords cross");
        }
    }
    return true;
}

ParityVerdict parity_screen(const MatchingProblem& p) {
    ParityVerdict v;
    std::size_t n = p.word.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || p.word[k].number != p.word[i].number) continue;
            std::map<int, int> inside, outside;
            for (std::size_t x = (i + 1) % n; x != k; x = (x + 1) % n) ++inside[p.word[x].number];
            for (std::size_t x = (k + 1) % n; x != i; x = (x + 1) % n) ++outside[p.word[x].number];
            bool even = true;
            for (const auto* side : {&inside, &outside}) {
                for (auto [num, c] : *side) {
                    (void)num;
                    even = even && c % 2 == 0;
                }
            }
            if (even) {
                found = true;
            } else if (i < k) {
                v.failures.push_back({static_cast<int>(i), static_cast<int>(k), Rule::OddCount});
            }
        }
        if (!found) v.stranded.push_back(static_cast<int>(i));
    }
    v.pass = v.stranded.empty();
    return v;
}

}  // namespace platlab
