#include "platlab/matching.hpp"

#include "platlab/errors.hpp"

#include <algorithm>

namespace platlab {

namespace {

using Word = std::vector<Token>;

Word piece(const TrackSequence& t, int track, std::size_t from, std::size_t to) {
    Word w;
    for (std::size_t i = from; i < to; ++i) {
        const auto& e = t.entries[i];
        w.push_back({e.number, e.lane, track, color_name(t.color) + "#" + std::to_string(track) + "[" + std::to_string(i) + "]"});
    }
    return w;
}

std::size_t first_four(const TrackSequence& t) {
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (t.entries[i].number == 4) return i;
    }
    return t.entries.size();
}

std::size_t last_four(const TrackSequence& t) {
    for (std::size_t i = t.entries.size(); i-- > 0;) {
        if (t.entries[i].number == 4) return i;
    }
    return t.entries.size();
}

Word tail(const TrackSequence& t, int track) { return piece(t, track, last_four(t) + 1, t.entries.size()); }
Word head(const TrackSequence& t, int track) { return piece(t, track, 0, first_four(t)); }

Word off_track(int count, LaneId lane) {
    Word w;
    for (int i = 0; i < count; ++i) w.push_back({2, lane, kOffTrack, "off"});
    return w;
}

void append(Word& a, const Word& b) { a.insert(a.end(), b.begin(), b.end()); }

std::string gap_label(const std::vector<int>& gaps) {
    std::string s = "gaps";
    for (int g : gaps) s += " " + std::to_string(g);
    return s;
}

}  // namespace

std::vector<std::pair<std::string, MatchingProblem>> case_words(int which, const Labyrinth& lab, const CaseOptions& opt,
                                                                bool* schematic) {
    const auto& brown = lab.track(Color::brown);
    const auto& orange = lab.track(Color::orange);
    LaneId off = lab.lanes.leftmost_beta2;
    std::vector<std::pair<std::string, MatchingProblem>> out;
    if (schematic) *schematic = false;
    auto emit = [&](const std::string& label, Word w) {
        MatchingProblem p;
        p.word = std::move(w);
        out.emplace_back(label, std::move(p));
    };
    switch (which) {
        case 1: {
            if (!brown.has_fours()) throw CaseInapplicable("brown track has no 4-points");
            for (int g = 0; g <= opt.max_gap; ++g) {
                Word w = tail(brown, 0);
                append(w, off_track(g, off));
                append(w, head(brown, 1));
                emit(gap_label({g}), std::move(w));
            }
            break;
        }
        case 2: {
            int max_brown = brown.has_fours() ? 0 : opt.max_brown;
            for (int nb = 0; nb <= max_brown; ++nb) {
                std::vector<int> gaps(static_cast<std::size_t>(nb + 1), 0);
                while (true) {
                    Word w = tail(orange, 0);
                    for (int k = 0; k <= nb; ++k) {
                        append(w, off_track(gaps[static_cast<std::size_t>(k)], off));
                        if (k < nb) append(w, piece(brown, k + 1, 0, brown.entries.size()));
                    }
                    append(w, head(orange, nb + 1));
                    emit("brown " + std::to_string(nb) + " " + gap_label(gaps), std::move(w));
                    std::size_t k = 0;
                    while (k < gaps.size() && gaps[k] == opt.max_gap) gaps[k++] = 0;
                    if (k == gaps.size()) break;
                    ++gaps[k];
                }
            }
            break;
        }
        case 3: {
            Word brown_tail;
            if (brown.has_fours()) {
                brown_tail = tail(brown, 0);
            } else {
                if (brown.entries.size() < 3) throw CaseInapplicable("brown track too short for a schematic piece");
                brown_tail = piece(brown, 0, brown.entries.size() - 3, brown.entries.size());
                if (schematic) *schematic = true;
            }
            for (int g = 0; g <= opt.max_gap; ++g) {
                Word w = brown_tail;
                append(w, off_track(g, off));
                append(w, head(orange, 1));
                emit(gap_label({g}), std::move(w));
            }
            break;
        }
        default:
            throw ConfigError("case must be 1, 2 or 3");
    }
    return out;
}

CaseVerdict replay_case(int which, const Labyrinth& lab, const CaseOptions& opt) {
    CaseVerdict v;
    v.which = which;
    auto words = case_words(which, lab, opt, &v.schematic);
    if (v.schematic) v.notes.push_back("brown piece taken as the schematic 3 2 3 on the outermost brown lanes");
    if (which == 2 && lab.track(Color::brown).has_fours()) v.notes.push_back("brown tracks carry 4-points; none interposed");
    v.infeasible = true;
    for (auto& [label, p] : words) {
        CaseStep step;
        step.label = label;
        for (const auto& t : p.word) step.numbers.push_back(t.number);
        step.verdict = feasible(p);
        if (step.verdict.feasible) v.infeasible = false;
        v.steps.push_back(std::move(step));
        ++v.variants;
    }
    return v;
}

CaseVerdict replay_case(int which, const TwistSpec& spec, const OracleConfig& cfg, const CaseOptions& opt) {
    if (which < 1 || which > 3) throw ConfigError("case must be 1, 2 or 3");
    return replay_case(which, analyze_labyrinth(spec, cfg), opt);
}

}  // namespace platlab
