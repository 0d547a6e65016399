#pragma once

#include "platlab/errors.hpp"
#include "platlab/labyrinth.hpp"
#include "platlab/matching.hpp"
#include "platlab/twist_calculus.hpp"

#include "json.hpp"

namespace platlab {

constexpr int kReportVersion = 1;

nlohmann::json summary_json(const LabyrinthSummary& s);
nlohmann::json diagram_json(const WeightedDiagram& d);
nlohmann::json analyze_report(const TwistSpec& spec);

nlohmann::json curve_json(const PlanarCurve& c);
nlohmann::json word_json(const AxisWord& w);
nlohmann::json census_json(const FaceCensus& c);
nlohmann::json lane_id_json(const LaneId& id);
nlohmann::json lanes_json(const LaneDecomposition& l);
nlohmann::json track_json(const TrackSequence& t);
nlohmann::json gate_json(const Gate& g);
nlohmann::json labyrinth_json(const Labyrinth& lab);

nlohmann::json problem_json(const MatchingProblem& p);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json case_json(const CaseVerdict& v);

nlohmann::json error_json(const Error& e);

}  // namespace platlab
