#pragma once

#include <string>

#include "plab/chow.hpp"
#include "plab/corpus.hpp"
#include "plab/heisenberg.hpp"
#include "plab/pluecker.hpp"

namespace plab {

Json to_json(const ProjectivePoint& p);
Json to_json(const SingularityRecord& s);
Json to_json(const FlexResult& f);
Json to_json(const CurveAnalysis& a);
Json to_json(const DualCurveResult& d);
Json to_json(const PlueckerInvariants& p);
Json to_json(const NodeCuspSolution& s);
Json to_json(const Orbit& o);
Json to_json(const FixedLocus& f);
Json to_json(const OrbitObstruction& o);
Json to_json(const RootSet& r);
Json to_json(const ChowReport& r);
Json to_json(const ScenarioReport& r);
Json group_json(const std::vector<ProjectiveTransform>& group);

/// Pretty JSON with two-space indent and a trailing newline.
std::string render_json(const Json& j);

/// Indented `key: value` listing.  Objects carrying `criterion` and
/// `passed` render as one `[PASS] AC1 name` line; `color` wraps PASS/FAIL
/// in ANSI green/red.
std::string render_text(const Json& j, bool color = false);

}  // namespace plab
