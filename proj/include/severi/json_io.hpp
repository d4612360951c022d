#ifndef SEVERI_JSON_IO_HPP
#define SEVERI_JSON_IO_HPP

#include <json.hpp>

#include "severi/germs.hpp"
#include "severi/hirzebruch.hpp"
#include "severi/monodromy.hpp"
#include "severi/patterns.hpp"

namespace severi {

using json = nlohmann::json;

// Polynomials are arrays of "num/den" strings, lowest degree first.
json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const json& j);

json wpoly_to_json(const WeierstrassPoly& P);          // {"d": int, "a": [[...], ...]}
WeierstrassPoly wpoly_from_json(const json& j);

json pattern_to_json(const MultiplicityPattern& m);    // [2,2,1]
MultiplicityPattern pattern_from_json(const json& j);
json pattern_report_to_json(const PatternReport& r);

json germ_to_json(const CurveGerm& c);
CurveGerm germ_from_json(const json& j);
json delta_report_to_json(const DeltaReport& r);
json delta_per_line_to_json(const DeltaPerLineResult& r);

json model_to_json(const DegenerateModel& m);
DegenerateModel model_from_json(const json& j);

json trace_to_json(const MoveTrace& t);
json perm_group_to_json(const PermGroup& g);           // generators in cycle notation

}  // namespace severi

#endif
