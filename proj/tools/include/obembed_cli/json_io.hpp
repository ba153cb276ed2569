#pragma once

// JSON mirrors of the core types. Every from_json accepts what the matching
// to_json produces.

#include <json.hpp>

#include "obembed/fourman.hpp"
#include "obembed/homology.hpp"
#include "obembed/int_matrix.hpp"
#include "obembed/planar_mcg.hpp"
#include "obembed/surgery.hpp"
#include "obembed/z2.hpp"

namespace obembed::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Z2Vector& v);
Json to_json(const IntMatrix& m);
Json to_json(const H1Invariants& h);
H1Invariants h1_from_json(const Json& j);

// {"dim":m,"s1xs":..,"trivial":..,"twisted":..}
Json to_json(const FourManifoldForm& f);
FourManifoldForm form_from_json(const Json& j);

// {"atoms":[{"kind":"sphere_cyl","m":2},...]}
Json to_json(const PageForm& p);
PageForm page_form_from_json(const Json& j);
// {"twist_exponents":[...],"pushes":[{"circle":1,"sphere":1},...]}
Json to_json(const MonodromyForm& m);
MonodromyForm monodromy_from_json(const Json& j);

// {"op":"twist","curve":[1,2],"exp":3} / {"op":"push","boundary":4,"around":[1,2],"exp":1}
Json to_json(const Letter& l);
Letter letter_from_json(const Json& j);
// {"page":n,"letters":[...]}
Json to_json(const TwistWord& w);
TwistWord word_from_json(const Json& j);

// {"strands":n,"framings":[...],"word":[[i,j,sign],...]}
Json to_json(const FramedBraidDiagram& d);
FramedBraidDiagram diagram_from_json(const Json& j);

Json to_json(const MoveRecord& r);

}  // namespace obembed::cli
