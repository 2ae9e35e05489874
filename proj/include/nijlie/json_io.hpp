#ifndef NIJLIE_JSON_IO_HPP
#define NIJLIE_JSON_IO_HPP

#include <json.hpp>

#include "nijlie/deformation.hpp"
#include "nijlie/homotopy.hpp"
#include "nijlie/nslie.hpp"

namespace nijlie {

using json = nlohmann::ordered_json;

// All formats serialize rationals as "p" / "p/q" strings and use 1-based
// basis indices in keys ("1,2").  Loaders throw std::invalid_argument with
// a path on malformed input.

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const LieAlgebra& L);
LieAlgebra lie_from_json(const json& j);

json to_json(const Representation& rep, const LieAlgebra& base);
Representation rep_from_json(const json& j, const LieAlgebra& base);

json to_json(const AltMap& f);
AltMap altmap_from_json(const json& j);

json to_json(const Cobracket& co);
Cobracket cobracket_from_json(const json& j);

json to_json(const ConeCochain& c);
ConeCochain cone_cochain_from_json(const json& j);

json to_json(const Tensor2& r);
Tensor2 tensor2_from_json(const json& j);

json to_json(const NSLie& P);
NSLie nslie_from_json(const json& j);

json to_json(const NSRep& R);
NSRep nsrep_from_json(const json& j);

json to_json(const TwoTermL& T);
TwoTermL two_term_from_json(const json& j);

json to_json(const HomotopyNijenhuis& HN);
HomotopyNijenhuis homotopy_nijenhuis_from_json(const json& j, const TwoTermL& T);

json to_json(const TwoTermRep& R, const TwoTermL& T);
TwoTermRep two_term_rep_from_json(const json& j, const TwoTermL& T);

json to_json(const MatchedPairData& mp);
MatchedPairData matched_pair_from_json(const json& j);

json to_json(const NSMatchedPair& mp);
NSMatchedPair ns_matched_pair_from_json(const json& j);

json to_json(const CrossedModuleNLie& cm);
CrossedModuleNLie crossed_module_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace nijlie

#endif
