// JSON forms of the domain types.  Weights and root vectors are sparse
// objects keyed by node-label strings; specs are arrays of {node, r, m}.

#ifndef QAFFIN_JSON_IO_HPP
#define QAFFIN_JSON_IO_HPP

#include "qaffin/charcalc.hpp"
#include "qaffin/dynkin.hpp"
#include "qaffin/krtensor.hpp"
#include "qaffin/lweight.hpp"
#include "qaffin/minclass.hpp"

#include <json.hpp>

namespace qaffin {

using Json = nlohmann::json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Diagram& d, const Json& j);

Json rootvec_to_json(const RootVector& v);
RootVector rootvec_from_json(const Diagram& d, const Json& j);

Json spec_to_json(const DrinfeldSpec& s);
DrinfeldSpec spec_from_json(const Json& j);

Json classification_to_json(const Classification& c);

Json triple_config_to_json(const TripleConfig& c);
TripleConfig triple_config_from_json(const Json& j);

Json replay_report_to_json(const ReplayReport& r);
Json certificate_to_json(const Certificate& c);

}  // namespace qaffin

#endif
