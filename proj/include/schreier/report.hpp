#ifndef SCHREIER_REPORT_HPP_
#define SCHREIER_REPORT_HPP_

#include <json.hpp>

#include "growth.hpp"
#include "hn_verify.hpp"
#include "linrep.hpp"
#include "minimality.hpp"
#include "repetitivity.hpp"
#include "separation.hpp"

namespace schreier {

using Json = nlohmann::ordered_json;

Json to_json(GrowthTable const& t);
Json to_json(GapReport const& r);
Json to_json(LinrepReport const& r);
Json to_json(SymmetricCenterReport const& r);
Json to_json(HnReport const& r);
Json to_json(ParityReport const& r);
Json to_json(SeparationReport const& r);
Json to_json(BallAgreementReport const& r);

}  // namespace schreier

#endif
