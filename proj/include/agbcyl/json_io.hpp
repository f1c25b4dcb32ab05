#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "agbcyl/abacus.hpp"
#include "agbcyl/charformulas.hpp"
#include "agbcyl/cylindric.hpp"
#include "agbcyl/kyoto.hpp"
#include "agbcyl/paths.hpp"
#include "agbcyl/qseries.hpp"

namespace agbcyl {

using json = nlohmann::ordered_json;

// Malformed or structurally invalid input document.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse_document(const std::string& text);

json to_json(const QSeries& s);
json to_json(const AffineWeight& w);
json to_json(const CylPart& p);
json to_json(const GeneralCylPart& p);
json to_json(const AbacusState& s);
json to_json(const BPath& h);
json to_json(const DecoratedPath& h);
json to_json(const PeakList& pl);
json to_json(const Multipartition& m);
json to_json(const rational& q);
json to_json(const XQLaurent& x);

// The readers check shape and the type invariants and throw parse_error.
QSeries series_from_json(const json& j);
AffineWeight weight_from_json(const json& j);
CylPart cyl_from_json(const json& j);
GeneralCylPart general_cyl_from_json(const json& j);
AbacusState abacus_from_json(const json& j);
DecoratedPath path_from_json(const json& j);
PeakList peaklist_from_json(const json& j);
Multipartition multipartition_from_json(const json& j);

}  // namespace agbcyl
