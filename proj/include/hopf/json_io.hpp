#pragma once

#include <json.hpp>

#include "hopf/autgroup.hpp"
#include "hopf/charts.hpp"
#include "hopf/picard.hpp"

namespace hopf::io {

using nlohmann::json;

/// Reads payload[key] (JSON pointer `path` for messages); SchemaError if absent.
const json& require(const json& payload, const std::string& key, const std::string& path);

json to_json(Complex c);
json to_json(Point p);
json to_json(const ModelPoint& m);
json to_json(const PolyMap& m);
json to_json(const Contraction& f);
json to_json(const EtaSpec& e);
json to_json(const ChainMap& c);
json to_json(const PicardDatum& d);
json to_json(const GroupDescriptor& g);
json to_json(const RealLocus& l);
json to_json(const QuotientDescriptor& q);
json to_json(const CommutantElement& e);

Complex complex_from(const json& j, const std::string& path);
double real_from(const json& j, const std::string& path);
int int_from(const json& j, const std::string& path);
Point point_from(const json& j, const std::string& path);
ModelPoint model_point_from(const json& j, const std::string& path);
PolyMap polymap_from(const json& j, const std::string& path);
Contraction contraction_from(const json& j, const std::string& path);
ChainMap chain_from(const json& j, const std::string& path);
Parity parity_from(const json& j, const std::string& path);
Eigen::Matrix2cd matrix_from(const json& j, const std::string& path);

/// {"parity": "even"|"odd"} selects the canonical lift; {"lift": PolyMap} wraps a user lift.
RealStructureSpec structure_from(const Contraction& f, const json& j, const std::string& path);

}  // namespace hopf::io
