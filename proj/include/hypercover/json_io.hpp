#pragma once

#include "hypercover/covers.hpp"
#include "hypercover/oracles.hpp"

#include <json.hpp>

namespace hypercover {

using nlohmann::json;

// Points are written as 0/1 arrays with x_1 first.
json encode_point(Point p, int n);
Point decode_point(const json& j, int n);

json encode(const SymmetricSet& s);
json encode(const PointSet& s);
json encode(const BlockSymmetricSet& s);
json encode(const Target& t);
json encode(const OrderChoice& o);
json encode(const PeripheralInterval& j);
json encode(const IndexWitness& w, int n);
json encode(const Polynomial& p);
json encode(const HyperplaneFamily& f);
json encode(const Witness& w);
json encode(const CoverSpec& s);
json encode(const VerificationReport& r, int n);
json encode(const OracleResult& r, int n);

// Decoders throw std::invalid_argument on malformed input.
SymmetricSet decode_symmetric(const json& j);
PointSet decode_pointset(const json& j);
BlockSymmetricSet decode_block(const json& j);
Target decode_target(const json& j);
OrderChoice decode_order(const json& j);
Polynomial decode_polynomial(const json& j);
HyperplaneFamily decode_family(const json& j);
Witness decode_witness(const json& j);
CoverSpec decode_spec(const json& j);

// Size of a family or degree of a polynomial.
int witness_value(const Witness& w);
VerificationReport verify_witness(const Witness& w, const CoverSpec& spec, Execution ex = Execution::parallel);

// Reads a file when `arg` names one, otherwise parses `arg` as inline JSON.
json load_json_arg(const std::string& arg);

}  // namespace hypercover
