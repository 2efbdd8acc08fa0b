#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dissect/model.hpp"
#include "dissect/orbits.hpp"

namespace dissect {

using Json = nlohmann::ordered_json;

// {"n":6,"diagonals":[[0,2],[0,4]]}; pairs sorted, list sorted.
Json to_json(const Dissection& d);
// {"n":..,"diagonals":[..],"mark":[v_0,..]}
Json to_json(const MarkedDissection& m);
// Rationals are written as {"numerator":"p","denominator":"q"} strings so that
// values beyond 64 bits survive any JSON reader.
Json to_json(const Rational& v);
// One flat record per method value.
Json to_json(const CountReport& report);

// Both readers normalize ordering and validate; they throw
// std::invalid_argument on malformed or invalid input.
Dissection dissection_from_json(const Json& j);
MarkedDissection marked_from_json(const Json& j);

std::string dump_line(const Json& j);

}  // namespace dissect
