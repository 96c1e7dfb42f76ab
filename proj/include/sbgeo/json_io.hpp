#pragma once

// JSON encodings shared by the command-line tool. Complex numbers are
// [re, im] pairs throughout. Decoding failures raise ErrorKind::Malformed.

#include "json.hpp"

#include "sbgeo/distance.hpp"
#include "sbgeo/geodesic.hpp"
#include "sbgeo/polydisc.hpp"

namespace sbgeo::json_io {

using Json = nlohmann::ordered_json;

Json encode(Complex z);
Json encode(const SymPoint& z);
Json encode(const SymPointN& z);
Json encode(const DiscAutomorphism& f);
Json encode(const Geodesic& g);
Json encode(const Certificate& c);
Json encode(const ExtremalParam& omega);
Json encode(const LempertResult& r);
Json encode(const DistanceReport& r);
Json encode(const VerifyReport& r);
Json encode(const RoyalIntersection& r);
Json encode(const GnUpperBound& r);

Complex decode_complex(const Json& j);
SymPoint decode_sym_point(const Json& j);
SymPointN decode_sym_point_n(const Json& j);
DiscAutomorphism decode_automorphism(const Json& j);
Geodesic decode_geodesic(const Json& j);

/// Parses text, mapping syntax errors to ErrorKind::Malformed.
Json parse(const std::string& text);

}  // namespace sbgeo::json_io
