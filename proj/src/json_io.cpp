#include "sbgeo/json_io.hpp"

#include <string>

#include "sbgeo/error.hpp"

namespace sbgeo::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::Malformed, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Json encode_origin_fields(const OriginGeodesic& g) {
  Json zeros = Json::array();
  for (const Complex& a : g.blaschke().zeros()) zeros.push_back(encode(a));
  return Json{{"tau", encode(g.tau())}, {"zeros", zeros}};
}

OriginGeodesic decode_origin_fields(const Json& j) {
  const Json& zeros = field(j, "zeros");
  if (!zeros.is_array()) malformed("\"zeros\" must be an array");
  std::vector<Complex> z;
  for (const Json& a : zeros) z.push_back(decode_complex(a));
  return OriginGeodesic(BlaschkeProduct(decode_complex(field(j, "tau")), z));
}

std::string kind_name(RoyalIntersection::Kind kind) {
  switch (kind) {
    case RoyalIntersection::Kind::Empty: return "empty";
    case RoyalIntersection::Kind::SinglePoint: return "single-point";
    case RoyalIntersection::Kind::Whole: return "whole";
  }
  return "unknown";
}

}  // namespace

Json encode(Complex z) { return Json::array({z.real(), z.imag()}); }

Json encode(const SymPoint& z) {
  return Json{{"s", encode(z.s)}, {"p", encode(z.p)}};
}

Json encode(const SymPointN& z) {
  Json sigma = Json::array();
  for (const Complex& c : z.sigma) sigma.push_back(encode(c));
  return Json{{"n", z.n()}, {"sigma", sigma}};
}

Json encode(const DiscAutomorphism& f) {
  return Json{{"tau", encode(f.tau())}, {"alpha", encode(f.alpha())}};
}

Json encode(const Geodesic& g) {
  if (const auto* o = std::get_if<OriginGeodesic>(&g)) {
    Json out{{"type", "origin"}};
    out.update(encode_origin_fields(*o));
    return out;
  }
  if (const auto* t = std::get_if<TransportedGeodesic>(&g)) {
    Json out{{"type", "transported"}, {"alpha", encode(t->alpha)}};
    out.update(encode_origin_fields(t->inner));
    return out;
  }
  const auto& f = std::get<FlatGeodesic>(g);
  return Json{{"type", "flat"}, {"f1", encode(f.f1)}, {"f2", encode(f.f2)}};
}

Json encode(const ExtremalParam& omega) { return encode(omega.omega()); }

Json encode(const Certificate& c) {
  return Json{{"omega", encode(c.omega)},
              {"rotation", encode(c.rotation)},
              {"ratio", c.ratio}};
}

Json encode(const LempertResult& r) {
  Json out{{"value", r.value},
           {"method", std::string(to_string(r.method))},
           {"has_witness", r.has_witness}};
  if (r.witness) {
    out["witness"] = encode(*r.witness);
    out["preimage_from"] = encode(r.preimage_z);
    out["preimage_to"] = encode(r.preimage_w);
    out["residual"] = r.residual;
  }
  return out;
}

Json encode(const DistanceReport& r) {
  return Json{{"caratheodory_lower", r.caratheodory_lower},
              {"argmax_omega", encode(r.argmax_omega)},
              {"lempert_upper", r.lempert_upper},
              {"gap", r.gap},
              {"tight", r.tight},
              {"witness", encode(r.witness)}};
}

Json encode(const VerifyReport& r) {
  Json pairs = Json::array();
  for (const PairCheck& c : r.pairs) {
    pairs.push_back(Json{{"lambda1", encode(c.lambda1)},
                         {"lambda2", encode(c.lambda2)},
                         {"caratheodory", c.caratheodory},
                         {"poincare", c.poincare},
                         {"deviation", c.deviation},
                         {"pass", c.pass}});
  }
  return Json{{"passed", r.passed},
              {"worst_deviation", r.worst_deviation},
              {"pairs", pairs}};
}

Json encode(const RoyalIntersection& r) {
  Json out{{"class", kind_name(r.kind)}};
  if (r.kind == RoyalIntersection::Kind::SinglePoint) {
    out["lambda0"] = encode(r.lambda0);
  }
  return out;
}

Json encode(const GnUpperBound& r) {
  Json out{{"value", r.value},
           {"has_witness", r.has_witness},
           {"lift_bound", r.lift_bound}};
  if (r.witness) {
    Json zeros = Json::array();
    for (const Complex& a : r.witness->blaschke().zeros()) zeros.push_back(encode(a));
    out["witness"] = Json{{"n", r.witness->n()},
                          {"tau", encode(r.witness->blaschke().tau())},
                          {"zeros", zeros}};
    out["sigma"] = r.sigma;
    out["degree"] = r.degree;
    out["residual"] = r.residual;
  }
  return out;
}

Complex decode_complex(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex numbers are [re, im] arrays, got " + j.dump());
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

SymPoint decode_sym_point(const Json& j) {
  return SymPoint{decode_complex(field(j, "s")), decode_complex(field(j, "p"))};
}

SymPointN decode_sym_point_n(const Json& j) {
  const Json& sigma = field(j, "sigma");
  if (!sigma.is_array() || sigma.empty()) malformed("\"sigma\" must be a non-empty array");
  SymPointN out;
  for (const Json& c : sigma) out.sigma.push_back(decode_complex(c));
  if (j.contains("n")) {
    const Json& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() != out.n()) {
      malformed("\"n\" does not match the length of \"sigma\"");
    }
  }
  return out;
}

DiscAutomorphism decode_automorphism(const Json& j) {
  return DiscAutomorphism(decode_complex(field(j, "tau")),
                          decode_complex(field(j, "alpha")));
}

Geodesic decode_geodesic(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) malformed("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "origin") return decode_origin_fields(j);
  if (t == "transported") {
    return TransportedGeodesic{decode_complex(field(j, "alpha")),
                               decode_origin_fields(j)};
  }
  if (t == "flat") {
    return FlatGeodesic{decode_automorphism(field(j, "f1")),
                        decode_automorphism(field(j, "f2"))};
  }
  malformed("unknown geodesic type \"" + t + "\"");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sbgeo::json_io
