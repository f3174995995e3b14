#include "heis/io.hpp"

namespace heis {

namespace {

Json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

void to_json(Json& j, const HeisPoint& p) {
  j = {{"re", p.z().real()}, {"im", p.z().imag()}, {"t", p.t()}};
}

void from_json(const Json& j, HeisPoint& p) {
  p = HeisPoint(j.at("re").get<double>(), j.at("im").get<double>(), j.at("t").get<double>());
}

void to_json(Json& j, const SurfacePoint& s) {
  j = {{"a", s.a},
       {"b", s.b},
       {"c", s.c},
       {"residual", s.residual()},
       {"class", std::string(to_string(classify_surface_point(s)))}};
}

void from_json(const Json& j, SurfacePoint& s) {
  s = {j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>()};
}

void to_json(Json& j, const CrossRatioTriple& x) {
  j = {{"X1", complex_to_json(x.x1)},
       {"X2", complex_to_json(x.x2)},
       {"X3", complex_to_json(x.x3)},
       {"residual1", x.first_relation_residual()},
       {"residual2", x.second_relation_residual()}};
}

void from_json(const Json& j, CrossRatioTriple& x) {
  x = {complex_from_json(j.at("X1")), complex_from_json(j.at("X2")),
       complex_from_json(j.at("X3"))};
}

Json triple_to_json(const Triple& P) { return {{"p1", P[0]}, {"p2", P[1]}, {"p3", P[2]}}; }

Triple triple_from_json(const Json& j) {
  return {j.at("p1").get<HeisPoint>(), j.at("p2").get<HeisPoint>(),
          j.at("p3").get<HeisPoint>()};
}

Json lift_to_json(const Lift& l) {
  return Json::array({complex_to_json(l[0]), complex_to_json(l[1]), complex_to_json(l[2])});
}

Lift lift_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Json::type_error::create(302, "lift must be an array of three complex numbers", &j);
  }
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

}  // namespace heis
