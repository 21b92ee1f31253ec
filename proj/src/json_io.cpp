#include "vvkit/json_io.hpp"

#include <fstream>

namespace vvkit {

namespace {

Json integer(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw FormatError("coordinates must be rational strings or integers");
}

}  // namespace

Json ideal_to_json(const Ideal& a) {
  Json out;
  out["ring"]["vars"] = a.ring()->variables();
  out["gens"] = polynomials_to_json(a.generators());
  return out;
}

Ideal ideal_from_json(const Json& j) {
  const auto& vars = field(field(j, "ring"), "vars");
  if (!vars.is_array() || vars.empty()) throw FormatError("\"vars\" must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw FormatError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const auto ring = make_ring(names);
  const auto& gens = field(j, "gens");
  if (!gens.is_array()) throw FormatError("\"gens\" must be an array");
  std::vector<Polynomial> ps;
  for (const auto& g : gens) {
    if (!g.is_string()) throw FormatError("generators must be strings");
    ps.push_back(parse_polynomial(g.get<std::string>(), ring));
  }
  return Ideal(ring, std::move(ps));
}

Json points_to_json(const PointConfiguration& cfg) {
  Json out;
  out["dim"] = cfg.dim();
  out["points"] = Json::array();
  for (const auto& p : cfg.points()) {
    Json row = Json::array();
    for (const auto& c : p.coords()) row.push_back(to_string(c));
    out["points"].push_back(row);
  }
  return out;
}

PointConfiguration points_from_json(const Json& j) {
  const auto& pts = field(j, "points");
  if (!pts.is_array()) throw FormatError("\"points\" must be an array");
  std::vector<std::vector<Rational>> coords;
  for (const auto& row : pts) {
    if (!row.is_array()) throw FormatError("each point must be an array");
    std::vector<Rational> c;
    for (const auto& v : row) c.push_back(rational_from(v));
    coords.push_back(std::move(c));
  }
  if (j.contains("dim")) {
    const auto n = field(j, "dim").get<std::size_t>();
    for (const auto& c : coords) {
      if (c.size() != n + 1) throw FormatError("point length does not match \"dim\"");
    }
  }
  return PointConfiguration::from_coordinates(coords);
}

Json polynomials_to_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json basis_to_json(const GroebnerBasis& gb) {
  Json out;
  out["ring"]["vars"] = gb.ring()->variables();
  out["order"] = gb.order().name();
  out["basis"] = polynomials_to_json(gb.elements());
  return out;
}

Json series_to_json(const HilbertSeries& hs) {
  Json out;
  out["numerator"] = Json::array();
  for (const auto& c : hs.numerator()) out["numerator"].push_back(integer(c));
  out["pole_order"] = hs.pole_order();
  out["text"] = hs.to_string();
  return out;
}

Json class_to_json(const ConfigClass& c) {
  Json out;
  out["s"] = c.s;
  out["profile"] = c.profile;
  out["label"] = c.label ? Json(*c.label) : Json(nullptr);
  out["descriptor"] = c.descriptor;
  return out;
}

Json report_to_json(const VVReport& r) {
  Json out;
  out["base"] = ideal_to_json(r.base);
  out["jacobian"] = ideal_to_json(r.jacobian);
  out["tmax"] = r.tmax;
  out["per_t"] = Json::array();
  for (const auto& step : r.per_t) {
    Json s;
    s["t"] = step.t;
    s["equal"] = step.equal;
    s["graded_dims"] = Json::object();
    for (const auto& [d, v] : step.graded_dims) s["graded_dims"][std::to_string(d)] = v;
    s["witness"] = step.witness ? Json(step.witness->to_string()) : Json(nullptr);
    out["per_t"].push_back(s);
  }
  out["verdict"] = r.torsion_free ? "torsion-free" : "not torsion-free";
  out["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  return out;
}

Json rees_to_json(const ReesPresentation& r) {
  Json out;
  out["relation_type"] = r.relation_type;
  out["fiber_size"] = r.fiber_size;
  out["generator_bidegrees"] = Json::array();
  for (const auto& [b, f] : r.generator_bidegrees) out["generator_bidegrees"].push_back({b, f});
  out["exceeded_bound"] = r.exceeded_bound;
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace vvkit
