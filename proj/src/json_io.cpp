#include "qtop/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qtop/error.hpp"

namespace qtop::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Json terms_json(const std::map<Weight, Integer>& terms) {
  Json out = Json::array();
  for (const auto& [w, m] : terms) out.push_back(Json{{"weight", to_json(w)}, {"mult", to_json(m)}});
  return out;
}

std::map<Weight, Integer> parse_terms(const Json& j, std::size_t rank) {
  if (!j.is_array()) fail("expected an array of {weight, mult}");
  std::map<Weight, Integer> out;
  for (const auto& t : j) out[parse_weight(field(t, "weight"), rank)] += parse_integer(field(t, "mult"));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Json to_json(const Integer& v) {
  if (auto x = to_int64(v)) return *x;
  return v.str();
}

Json to_json(const Rational& v) {
  if (denominator(v) == 1) return to_json(numerator(v));
  return to_string(v);
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (auto c : w.coords()) out.push_back(c);
  return out;
}

Json to_json(const RootDatum& d) {
  return Json{{"kind", d.is_torus() ? "torus" : "A"}, {"rank", d.rank()}};
}

Json to_json(const WeightPolynomial& p) { return terms_json(p.terms()); }

Json to_json(const Character& c) { return terms_json(c.multiplicities()); }

Json to_json(const FormalCharacter& f) {
  Json out{{"datum", to_json(f.datum())}, {"window", f.window()}, {"multiplicities", terms_json(f.nonzero())}};
  if (f.certificate())
    out["certificate"] = Json{{"direction", to_json(f.certificate()->direction)},
                              {"lower_bound", f.certificate()->lower_bound}};
  return out;
}

Json to_json(const FixedPointDatum& p) {
  Json tangent = Json::array();
  for (const auto& w : p.tangent_weights) tangent.push_back(to_json(w));
  return Json{{"tangent", tangent}, {"fiber", to_json(p.fiber)}, {"order", p.orbifold_order}};
}

Json to_json(const ClosedComponent& c) {
  Json pts = Json::array();
  for (const auto& p : c.fixed_points) pts.push_back(to_json(p));
  return Json{{"label", c.label}, {"fixed_points", pts}};
}

Json to_json(const DiscreteKCycle& k) {
  Json comps = Json::array();
  for (const auto& c : k.components) {
    Json j{{"sign", c.sign}, {"label", c.component.label}, {"fixed_points", to_json(c.component)["fixed_points"]}};
    if (c.family_step) j["family"] = Json{{"step", to_json(*c.family_step)}};
    comps.push_back(std::move(j));
  }
  Json out{{"datum", to_json(k.datum)}, {"components", comps}};
  if (k.enumeration_bound) out["enumeration_bound"] = *k.enumeration_bound;
  return out;
}

Json to_json(const LinearModel& m) {
  Json ws = Json::array();
  for (const auto& w : m.weights) ws.push_back(to_json(w));
  return Json{{"rank", m.rank()}, {"weights", ws}, {"shift", to_json(m.shift)}};
}

Json to_json(const RewriteCertificate& c) {
  return Json{{"move", c.move},
              {"window", c.window},
              {"verdict", c.verdict},
              {"before", to_json(c.before)},
              {"after", to_json(c.after)}};
}

Json to_json(const QrReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"gamma", to_json(row.gamma)},
                        {"q_top", to_json(row.q_top)},
                        {"q_red", to_json(row.q_red)},
                        {"regular", row.regular},
                        {"match", row.match}});
  return Json{{"window", r.window},
              {"polarization", to_json(r.polarization)},
              {"checked", r.checked},
              {"mismatches", r.mismatches},
              {"verdict", r.verdict},
              {"rows", rows}};
}

Json to_json(const VanishingComponent& c) {
  auto rvec = [](const RVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
  };
  Json strata = Json::array();
  for (const auto& s : c.strata) {
    Json stab = Json::array();
    for (const auto& b : s.stabilizer) stab.push_back(rvec(b));
    strata.push_back(Json{{"support", s.support}, {"stabilizer", stab}});
  }
  return Json{{"support", c.support},
              {"mu_value", rvec(c.mu_value)},
              {"compact", c.compact},
              {"mu_diameter_sq", to_json(c.mu_diameter_sq)},
              {"strata", strata}};
}

Json to_json(const OrbitCycle& o) {
  return Json{{"datum", to_json(o.datum)}, {"gamma", to_json(o.gamma)}, {"component", to_json(o.component)}};
}

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto body = s.starts_with('-') ? s.substr(1) : s;
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) fail("bad integer '" + s + "'");
    return Integer(s);
  }
  fail("expected an integer");
}

Rational parse_rational(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Integer den = parse_integer(Json(s.substr(slash + 1)));
      if (den == 0) fail("zero denominator");
      return Rational(parse_integer(Json(s.substr(0, slash))), den);
    }
  }
  return Rational(parse_integer(j));
}

Weight parse_weight(const Json& j, std::size_t rank) {
  if (j.is_number_integer() && rank == 1) return Weight{j.get<std::int64_t>()};
  if (!j.is_array()) fail("weight must be an integer array");
  if (j.size() != rank) fail("weight " + j.dump() + " should have " + std::to_string(rank) + " coordinates");
  std::vector<std::int64_t> c;
  for (const auto& x : j) c.push_back(as_int(x, "weight coordinate"));
  return Weight(std::move(c));
}

RootDatum parse_datum(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("datum kind must be a string");
  const auto rank = as_int(field(j, "rank"), "rank");
  if (rank < 1 || rank > 16) fail("rank out of range");
  return RootDatum::build(kind.get<std::string>(), static_cast<int>(rank));
}

WeightPolynomial parse_weight_polynomial(const Json& j, std::size_t rank) {
  WeightPolynomial out;
  for (const auto& [w, m] : parse_terms(j, rank)) out.add_term(w, m);
  return out;
}

Character parse_character(const Json& j, const RootDatum& d) {
  Character out(d);
  for (const auto& [w, m] : parse_terms(j, static_cast<std::size_t>(d.rank()))) out.add(w, m);
  return out;
}

FormalCharacter parse_formal_character(const Json& j) {
  const RootDatum d = parse_datum(field(j, "datum"));
  const auto window = as_int(field(j, "window"), "window");
  if (window < 0) fail("window must be nonnegative");
  FormalCharacter out(d, window);
  for (const auto& [w, m] : parse_terms(field(j, "multiplicities"), static_cast<std::size_t>(d.rank())))
    out.set(w, m);
  if (auto it = j.find("certificate"); it != j.end())
    out.set_certificate({parse_weight(field(*it, "direction"), static_cast<std::size_t>(d.rank())),
                         as_int(field(*it, "lower_bound"), "lower_bound")});
  return out;
}

ClosedComponent parse_component(const Json& j, std::size_t rank) {
  ClosedComponent out;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail("label must be a string");
    out.label = it->get<std::string>();
  }
  const Json& pts = field(j, "fixed_points");
  if (!pts.is_array()) fail("fixed_points must be an array");
  for (const auto& p : pts) {
    FixedPointDatum fp;
    const Json& tangent = field(p, "tangent");
    if (!tangent.is_array()) fail("tangent must be an array of weights");
    for (const auto& w : tangent) fp.tangent_weights.push_back(parse_weight(w, rank));
    fp.fiber = parse_weight_polynomial(field(p, "fiber"), rank);
    if (auto it = p.find("order"); it != p.end()) fp.orbifold_order = as_int(*it, "order");
    out.fixed_points.push_back(std::move(fp));
  }
  return out;
}

DiscreteKCycle parse_cycle(const Json& j) {
  DiscreteKCycle out(parse_datum(field(j, "datum")));
  const auto rank = static_cast<std::size_t>(out.datum.rank());
  const Json& comps = field(j, "components");
  if (!comps.is_array()) fail("components must be an array");
  for (const auto& c : comps) {
    CycleComponent cc;
    if (auto it = c.find("sign"); it != c.end()) cc.sign = static_cast<int>(as_int(*it, "sign"));
    cc.component = parse_component(c, rank);
    if (auto it = c.find("family"); it != c.end()) cc.family_step = parse_weight(field(*it, "step"), rank);
    out.components.push_back(std::move(cc));
  }
  if (auto it = j.find("enumeration_bound"); it != j.end())
    out.enumeration_bound = as_int(*it, "enumeration_bound");
  validate(out);
  return out;
}

LinearModel parse_linear_model(const Json& j) {
  const auto rank = as_int(field(j, "rank"), "rank");
  if (rank < 1 || rank > 16) fail("rank out of range");
  const auto r = static_cast<std::size_t>(rank);
  const Json& ws = field(j, "weights");
  if (!ws.is_array()) fail("weights must be an array");
  std::vector<Weight> weights;
  for (const auto& w : ws) weights.push_back(parse_weight(w, r));
  Weight shift(r);
  if (auto it = j.find("shift"); it != j.end()) shift = parse_weight(*it, r);
  return make_linear_model(static_cast<int>(rank), std::move(weights), std::move(shift));
}

QrReport parse_qr_report(const Json& j, std::size_t rank) {
  QrReport out;
  out.window = as_int(field(j, "window"), "window");
  out.polarization = parse_weight(field(j, "polarization"), rank);
  out.checked = static_cast<std::size_t>(as_int(field(j, "checked"), "checked"));
  out.mismatches = static_cast<std::size_t>(as_int(field(j, "mismatches"), "mismatches"));
  out.verdict = field(j, "verdict").get<bool>();
  for (const auto& row : field(j, "rows"))
    out.rows.push_back(QrRow{parse_weight(field(row, "gamma"), rank), parse_integer(field(row, "q_top")),
                             parse_integer(field(row, "q_red")), field(row, "regular").get<bool>(),
                             field(row, "match").get<bool>()});
  return out;
}

RewriteCertificate parse_certificate(const Json& j) {
  const Json& move = field(j, "move");
  if (!move.is_string()) fail("move must be a string");
  return RewriteCertificate{move.get<std::string>(), parse_formal_character(field(j, "before")),
                            parse_formal_character(field(j, "after")), as_int(field(j, "window"), "window"),
                            field(j, "verdict").get<bool>()};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace qtop::io
