#include "qtop/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <sstream>

#include "qtop/error.hpp"
#include "qtop/json_io.hpp"

namespace qtop::cli {

namespace {

using io::Json;

struct Request {
  std::string verb;
  std::string input;
  std::int64_t window = 8;
  std::string polarization;
  std::string format = "json";
  std::string gamma;
  std::string group;
};

Weight parse_polarization(const std::string& text, std::size_t rank) {
  std::vector<Rational> xi;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) xi.push_back(io::parse_rational(Json(part)));
  if (xi.size() != rank)
    throw Error(Errc::InvalidInput, "polarization needs " + std::to_string(rank) + " coordinates");
  return integral_direction(xi);
}

std::optional<Weight> polarization(const Request& req, std::size_t rank) {
  if (req.polarization.empty()) return std::nullopt;
  return parse_polarization(req.polarization, rank);
}

Weight parse_gamma(const std::string& text, std::size_t rank) {
  std::vector<std::int64_t> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const Integer v = io::parse_integer(Json(part));
    auto x = to_int64(v);
    if (!x) throw Error(Errc::InvalidInput, "weight coordinate out of range");
    c.push_back(*x);
  }
  if (c.size() != rank) throw Error(Errc::InvalidInput, "gamma needs " + std::to_string(rank) + " coordinates");
  return Weight(std::move(c));
}

std::string show(const FormalCharacter& f) {
  if (f.datum().is_torus()) {
    WeightPolynomial p;
    for (const auto& [w, m] : f.nonzero()) p.add_term(w, m);
    return p.to_string();
  }
  if (f.nonzero().empty()) return "0";
  std::string s;
  for (const auto& [w, m] : f.nonzero()) {
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    const Integer mag = m < 0 ? Integer(-m) : m;
    if (mag != 1) s += mag.str() + "*";
    s += "V" + w.to_string();
  }
  return s;
}

std::string show(const RVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string show_support(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

void emit(std::ostream& out, const Request& req, const Json& j, const std::string& table) {
  if (req.format == "table")
    out << table;
  else
    out << j.dump(2) << "\n";
}

int do_index(const Request& req, std::ostream& out) {
  const DiscreteKCycle k = io::parse_cycle(io::read_file(req.input));
  const auto xi = polarization(req, static_cast<std::size_t>(k.datum.rank()));
  if (!xi && k.is_finite()) {
    std::optional<WeightPolynomial> closed;
    try {
      closed = closed_cycle_index(k);
    } catch (const Error& e) {
      if (e.code() != Errc::NotClosed) throw;
    }
    if (closed) {
      Json j{{"mode", "closed"}, {"character", closed->to_string()}, {"terms", io::to_json(*closed)}};
      emit(out, req, j, closed->to_string() + "\n");
      return kOk;
    }
  }
  const Weight dir = xi ? *xi : default_polarization(k);
  const FormalCharacter f = polarized_index(k, dir, req.window);
  Json j{{"mode", "polarized"}, {"polarization", io::to_json(dir)}, {"character", show(f)}, {"index", io::to_json(f)}};
  emit(out, req, j, show(f) + "\n");
  return kOk;
}

int do_quantize(const Request& req, std::ostream& out) {
  const LinearModel m = io::parse_linear_model(io::read_file(req.input));
  const FormalCharacter f = formal_quantization(m, req.window, polarization(req, m.rank()));
  std::string table;
  for (const auto& [w, v] : f.nonzero()) table += w.to_string() + "\t" + to_string(v) + "\n";
  emit(out, req, Json{{"character", show(f)}, {"index", io::to_json(f)}}, table);
  return kOk;
}

int do_reduce(const Request& req, std::ostream& out) {
  const LinearModel m = io::parse_linear_model(io::read_file(req.input));
  if (req.gamma.empty()) throw Error(Errc::InvalidInput, "reduce needs --gamma");
  const Weight g = parse_gamma(req.gamma, m.rank());
  const auto r = reduction_multiplicity(m, g);
  emit(out, req, Json{{"gamma", io::to_json(g)}, {"multiplicity", io::to_json(r.count)}, {"regular", r.regular}},
       g.to_string() + "\t" + to_string(r.count) + "\t" + (r.regular ? "regular" : "singular") + "\n");
  return kOk;
}

int do_verify_qr(const Request& req, std::ostream& out) {
  const LinearModel m = io::parse_linear_model(io::read_file(req.input));
  const QrReport r = verify_qr(m, req.window, polarization(req, m.rank()));
  std::string table = "gamma\tq_top\tq_red\tregular\tmatch\n";
  for (const auto& row : r.rows)
    table += row.gamma.to_string() + "\t" + to_string(row.q_top) + "\t" + to_string(row.q_red) + "\t" +
             (row.regular ? "yes" : "no") + "\t" + (row.match ? "yes" : "no") + "\n";
  table += "checked " + std::to_string(r.checked) + ", mismatches " + std::to_string(r.mismatches) + ", verdict " +
           (r.verdict ? "pass" : "fail") + "\n";
  emit(out, req, io::to_json(r), table);
  return r.verdict ? kOk : kVerificationFailed;
}

int do_orbit(const Request& req, std::ostream& out) {
  if (req.group.empty() || req.gamma.empty()) throw Error(Errc::InvalidInput, "orbit needs --group and --gamma");
  const RootDatum d = RootDatum::parse_label(req.group);
  const Weight g = parse_gamma(req.gamma, static_cast<std::size_t>(d.rank()));
  const OrbitCycle o = orbit_cycle(d, g);
  const WeightPolynomial index = closed_index(d, o.component);
  const WeightPolynomial weyl = weyl_character(d, g);
  const bool ok = index == weyl;
  Json j{{"cycle", io::to_json(o)},
         {"index", io::to_json(index)},
         {"weyl_character", io::to_json(weyl)},
         {"match", ok}};
  emit(out, req, j,
       "index\t" + index.to_string() + "\nweyl\t" + weyl.to_string() + "\nmatch\t" + (ok ? "yes" : "no") + "\n");
  return ok ? kOk : kVerificationFailed;
}

int do_moves(const Request& req, std::ostream& out) {
  const Json spec = io::read_file(req.input);
  const auto move_it = spec.find("move");
  if (move_it == spec.end() || !move_it->is_string()) throw Error(Errc::ParseError, "missing 'move'");
  const std::string move = move_it->get<std::string>();
  std::optional<RewriteCertificate> cert;
  if (move == "disjoint_union") {
    cert = certify_disjoint_union(io::parse_cycle(spec.at("a")), io::parse_cycle(spec.at("b")), req.window);
  } else if (move == "disk_decomposition") {
    cert = certify_disk_decomposition(spec.at("sign").get<int>(), spec.at("truncation").get<std::int64_t>());
  } else if (move == "glue_split") {
    const RootDatum d = io::parse_datum(spec.at("datum"));
    const ClosedComponent c = io::parse_component(spec.at("component"), static_cast<std::size_t>(d.rank()));
    const auto a = spec.at("block_a").get<std::vector<std::size_t>>();
    const auto b = spec.at("block_b").get<std::vector<std::size_t>>();
    cert = certify_glue_split(d, c, glue_split(d, c, a, b), req.window);
  } else if (move == "bundle_modification") {
    const DiscreteKCycle k = io::parse_cycle(spec.at("cycle"));
    const ClosedComponent fiber = io::parse_component(spec.at("fiber"), static_cast<std::size_t>(k.datum.rank()));
    cert = bundle_modification(k, fiber, req.window).second;
  } else if (move == "product") {
    cert = certify_product(io::parse_cycle(spec.at("a")), io::parse_cycle(spec.at("b")), req.window);
  } else {
    throw Error(Errc::InvalidInput, "unknown move '" + move + "'");
  }
  emit(out, req, io::to_json(*cert),
       cert->move + "\t" + (cert->verdict ? "pass" : "fail") + "\nbefore\t" + show(cert->before) + "\nafter\t" +
           show(cert->after) + "\n");
  return cert->verdict ? kOk : kVerificationFailed;
}

int do_vanishing(const Request& req, std::ostream& out) {
  const LinearModel m = io::parse_linear_model(io::read_file(req.input));
  const auto comps = vanishing_decomposition(m);
  Json arr = Json::array();
  std::string table = "support\tmu\tcompact\tdiameter^2\n";
  for (const auto& c : comps) {
    arr.push_back(io::to_json(c));
    table += show_support(c.support) + "\t" + show(c.mu_value) + "\t" + (c.compact ? "yes" : "no") + "\t" +
             to_string(c.mu_diameter_sq) + "\n";
  }
  emit(out, req, Json{{"components", arr}, {"mu_bound_sq", io::to_json(vanishing_mu_bound_sq(comps))}}, table);
  return kOk;
}

void report_error(std::ostream& out, std::string_view code, const std::string& message) {
  out << Json{{"error", code}, {"message", message}}.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Equivariant index and [Q,R]=0 toolkit", "qtop"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", req.input, "JSON input file")->required();
    sub->add_option("--window", req.window, "window bound B")->check(CLI::NonNegativeNumber);
    sub->add_option("--polarization", req.polarization, "polarization x/y,...");
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "table"}));
  };
  for (const char* verb : {"index", "quantize", "verify-qr", "moves", "vanishing"})
    add_common(app.add_subcommand(verb), true);
  auto* reduce = app.add_subcommand("reduce");
  add_common(reduce, true);
  reduce->add_option("--gamma", req.gamma, "weight, comma separated")->required();
  auto* orbit = app.add_subcommand("orbit");
  add_common(orbit, false);
  orbit->add_option("--group", req.group, "group label such as A1 or T2")->required();
  orbit->add_option("--gamma", req.gamma, "dominant weight, comma separated")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    report_error(out, "ParseError", e.what());
    return kInputError;
  }
  req.verb = app.get_subcommands().front()->get_name();

  try {
    if (req.verb == "index") return do_index(req, out);
    if (req.verb == "quantize") return do_quantize(req, out);
    if (req.verb == "reduce") return do_reduce(req, out);
    if (req.verb == "verify-qr") return do_verify_qr(req, out);
    if (req.verb == "orbit") return do_orbit(req, out);
    if (req.verb == "moves") return do_moves(req, out);
    return do_vanishing(req, out);
  } catch (const Error& e) {
    report_error(out, errc_name(e.code()), e.what());
    return e.code() == Errc::VerificationFailed ? kVerificationFailed : kInputError;
  } catch (const nlohmann::json::exception& e) {
    report_error(out, "ParseError", e.what());
    return kInputError;
  }
}

}  // namespace qtop::cli
