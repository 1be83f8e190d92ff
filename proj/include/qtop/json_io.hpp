#pragma once

#include <json.hpp>

#include "qtop/coadjoint.hpp"
#include "qtop/linear_model.hpp"
#include "qtop/moves.hpp"

namespace qtop::io {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals as "p/q" strings unless integral.
Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const Weight& w);
Json to_json(const RootDatum& d);
Json to_json(const WeightPolynomial& p);
Json to_json(const Character& c);
Json to_json(const FormalCharacter& f);
Json to_json(const FixedPointDatum& p);
Json to_json(const ClosedComponent& c);
Json to_json(const DiscreteKCycle& k);
Json to_json(const LinearModel& m);
Json to_json(const RewriteCertificate& c);
Json to_json(const QrReport& r);
Json to_json(const VanishingComponent& c);
Json to_json(const OrbitCycle& o);

// Parsers throw Error(ParseError) on schema violations.
Integer parse_integer(const Json& j);
Rational parse_rational(const Json& j);
Weight parse_weight(const Json& j, std::size_t rank);
RootDatum parse_datum(const Json& j);
WeightPolynomial parse_weight_polynomial(const Json& j, std::size_t rank);
Character parse_character(const Json& j, const RootDatum& d);
FormalCharacter parse_formal_character(const Json& j);
ClosedComponent parse_component(const Json& j, std::size_t rank);
DiscreteKCycle parse_cycle(const Json& j);
LinearModel parse_linear_model(const Json& j);
QrReport parse_qr_report(const Json& j, std::size_t rank);
RewriteCertificate parse_certificate(const Json& j);

/// Reads and parses a UTF-8 JSON file. Throws ParseError.
Json read_file(const std::string& path);

}  // namespace qtop::io
