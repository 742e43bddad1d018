#pragma once

#include <string>
#include <vector>

#include "djkm/algebra.hpp"
#include "djkm/families.hpp"
#include "djkm/fock.hpp"
#include "djkm/report.hpp"
#include "djkm/ring.hpp"
#include "json.hpp"

namespace djkm {

/// Insertion-ordered JSON keeps emitted layouts deterministic.
using Json = nlohmann::ordered_json;

/// Exact scalar as the string "p" or "p/q".
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Parameter polynomial as its coefficient strings, lowest degree first.
Json polyc_json(const PolyC& p);
PolyC polyc_from_json(const Json& j);

/// Truncated series: {"min_exponent", "order" (null when exact),
/// "coefficients": [[exponent, polyc], ...]}.
Json series_json(const SeriesC& s);

/// Central element as the five display strings {"w0", "w-4".."w-1"}.
Json central_json(const CentralElement<PolyC>& ce);
Json central_json(const CentralElement<Rational>& ce);

/// Ring element as {"even": [[exp, coeff], ...], "odd": ...}.
Json ring_json(const RingElement<PolyC>& f);

/// Algebra element as [[basis key, coefficient], ...] in key order.
Json algebra_json(const AlgebraElement<PolyC>& e);
Json algebra_json(const AlgebraElement<Rational>& e);

/// Coefficient family table as CSV (header k,c0,c1,...; exact cells) or as
/// JSON rows.
std::string family_csv(const FamilyTable& t);
Json family_json(const FamilyTable& t);

/// Parses a one-form monomial: optional "t^K", optional "u", then "dt" or
/// "du" (du is eliminated on the spot), e.g. "dt", "t^-5 u dt", "t^2 du".
OneForm<PolyC> parse_one_form(const std::string& text);

/// Fock states: {"v": 0|1, "vars": [["x", index, exponent], ...],
/// "coeff": "p/q"} per monomial, states as arrays of those.
Json fock_state_json(const FockState& s);
FockState fock_state_from_json(const Json& j);
std::vector<FockState> fock_states_from_json(const Json& j);

/// One verification outcome: {"name", "checked", "failed", "witnesses"}.
/// Wall time is deliberately excluded so reports are snapshot-stable.
Json report_json(const std::string& name, const Report& r);

}  // namespace djkm
