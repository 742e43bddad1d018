#include "djkm/serialize.hpp"

#include <sstream>

namespace djkm {
namespace {

const char* family_name(VarFamily f) {
  static const char* names[4] = {"x", "x1", "y", "y1"};
  return names[static_cast<int>(f)];
}

VarFamily family_from_name(const std::string& name) {
  for (int i = 0; i < 4; ++i) {
    if (name == family_name(static_cast<VarFamily>(i))) {
      return static_cast<VarFamily>(i);
    }
  }
  throw ParseError("unknown variable family '" + name + "'");
}

template <class K>
Json central_json_impl(const CentralElement<K>& ce) {
  Json out = Json::object();
  out["w0"] = ce.w0().to_string();
  for (int k = -4; k <= -1; ++k) {
    out["w" + std::to_string(k)] = ce.w(k).to_string();
  }
  return out;
}

template <class K>
Json algebra_json_impl(const AlgebraElement<K>& e) {
  Json out = Json::array();
  for (const auto& [key, v] : e.terms()) {
    out.push_back({key.to_string(), v.to_string()});
  }
  return out;
}

}  // namespace

Json rational_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational: expected a string");
  return Rational::parse(j.get<std::string>());
}

Json polyc_json(const PolyC& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    out.push_back(p.coefficient(k).to_string());
  }
  return out;
}

PolyC polyc_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& cell : j) coeffs.push_back(rational_from_json(cell));
  return PolyC::from_coefficients(std::move(coeffs));
}

Json series_json(const SeriesC& s) {
  Json out = Json::object();
  const auto terms = s.terms();
  out["min_exponent"] = terms.empty() ? Json(nullptr) : Json(terms.front().first);
  out["order"] = s.is_exact() ? Json(nullptr) : Json(s.order());
  Json coeffs = Json::array();
  for (const auto& [exp, value] : terms) {
    coeffs.push_back({exp, polyc_json(value)});
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json central_json(const CentralElement<PolyC>& ce) {
  return central_json_impl(ce);
}
Json central_json(const CentralElement<Rational>& ce) {
  return central_json_impl(ce);
}

Json ring_json(const RingElement<PolyC>& f) {
  auto part = [](const LaurentPoly<PolyC>& p) {
    Json out = Json::array();
    for (const auto& [exp, v] : p.terms()) out.push_back({exp, v.to_string()});
    return out;
  };
  return Json{{"even", part(f.even)}, {"odd", part(f.odd)}};
}

Json algebra_json(const AlgebraElement<PolyC>& e) {
  return algebra_json_impl(e);
}
Json algebra_json(const AlgebraElement<Rational>& e) {
  return algebra_json_impl(e);
}

std::string family_csv(const FamilyTable& t) {
  int degree = 0;
  for (int k = -4; k <= t.kmax(); ++k) {
    degree = std::max(degree, t.entry(k).degree());
  }
  std::ostringstream out;
  out << "k";
  for (int d = 0; d <= degree; ++d) out << ",c" << d;
  out << "\n";
  for (int k = -4; k <= t.kmax(); ++k) {
    out << k;
    for (int d = 0; d <= degree; ++d) {
      out << "," << t.entry(k).coefficient(d).to_string();
    }
    out << "\n";
  }
  return out.str();
}

Json family_json(const FamilyTable& t) {
  Json rows = Json::array();
  for (int k = -4; k <= t.kmax(); ++k) {
    rows.push_back({{"k", k}, {"coefficients", polyc_json(t.entry(k))}});
  }
  return Json{{"family", t.which()}, {"entries", std::move(rows)}};
}

OneForm<PolyC> parse_one_form(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw ParseError("empty one-form");

  size_t pos = 0;
  int t_exp = 0;
  if (tokens[pos].rfind("t^", 0) == 0) {
    const std::string digits = tokens[pos].substr(2);
    size_t used = 0;
    try {
      t_exp = std::stoi(digits, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + tokens[pos] + "'");
    }
    if (used != digits.size()) {
      throw ParseError("bad exponent in '" + tokens[pos] + "'");
    }
    ++pos;
  } else if (tokens[pos] == "t") {
    t_exp = 1;
    ++pos;
  }
  bool with_u = false;
  if (pos < tokens.size() && tokens[pos] == "u") {
    with_u = true;
    ++pos;
  }
  if (pos + 1 != tokens.size() ||
      (tokens[pos] != "dt" && tokens[pos] != "du")) {
    throw ParseError("one-form must end with dt or du: '" + text + "'");
  }
  const bool is_du = tokens[pos] == "du";

  OneForm<PolyC> form;
  if (!is_du) {
    if (with_u) {
      form.u_dt.add(t_exp, PolyC(1));
    } else {
      form.dt.add(t_exp, PolyC(1));
    }
    return form;
  }
  RingElement<PolyC> coeff = with_u ? RingElement<PolyC>::t_power_u(t_exp)
                                    : RingElement<PolyC>::t_power(t_exp);
  return eliminate_du(coeff, PolyC::variable());
}

Json fock_state_json(const FockState& s) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : s.terms()) {
    Json vars = Json::array();
    for (const auto& [var, e] : mono.vars) {
      vars.push_back({family_name(var.family), var.index, e});
    }
    out.push_back({{"v", mono.v},
                   {"vars", std::move(vars)},
                   {"coeff", rational_json(coeff)}});
  }
  return out;
}

FockState fock_state_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("state: expected an array of terms");
  FockState s;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("v") || !term.contains("vars") ||
        !term.contains("coeff")) {
      throw ParseError("state term needs v, vars, coeff");
    }
    const int v = term["v"].get<int>();
    if (v != 0 && v != 1) throw ParseError("state v must be 0 or 1");
    Monomial mono;
    mono.v = v;
    for (const auto& entry : term["vars"]) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ParseError("variable entry must be [family, index, exponent]");
      }
      VarId var{family_from_name(entry[0].get<std::string>()),
                entry[1].get<int>()};
      const int e = entry[2].get<int>();
      if (e <= 0) throw ParseError("variable exponent must be positive");
      if ((var.family == VarFamily::Y || var.family == VarFamily::Y1) &&
          var.index >= 0) {
        throw ParseError("y-family indices must be negative");
      }
      mono.vars.emplace_back(var, e);
    }
    std::sort(mono.vars.begin(), mono.vars.end());
    for (size_t i = 1; i < mono.vars.size(); ++i) {
      if (mono.vars[i - 1].first == mono.vars[i].first) {
        throw ParseError("duplicate variable " + mono.vars[i].first.to_string());
      }
    }
    s.add(mono, rational_from_json(term["coeff"]));
  }
  return s;
}

std::vector<FockState> fock_states_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("states: expected an array");
  std::vector<FockState> out;
  out.reserve(j.size());
  for (const auto& state : j) out.push_back(fock_state_from_json(state));
  return out;
}

Json report_json(const std::string& name, const Report& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w);
  return Json{{"name", name},
              {"checked", r.checked},
              {"failed", r.failed},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace djkm
