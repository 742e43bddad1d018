#include "djkm/polyc.hpp"

namespace djkm {
namespace {

// One monomial |coeff|*c^k rendered without sign: "3", "c/2", "4c/5", "c^2".
std::string unsigned_term(const Rational& coeff, int k) {
  mpz_class num = abs(coeff.numerator());
  mpz_class den = coeff.denominator();
  std::string s;
  if (k == 0) {
    s = num.get_str();
  } else {
    if (num != 1) s = num.get_str();
    s += "c";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  if (den != 1) s += "/" + den.get_str();
  return s;
}

}  // namespace

std::string PolyC::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& coeff = coefficient(k);
    if (coeff.is_zero()) continue;
    if (out.empty()) {
      if (coeff.sign() < 0) out += "-";
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    out += unsigned_term(coeff, k);
  }
  return out;
}

}  // namespace djkm
