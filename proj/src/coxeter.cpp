#include "gentle/coxeter.hpp"

#include <map>

#include "gentle/errors.hpp"

namespace gentle {

CartanData cartan_matrix(const Presentation& p) {
  const Quiver& q = p.quiver();
  const std::size_t n = q.vertex_count();
  CartanData out;
  out.c = IntMatrix(n, n);
  for (const Path& path : enumerate_nonzero_paths(p)) out.c(path.source(q), path.target(q)) += 1;
  out.c.set_labels(q.vertex_names(), q.vertex_names());
  out.det = det(out.c);
  return out;
}

RatMatrix asymmetry_matrix(const CartanData& c) {
  if (c.det == 0) throw DomainError("Cartan matrix is singular");
  const RatMatrix cr = to_rational(c.c);
  RatMatrix s = -(cr.transpose() * inverse(cr));
  s.set_labels(c.c.row_labels(), c.c.col_labels());
  return s;
}

CoxeterData coxeter_data(const Presentation& p) {
  CoxeterData out;
  out.cartan = cartan_matrix(p);
  out.asymmetry = asymmetry_matrix(out.cartan);
  out.asymmetry_integral = to_integer(out.asymmetry).has_value();
  out.poly = char_poly(out.asymmetry);
  return out;
}

IntPolynomial coxeter_polynomial(const Presentation& p) {
  const auto data = coxeter_data(p);
  if (!data.poly.is_integral())
    throw DomainError("Coxeter polynomial has non-integer coefficients: " + to_string(data.poly.rational));
  const IntPolynomial& chi = *data.poly.integral;
  if (chi.degree() != static_cast<long>(p.quiver().vertex_count()) || chi.leading() != 1)
    throw Error("Coxeter polynomial is not monic of degree |Q0|");
  return chi;
}

IntPolynomial coxeter_closed_form(std::size_t t, std::size_t s) {
  if (t == 0) return IntPolynomial(std::vector<BigInt>(s + 2, 1));
  return IntPolynomial::binomial(3, 1).pow(t) * IntPolynomial::binomial(1, -1).pow(t - 1) *
         IntPolynomial::binomial(t + 2 + s, (t % 2 == 1) ? 1 : -1);
}

bool split_coxeter_check(const Presentation& g, const Presentation& g1, const Presentation& g2,
                         const Presentation& b, const Presentation& c) {
  auto chi = [](const Presentation& p) { return coxeter_data(p).poly.rational; };
  const RatPolynomial x = RatPolynomial::monomial(1);
  return chi(g) == chi(g1) * chi(g2) - x * chi(b) * chi(c);
}

std::string factored_form(const IntPolynomial& p) {
  if (p.degree() <= 0) return to_string(p);
  IntPolynomial rest = p;
  std::map<std::pair<long, int>, std::size_t> factors;  // (k, sign) -> multiplicity
  for (long k = rest.degree(); k >= 1; --k) {
    for (int sign : {1, -1}) {
      const IntPolynomial b = IntPolynomial::binomial(static_cast<std::size_t>(k), sign);
      while (rest.degree() >= k) {
        auto q = exact_divide(rest, b);
        if (!q) break;
        rest = *q;
        ++factors[{k, sign}];
      }
    }
  }
  if (factors.empty()) return to_string(p);
  if (factors.size() == 1 && factors.begin()->second == 1 && rest == IntPolynomial::constant(1)) return to_string(p);
  std::string out;
  if (!(rest == IntPolynomial::constant(1))) {
    out = rest.degree() == 0 ? to_string(rest) : "(" + to_string(rest) + ")";
  }
  for (const auto& [key, mult] : factors) {
    out += "(" + to_string(IntPolynomial::binomial(static_cast<std::size_t>(key.first), key.second)) + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

}  // namespace gentle
