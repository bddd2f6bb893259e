#include "gentle/json_io.hpp"

#include <limits>

#include "gentle/cm_construct.hpp"
#include "gentle/errors.hpp"

namespace gentle {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(bigint_from_json(j));
  if (!j.is_string()) throw ParseError("expected a rational");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return to_json(numerator(r));
  return numerator(r).str() + "/" + denominator(r).str();
}

std::vector<std::string> labels_from_json(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) return {};
  auto v = j.at(key).get<std::vector<std::string>>();
  if (!v.empty() && v.size() != n) throw ParseError(std::string(key) + " has the wrong length");
  return v;
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, F entry) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) throw ParseError("matrix needs rows");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_array()) throw ParseError("matrix row is not an array");
    std::vector<T> row;
    for (const auto& x : r) row.push_back(entry(x));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix");
    rows.push_back(std::move(row));
  }
  auto m = Matrix<T>::from_rows(rows);
  auto rl = labels_from_json(j, "row_labels", m.rows());
  auto cl = labels_from_json(j, "col_labels", m.cols());
  if (!rl.empty() || !cl.empty()) m.set_labels(std::move(rl), std::move(cl));
  return m;
}

template <class T, class F>
Json matrix_to_json(const Matrix<T>& m, F entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", rows}, {"row_labels", m.row_labels()}, {"col_labels", m.col_labels()}};
}

}  // namespace

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const Presentation& p) {
  const Quiver& q = p.quiver();
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  Json rels = Json::array();
  for (const auto& r : p.relations()) rels.push_back({q.arrow(r.outer).name, q.arrow(r.inner).name});
  return Json{{"vertices", q.vertex_names()}, {"arrows", arrows}, {"relations", rels}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    Quiver q;
    for (const auto& v : j.at("vertices")) q.add_vertex(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
      q.add_arrow(a.at("id").get<std::string>(), a.at("source").get<std::string>(), a.at("target").get<std::string>());
    std::vector<Relation> rels;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) throw ParseError("relation must be [outer, inner]");
        rels.push_back({q.arrow_index(r[0].get<std::string>()), q.arrow_index(r[1].get<std::string>())});
      }
    return Presentation(std::move(q), std::move(rels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  }
}

Json to_json(const IntMatrix& m) {
  return matrix_to_json(m, [](const BigInt& x) { return to_json(x); });
}
Json to_json(const RatMatrix& m) { return matrix_to_json(m, rational_to_json); }

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<BigInt>(j, bigint_from_json); }
RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPolynomial(std::move(c));
}

Json cm_auslander_json(const Presentation& p) {
  const auto g = cm_auslander(p);
  Json j = to_json(g);
  Json cycles = Json::array();
  for (const auto& c : critical_cycles(p).cycles) cycles.push_back(format_cycle(p.quiver(), c));
  j["cycles"] = cycles;
  const auto gp = gorenstein_projectives(p);
  Json list = gp.projectives;
  for (const auto& r : gp.radicals) list.push_back(r);
  j["gorenstein_projectives"] = list;
  return j;
}

}  // namespace gentle
