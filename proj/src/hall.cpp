#include "gentle/hall.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <numeric>
#include <set>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

void require_compatible(const Representation& x, const Representation& y) {
  if (!(x.field == y.field)) throw DomainError("representations over different fields");
  if (x.algebra != y.algebra && !(x.algebra && y.algebra && *x.algebra == *y.algebra))
    throw DomainError("representations of different algebras");
}

std::vector<std::size_t> pivots_of(const FqMatrix& basis) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c)
      if (basis(r, c)) {
        piv.push_back(c);
        break;
      }
  return piv;
}

// Reduce y modulo the RREF rows of basis; returns the coordinates of the
// removed part. y ends with zeros in the pivot columns.
std::vector<std::uint32_t> reduce(const PrimeField& f, const FqMatrix& basis, const std::vector<std::size_t>& piv,
                                  std::vector<std::uint32_t>& y) {
  std::vector<std::uint32_t> coords(piv.size());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    const auto x = y[piv[r]];
    coords[r] = x;
    if (!x) continue;
    for (std::size_t c = 0; c < y.size(); ++c) y[c] = f.sub(y[c], f.mul(x, basis(r, c)));
  }
  return coords;
}

std::vector<std::uint32_t> apply(const PrimeField& f, const FqMatrix& m, const FqMatrix& rows, std::size_t r) {
  std::vector<std::uint32_t> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) y[i] = f.add(y[i], f.mul(m(i, k), rows(r, k)));
  return y;
}

bool all_zero(const std::vector<std::uint32_t>& y) {
  return std::all_of(y.begin(), y.end(), [](auto v) { return v == 0; });
}

// image of U_s under the arrow lies in U_t
bool closed(const Representation& l, std::size_t a, const FqMatrix& us, const FqMatrix& ut) {
  const auto& f = l.field;
  const auto piv = pivots_of(ut);
  for (std::size_t r = 0; r < us.rows(); ++r) {
    auto y = apply(f, l.maps[a], us, r);
    reduce(f, ut, piv, y);
    if (!all_zero(y)) return false;
  }
  return true;
}

void check_caps(const Representation& l, std::size_t dim_cap) {
  if (l.field.q() > kMaxFieldSize)
    throw ResourceError("field size " + std::to_string(l.field.q()) + " exceeds the cap " +
                        std::to_string(kMaxFieldSize));
  if (l.total_dim() > dim_cap)
    throw ResourceError("module dimension " + std::to_string(l.total_dim()) + " exceeds the cap " +
                        std::to_string(dim_cap));
}

std::vector<Subrepresentation> enumerate_impl(const Representation& l, const std::vector<std::size_t>* target,
                                              std::size_t dim_cap) {
  check_caps(l, dim_cap);
  const auto& f = l.field;
  const Quiver& q = l.algebra->quiver();
  const std::size_t nv = q.vertex_count();
  if (target && target->size() != nv) throw DomainError("dimension vector has the wrong length");

  std::vector<std::vector<FqMatrix>> cand(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::uint64_t count = 0;
    const std::size_t lo = target ? (*target)[v] : 0;
    const std::size_t hi = target ? (*target)[v] : l.dims[v];
    if (lo > l.dims[v]) return {};
    for (std::size_t k = lo; k <= hi; ++k) count += gaussian_binomial(l.dims[v], k, f.q());
    if (count > kSubspaceCap) throw ResourceError("too many subspaces at vertex " + q.vertex_name(v));
    for (std::size_t k = lo; k <= hi; ++k)
      for (auto& s : subspaces(f, l.dims[v], k)) cand[v].push_back(std::move(s));
  }

  // arrows to check once both endpoints are chosen, keyed by the later one
  std::vector<std::vector<std::size_t>> check_at(nv);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    check_at[std::max(q.arrow(a).source, q.arrow(a).target)].push_back(a);

  std::vector<Subrepresentation> out;
  std::vector<FqMatrix> chosen(nv);
  auto go = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      out.push_back(Subrepresentation{chosen});
      return;
    }
    for (const auto& s : cand[v]) {
      chosen[v] = s;
      bool ok = true;
      for (std::size_t a : check_at[v])
        if (!closed(l, a, chosen[q.arrow(a).source], chosen[q.arrow(a).target])) {
          ok = false;
          break;
        }
      if (ok) self(self, v + 1);
    }
  };
  go(go, 0);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

void Representation::validate() const {
  const Quiver& q = algebra->quiver();
  if (dims.size() != q.vertex_count() || maps.size() != q.arrow_count())
    throw DomainError("representation does not match its quiver");
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (maps[a].rows() != dims[q.arrow(a).target] || maps[a].cols() != dims[q.arrow(a).source])
      throw DomainError("matrix of arrow " + q.arrow(a).name + " has the wrong shape");
  for (const auto& r : algebra->relations())
    if (!multiply(field, maps[r.outer], maps[r.inner]).is_zero())
      throw DomainError("relation " + q.arrow(r.outer).name + " " + q.arrow(r.inner).name + " is violated");
}

Representation zero_module(std::shared_ptr<const Presentation> p, const PrimeField& f) {
  Representation r;
  const Quiver& q = p->quiver();
  r.algebra = std::move(p);
  r.field = f;
  r.dims.assign(q.vertex_count(), 0);
  r.maps.assign(q.arrow_count(), FqMatrix());
  return r;
}

Representation string_module(std::shared_ptr<const Presentation> p, const StringWord& w, const PrimeField& f) {
  if (!is_string(*p, w)) throw DomainError("not a string");
  const Quiver& q = p->quiver();
  const auto u = visited_vertices(q, w);
  Representation r = zero_module(p, f);
  std::vector<std::size_t> local(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) local[i] = r.dims[u[i]]++;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    r.maps[a] = FqMatrix(r.dims[q.arrow(a).target], r.dims[q.arrow(a).source]);
  for (std::size_t i = 1; i <= w.letters.size(); ++i) {
    const Letter& c = w.letters[i - 1];
    if (c.inverse)
      r.maps[c.arrow](local[i], local[i - 1]) = 1;
    else
      r.maps[c.arrow](local[i - 1], local[i]) = 1;
  }
  r.validate();
  return r;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  require_compatible(x, y);
  const Quiver& q = x.algebra->quiver();
  Representation r = zero_module(x.algebra, x.field);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) r.dims[v] = x.dims[v] + y.dims[v];
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& xa = x.maps[a];
    const auto& ya = y.maps[a];
    FqMatrix m(xa.rows() + ya.rows(), xa.cols() + ya.cols());
    for (std::size_t i = 0; i < xa.rows(); ++i)
      for (std::size_t j = 0; j < xa.cols(); ++j) m(i, j) = xa(i, j);
    for (std::size_t i = 0; i < ya.rows(); ++i)
      for (std::size_t j = 0; j < ya.cols(); ++j) m(xa.rows() + i, xa.cols() + j) = ya(i, j);
    r.maps[a] = std::move(m);
  }
  return r;
}

Representation conjugate(const Representation& x, std::mt19937_64& rng) {
  const Quiver& q = x.algebra->quiver();
  std::vector<FqMatrix> g, gi;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    g.push_back(random_invertible(x.field, x.dims[v], rng));
    gi.push_back(inverse(x.field, g.back()));
  }
  Representation r = x;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    r.maps[a] = multiply(x.field, multiply(x.field, g[q.arrow(a).target], x.maps[a]), gi[q.arrow(a).source]);
  return r;
}

std::size_t hom_dimension(const Representation& x, const Representation& y) {
  require_compatible(x, y);
  const auto& f = x.field;
  const Quiver& q = x.algebra->quiver();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return 0;
  // f_v is dims_y[v] x dims_x[v]; entry (r, c) is unknown offset[v] + r * dims_x[v] + c
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * x.dims[v] + c; };

  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += y.dims[a.target] * x.dims[a.source];
  FqMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& xa = x.maps[ai];
    const auto& ya = y.maps[ai];
    for (std::size_t r = 0; r < y.dims[a.target]; ++r)
      for (std::size_t c = 0; c < x.dims[a.source]; ++c, ++row) {
        // (f_t X_a)(r, c) - (Y_a f_s)(r, c) = 0
        for (std::size_t k = 0; k < x.dims[a.target]; ++k) {
          auto& e = sys(row, var(a.target, r, k));
          e = f.add(e, xa(k, c));
        }
        for (std::size_t k = 0; k < y.dims[a.source]; ++k) {
          auto& e = sys(row, var(a.source, k, c));
          e = f.sub(e, ya(r, k));
        }
      }
  }
  return unknowns - rank(f, std::move(sys));
}

std::vector<std::size_t> Subrepresentation::dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : basis) d.push_back(b.rows());
  return d;
}

std::vector<Subrepresentation> enumerate_submodules(const Representation& l, std::size_t dim_cap) {
  return enumerate_impl(l, nullptr, dim_cap);
}

std::vector<Subrepresentation> enumerate_submodules(const Representation& l, const std::vector<std::size_t>& dims,
                                                    std::size_t dim_cap) {
  return enumerate_impl(l, &dims, dim_cap);
}

void require_submodule(const Representation& l, const Subrepresentation& u) {
  const Quiver& q = l.algebra->quiver();
  if (u.basis.size() != q.vertex_count()) throw DomainError("subspace tuple has the wrong length");
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    FqMatrix b = u.basis[v];
    if (b.cols() != l.dims[v] || rank(l.field, b) != b.rows())
      throw DomainError("subspace at vertex " + q.vertex_name(v) + " is not a basis of the right size");
    FqMatrix r = b;
    rref(l.field, r);
    if (!(r == b)) throw DomainError("subspace at vertex " + q.vertex_name(v) + " is not in echelon form");
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!closed(l, a, u.basis[q.arrow(a).source], u.basis[q.arrow(a).target]))
      throw DomainError("not a submodule: arrow " + q.arrow(a).name + " leaves the subspace");
}

Representation subrep(const Representation& l, const Subrepresentation& u) {
  require_submodule(l, u);
  const auto& f = l.field;
  const Quiver& q = l.algebra->quiver();
  Representation r = zero_module(l.algebra, f);
  r.dims = u.dims();
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& us = u.basis[a.source];
    const auto& ut = u.basis[a.target];
    const auto piv = pivots_of(ut);
    FqMatrix m(ut.rows(), us.rows());
    for (std::size_t j = 0; j < us.rows(); ++j) {
      auto y = apply(f, l.maps[ai], us, j);
      const auto coords = reduce(f, ut, piv, y);
      for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
    }
    r.maps[ai] = std::move(m);
  }
  return r;
}

Representation quotient(const Representation& l, const Subrepresentation& u) {
  require_submodule(l, u);
  const auto& f = l.field;
  const Quiver& q = l.algebra->quiver();
  std::vector<std::vector<std::size_t>> free(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto piv = pivots_of(u.basis[v]);
    for (std::size_t c = 0; c < l.dims[v]; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) free[v].push_back(c);
  }
  Representation r = zero_module(l.algebra, f);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) r.dims[v] = free[v].size();
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& ut = u.basis[a.target];
    const auto piv = pivots_of(ut);
    FqMatrix m(free[a.target].size(), free[a.source].size());
    for (std::size_t j = 0; j < free[a.source].size(); ++j) {
      std::vector<std::uint32_t> y(l.dims[a.target]);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = l.maps[ai](i, free[a.source][j]);
      reduce(f, ut, piv, y);
      for (std::size_t i = 0; i < free[a.target].size(); ++i) m(i, j) = y[free[a.target][i]];
    }
    r.maps[ai] = std::move(m);
  }
  return r;
}

HallContext::HallContext(Presentation p, std::uint32_t q, std::size_t dim_cap)
    : p_(std::make_shared<const Presentation>(std::move(p))), field_(q), dim_cap_(dim_cap) {
  if (q > kMaxFieldSize)
    throw ResourceError("field size " + std::to_string(q) + " exceeds the cap " + std::to_string(kMaxFieldSize));
  require_gentle(*p_);
  indecs_ = enumerate_strings(*p_);
  for (const auto& w : indecs_) {
    reps_.push_back(string_module(p_, w, field_));
    dimvecs_.push_back(gentle::dimension_vector(*p_, w));
  }
  const std::size_t k = indecs_.size();
  hom_ = IntMatrix(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) hom_(j, i) = hom_dimension(reps_[j], reps_[i]);
  if (det(hom_) == 0) throw DomainError("Hom matrix of the indecomposables is singular");
  hom_inv_ = inverse(to_rational(hom_));
}

std::size_t HallContext::index_of(const StringWord& w) const {
  const auto c = canonical_string(p_->quiver(), w);
  for (std::size_t i = 0; i < indecs_.size(); ++i)
    if (indecs_[i] == c) return i;
  throw DomainError("'" + format_string(p_->quiver(), w) + "' is not a string of the algebra");
}

Multiplicities HallContext::to_multiplicities(const IsoClass& c) const {
  Multiplicities m(indecs_.size(), 0);
  for (const auto& [w, k] : c.parts) m[index_of(w)] += k;
  return m;
}

IsoClass HallContext::to_iso_class(const Multiplicities& m) const {
  IsoClass c;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) c.parts.emplace_back(indecs_[i], m[i]);
  return c;
}

DimensionVector HallContext::dimension_vector(const Multiplicities& m) const {
  DimensionVector d(p_->quiver().vertex_count(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += m[i] * dimvecs_[i][v];
  return d;
}

Representation HallContext::realize(const Multiplicities& m) const {
  Representation r = zero_module(p_, field_);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m[i]; ++k) r = direct_sum(r, reps_[i]);
  return r;
}

std::vector<std::size_t> HallContext::hom_profile(const Representation& x) const {
  std::vector<std::size_t> h;
  for (const auto& r : reps_) h.push_back(hom_dimension(r, x));
  return h;
}

Multiplicities HallContext::decompose(const Representation& x) const {
  const auto h = hom_profile(x);
  const std::size_t k = indecs_.size();
  Multiplicities m(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j) s += hom_inv_(i, j) * Rational(h[j]);
    if (denominator(s) != 1 || s < 0) throw DomainError("inconsistent decomposition: non-natural multiplicity");
    m[i] = static_cast<std::size_t>(numerator(s));
  }
  if (dimension_vector(m) != x.dims) throw DomainError("inconsistent decomposition: dimensions do not add up");
  return m;
}

std::vector<Multiplicities> HallContext::modules_of_dimension(const DimensionVector& d) const {
  std::vector<Multiplicities> out;
  Multiplicities cur(indecs_.size(), 0);
  DimensionVector rest = d;
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == indecs_.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](auto v) { return v == 0; })) out.push_back(cur);
      return;
    }
    self(self, i + 1);
    const auto& dv = dimvecs_[i];
    std::size_t added = 0;
    for (;;) {
      bool fits = true;
      for (std::size_t v = 0; v < rest.size(); ++v) fits &= dv[v] <= rest[v];
      if (!fits) break;
      for (std::size_t v = 0; v < rest.size(); ++v) rest[v] -= dv[v];
      ++cur[i];
      ++added;
      self(self, i + 1);
    }
    for (std::size_t v = 0; v < rest.size(); ++v) rest[v] += added * dv[v];
    cur[i] = 0;
  };
  go(go, 0);
  std::sort(out.begin(), out.end());
  return out;
}

IsoClass decompose(const HallContext& ctx, const Representation& x) { return ctx.to_iso_class(ctx.decompose(x)); }

std::uint64_t hall_number(const HallContext& ctx, const Representation& l, const Multiplicities& m,
                          const Multiplicities& n) {
  const auto& h = ctx.hom_matrix();
  const std::size_t k = ctx.indecomposables().size();
  auto profile = [&](const Multiplicities& x) {
    std::vector<std::size_t> p(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) p[j] += x[i] * static_cast<std::size_t>(h(j, i));
    return p;
  };
  const auto pm = profile(m);
  const auto pn = profile(n);
  const auto dm = ctx.dimension_vector(m);
  const auto dn = ctx.dimension_vector(n);
  for (std::size_t v = 0; v < dm.size(); ++v)
    if (dm[v] + dn[v] != l.dims[v]) return 0;

  std::uint64_t count = 0;
  for (const auto& u : enumerate_submodules(l, dn, ctx.dim_cap()))
    if (ctx.hom_profile(subrep(l, u)) == pn && ctx.hom_profile(quotient(l, u)) == pm) ++count;
  return count;
}

std::uint64_t hall_number(const HallContext& ctx, const Multiplicities& l, const Multiplicities& m,
                          const Multiplicities& n) {
  const auto dl = ctx.dimension_vector(l);
  const auto dm = ctx.dimension_vector(m);
  const auto dn = ctx.dimension_vector(n);
  for (std::size_t v = 0; v < dl.size(); ++v)
    if (dm[v] + dn[v] != dl[v]) return 0;
  return hall_number(ctx, ctx.realize(l), m, n);
}

HallPolynomialResult hall_polynomial(const Presentation& p, const IsoClass& l, const IsoClass& m, const IsoClass& n,
                                     const std::vector<std::uint32_t>& fit_primes,
                                     const std::vector<std::uint32_t>& check_primes, std::size_t dim_cap) {
  if (fit_primes.empty()) throw DomainError("no fit primes given");
  std::vector<std::uint32_t> all = fit_primes;
  all.insert(all.end(), check_primes.begin(), check_primes.end());
  if (std::set<std::uint32_t>(all.begin(), all.end()).size() != all.size())
    throw DomainError("fit and check primes must be distinct");

  std::vector<std::future<std::uint64_t>> jobs;
  for (std::uint32_t q : all)
    jobs.push_back(std::async(std::launch::async, [&, q] {
      HallContext ctx(p, q, dim_cap);
      return hall_number(ctx, ctx.to_multiplicities(l), ctx.to_multiplicities(m), ctx.to_multiplicities(n));
    }));
  std::vector<std::uint64_t> vals;
  for (auto& j : jobs) vals.push_back(j.get());

  HallPolynomialResult res;
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    res.values[all[i]] = vals[i];
    if (i < fit_primes.size()) pts.emplace_back(BigInt(all[i]), BigInt(vals[i]));
  }
  res.polynomial = lagrange_fit(pts);
  for (std::size_t i = fit_primes.size(); i < all.size(); ++i) {
    if (res.polynomial.evaluate(BigInt(all[i])) != BigInt(vals[i]))
      throw DomainError("insufficient sample degree: fitted polynomial " + to_string(res.polynomial) +
                        " disagrees at q = " + std::to_string(all[i]) + "; supply more primes");
    res.verified_at.push_back(all[i]);
  }
  return res;
}

std::map<Multiplicities, std::uint64_t> hall_product(const HallContext& ctx, const Multiplicities& m,
                                                     const Multiplicities& n) {
  auto d = ctx.dimension_vector(m);
  const auto dn = ctx.dimension_vector(n);
  for (std::size_t v = 0; v < d.size(); ++v) d[v] += dn[v];
  std::map<Multiplicities, std::uint64_t> out;
  for (const auto& l : ctx.modules_of_dimension(d))
    if (auto f = hall_number(ctx, l, m, n)) out[l] = f;
  return out;
}

VanishingReport one_sided_vanishing_report(const HallContext& ctx, std::size_t dim_cap) {
  VanishingReport rep;
  const auto& dv = ctx.dimension_vectors();
  const std::size_t k = dv.size();
  auto total = [](const DimensionVector& d) { return std::accumulate(d.begin(), d.end(), std::size_t{0}); };
  for (std::size_t mi = 0; mi < k; ++mi) {
    if (total(dv[mi]) > dim_cap) continue;
    Multiplicities m(k, 0);
    m[mi] = 1;
    for (std::size_t li = 0; li < k; ++li) {
      DimensionVector diff(dv[mi].size());
      bool ok = true;
      for (std::size_t v = 0; v < diff.size() && ok; ++v) {
        ok = dv[li][v] <= dv[mi][v];
        if (ok) diff[v] = dv[mi][v] - dv[li][v];
      }
      if (!ok || total(diff) == 0) continue;
      Multiplicities l(k, 0);
      l[li] = 1;
      for (const auto& n : ctx.modules_of_dimension(diff)) {
        ++rep.triples_checked;
        const auto f_nl = hall_number(ctx, m, n, l);
        const auto f_ln = hall_number(ctx, m, l, n);
        if (f_nl && f_ln) rep.violations.push_back({mi, li, n, f_nl, f_ln});
      }
    }
  }
  return rep;
}

std::string format_iso_class(const Quiver& q, const IsoClass& c) {
  if (c.parts.empty()) return "0";
  std::string s;
  for (const auto& [w, k] : c.parts) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += format_string(q, w);
  }
  return s;
}

IsoClass parse_iso_class(const Presentation& p, std::string_view text) {
  const Quiver& q = p.quiver();
  IsoClass c;
  const auto all = trim(text);
  if (all == "0") return c;
  if (all.empty()) throw ParseError("empty module expression");
  std::size_t pos = 0;
  while (pos <= all.size()) {
    std::size_t next = all.find('+', pos);
    if (next == std::string::npos) next = all.size();
    auto term = trim(std::string_view(all).substr(pos, next - pos));
    std::size_t mult = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      const auto num = trim(std::string_view(term).substr(0, star));
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(ch); }))
        throw ParseError("bad multiplicity in '" + term + "'");
      mult = std::stoul(num);
      term = trim(std::string_view(term).substr(star + 1));
    }
    if (term.empty()) throw ParseError("empty term in module expression");
    const auto w = parse_string(q, term);
    if (!is_string(p, w)) throw ParseError("'" + term + "' is not a string");
    const auto cw = canonical_string(q, w);
    auto it = std::find_if(c.parts.begin(), c.parts.end(), [&](const auto& e) { return e.first == cw; });
    if (it == c.parts.end())
      c.parts.emplace_back(cw, mult);
    else
      it->second += mult;
    pos = next + 1;
  }
  std::erase_if(c.parts, [](const auto& e) { return e.second == 0; });
  std::sort(c.parts.begin(), c.parts.end(),
            [&](const auto& a, const auto& b) { return compare_words(q, a.first, b.first) < 0; });
  return c;
}

}  // namespace gentle
