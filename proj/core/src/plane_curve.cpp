#include "wiman/plane_curve.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace wiman {

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

BiPoly BiPoly::dehomogenize(const TriPoly& F, unsigned chart) {
  BiPoly r(F.field());
  unsigned v0 = chart == 0 ? 1 : 0;
  unsigned v1 = chart == 2 ? 1 : 2;
  for (const auto& [m, c] : F.terms()) r.add_term(m[v0], m[v1], c);
  return r;
}

void BiPoly::add_term(unsigned a, unsigned b, const Fe& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = t_.emplace(key, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Fe BiPoly::eval(const Fe& u, const Fe& v) const {
  Fe acc = f_.zero();
  for (const auto& [m, c] : t_) acc = acc + c * u.pow(m.first) * v.pow(m.second);
  return acc;
}

BiPoly BiPoly::partial(unsigned axis) const {
  BiPoly r(f_);
  for (const auto& [m, c] : t_) {
    unsigned e = axis == 0 ? m.first : m.second;
    if (e == 0) continue;
    Fe nc = c * f_.from_int(static_cast<i64>(e));
    if (axis == 0)
      r.add_term(m.first - 1, m.second, nc);
    else
      r.add_term(m.first, m.second - 1, nc);
  }
  return r;
}

BiPoly BiPoly::translate(const Fe& a, const Fe& b) const {
  // binomial expansion; degrees stay small enough for direct work
  unsigned maxu = 0, maxv = 0;
  for (const auto& [m, c] : t_) {
    maxu = std::max(maxu, m.first);
    maxv = std::max(maxv, m.second);
  }
  std::vector<std::vector<Fe>> binu(maxu + 1), binv(maxv + 1);
  auto pascal = [&](std::vector<std::vector<Fe>>& B, unsigned n) {
    for (unsigned i = 0; i <= n; ++i) {
      B[i].assign(i + 1, f_.zero());
      B[i][0] = f_.one();
      for (unsigned j = 1; j <= i; ++j)
        B[i][j] = (j <= i - 1 ? B[i - 1][j] : f_.zero()) + B[i - 1][j - 1];
    }
  };
  pascal(binu, maxu);
  pascal(binv, maxv);
  std::vector<Fe> pa(maxu + 1), pb(maxv + 1);
  pa[0] = f_.one();
  for (unsigned i = 1; i <= maxu; ++i) pa[i] = pa[i - 1] * a;
  pb[0] = f_.one();
  for (unsigned i = 1; i <= maxv; ++i) pb[i] = pb[i - 1] * b;
  BiPoly r(f_);
  for (const auto& [m, c] : t_) {
    for (unsigned i = 0; i <= m.first; ++i) {
      Fe cu = c * binu[m.first][i] * pa[m.first - i];
      for (unsigned j = 0; j <= m.second; ++j)
        r.add_term(i, j, cu * binv[m.second][j] * pb[m.second - j]);
    }
  }
  return r;
}

unsigned BiPoly::min_total_degree() const {
  if (t_.empty()) throw domain_error("min degree of the zero polynomial");
  unsigned best = UINT32_MAX;
  for (const auto& [m, c] : t_) best = std::min(best, m.first + m.second);
  return best;
}

unsigned BiPoly::degree_in(unsigned axis) const {
  unsigned d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, axis == 0 ? m.first : m.second);
  return d;
}

std::vector<Fe> BiPoly::homogeneous_part(unsigned m) const {
  std::vector<Fe> out(m + 1, f_.zero());
  for (const auto& [mo, c] : t_)
    if (mo.first + mo.second == m) out[mo.first] = c;
  return out;
}

std::vector<Poly> BiPoly::as_v_polys() const {
  unsigned dv = degree_in(1);
  std::vector<std::vector<Fe>> rows(dv + 1);
  unsigned du = degree_in(0);
  for (auto& r : rows) r.assign(du + 1, f_.zero());
  for (const auto& [m, c] : t_) rows[m.second][m.first] = c;
  std::vector<Poly> out;
  out.reserve(dv + 1);
  for (auto& r : rows) out.emplace_back(f_, std::move(r));
  return out;
}

Poly BiPoly::eval_u(const Fe& u) const {
  unsigned dv = degree_in(1);
  std::vector<Fe> c(dv + 1, f_.zero());
  for (const auto& [m, co] : t_) c[m.second] = c[m.second] + co * u.pow(m.first);
  return Poly(f_, std::move(c));
}

Series BiPoly::subst(const Series& u, const Series& v) const {
  unsigned n = std::min(u.trunc(), v.trunc());
  unsigned du = degree_in(0), dv = degree_in(1);
  std::vector<Series> pu, pv;
  pu.reserve(du + 1);
  pv.reserve(dv + 1);
  Series one(f_, n);
  one.set(0, f_.one());
  pu.push_back(one);
  for (unsigned i = 1; i <= du; ++i) pu.push_back(pu.back() * u);
  pv.push_back(one);
  for (unsigned i = 1; i <= dv; ++i) pv.push_back(pv.back() * v);
  Series acc(f_, n);
  for (const auto& [m, c] : t_) acc = acc + (pu[m.first] * pv[m.second]) * c;
  return acc;
}

BiPoly BiPoly::map_coeffs(const FieldHom& h) const {
  BiPoly r(h.dst);
  for (const auto& [m, c] : t_) r.add_term(m.first, m.second, h(c));
  return r;
}

// ---------------------------------------------------------------------------

PlaneCurve::PlaneCurve(TriPoly F) : form(std::move(F)) {
  if (form.is_zero()) throw domain_error("plane curve needs a nonzero form");
}

namespace {

// Determinant of a square matrix of polynomials by fraction-free Bareiss
// elimination (divisions are exact in F[x]).
Poly poly_mat_det(std::vector<std::vector<Poly>> m, const Field& F) {
  size_t n = m.size();
  if (n == 0) return Poly::constant(F.one());
  int sign = 1;
  Poly prev = Poly::constant(F.one());
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Poly(F);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = Poly(F);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? det * (-F.one()) : det;
}

Poly resultant_in_v(const BiPoly& A, const BiPoly& B) {
  const Field& F = A.field();
  auto av = A.as_v_polys();
  auto bv = B.as_v_polys();
  size_t da = av.size() - 1, db = bv.size() - 1;
  size_t n = da + db;
  std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(F)));
  for (size_t r = 0; r < db; ++r)
    for (size_t i = 0; i <= da; ++i) syl[r][r + i] = av[da - i];
  for (size_t r = 0; r < da; ++r)
    for (size_t i = 0; i <= db; ++i) syl[db + r][r + i] = bv[db - i];
  return poly_mat_det(std::move(syl), F);
}

Poly lift_poly(const Poly& f, const FieldHom& h) {
  std::vector<Fe> c;
  c.reserve(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) c.push_back(h(f.coeff(static_cast<size_t>(i))));
  return Poly(h.dst, std::move(c));
}

// Precomputed elimination data for one curve, chart z = 1 plus the z = 0 line.
struct SingularScan {
  BiPoly f, fx, fy, fz;   // over the base field, chart 2 (variables x, y)
  Poly rx;                // nonzero poly over base vanishing at all singular x
  Poly ginf;              // gcd of the four univariates along [x:1:0]
  bool corner;            // [1:0:0] singular?
};

Poly gcd4(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  return Poly::gcd(Poly::gcd(a, b), Poly::gcd(c, d));
}

SingularScan build_scan(const PlaneCurve& C) {
  const Field& B = C.base_field();
  if (C.degree() < 2) throw domain_error("singular locus needs degree >= 2");
  TriPoly FX = C.form.partial(0), FY = C.form.partial(1), FZ = C.form.partial(2);
  if (FX.is_zero() || FY.is_zero() || FZ.is_zero())
    throw unsupported_error("a partial derivative vanishes identically (characteristic divides too much); unsupported input");
  SingularScan s;
  s.f = BiPoly::dehomogenize(C.form, 2);
  s.fx = BiPoly::dehomogenize(FX, 2);
  s.fy = BiPoly::dehomogenize(FY, 2);
  s.fz = BiPoly::dehomogenize(FZ, 2);

  unsigned dyx = s.fx.degree_in(1), dyy = s.fy.degree_in(1);
  if (dyx == 0 && dyy == 0) {
    // both partials free of y: common x-roots only
    s.rx = Poly::gcd(s.fx.as_v_polys()[0], s.fy.as_v_polys()[0]);
  } else if (dyx == 0) {
    s.rx = s.fx.as_v_polys()[0];
  } else if (dyy == 0) {
    s.rx = s.fy.as_v_polys()[0];
  } else {
    s.rx = resultant_in_v(s.fx, s.fy);
    if (s.rx.is_zero()) throw unsupported_error("degenerate elimination: resultant vanished identically");
  }

  auto at_inf = [&](const TriPoly& G) {
    // G(x, 1, 0) as a univariate in x
    std::vector<Fe> c(G.degree() + 1, B.zero());
    for (const auto& [m, co] : G.terms())
      if (m[2] == 0) c[m[0]] = co;
    return Poly(B, std::move(c));
  };
  s.ginf = gcd4(at_inf(C.form), at_inf(FX), at_inf(FY), at_inf(FZ));
  if (s.ginf.is_zero())
    throw unsupported_error("degenerate elimination: the line at infinity lies in the singular system");

  Fe x1 = B.one(), x0 = B.zero();
  s.corner = C.form.eval(x1, x0, x0).is_zero() && FX.eval(x1, x0, x0).is_zero() &&
             FY.eval(x1, x0, x0).is_zero() && FZ.eval(x1, x0, x0).is_zero();
  return s;
}

// Common y-locus at a fixed x over K (scan data lifted through h).
Poly y_gcd_at(const SingularScan& s, const FieldHom& h, const Fe& x0) {
  BiPoly f = s.f.map_coeffs(h), fx = s.fx.map_coeffs(h), fy = s.fy.map_coeffs(h),
         fz = s.fz.map_coeffs(h);
  return gcd4(f.eval_u(x0), fx.eval_u(x0), fy.eval_u(x0), fz.eval_u(x0));
}

unsigned frobenius_orbit_size(const ProjPoint& P, u64 p, unsigned bound) {
  ProjPoint Q = P.frobenius(p);
  unsigned e = 1;
  while (!(Q == P)) {
    Q = Q.frobenius(p);
    if (++e > bound) throw integrity_error("frobenius orbit exceeded the field degree");
  }
  return e;
}

SingularPoint analyze_point(const PlaneCurve& C, const ProjPoint& P) {
  const Field K = P.field();
  FieldHom h = embed_hom(C.base_field(), K);
  unsigned chart = P.chart();
  BiPoly f = BiPoly::dehomogenize(C.form.map_coeffs(h), chart);
  unsigned v0 = chart == 0 ? 1 : 0;
  unsigned v1 = chart == 2 ? 1 : 2;
  BiPoly local = f.translate(P[v0], P[v1]);
  if (!local.eval(K.zero(), K.zero()).is_zero())
    throw integrity_error("claimed singular point does not lie on the curve");
  unsigned m = local.min_total_degree();
  if (m < 2) throw integrity_error("claimed singular point has multiplicity < 2");
  SingularPoint sp{P, m, false, frobenius_orbit_size(P, K.p(), K.k()), TangentCone{chart, local.homogeneous_part(m)}};
  // squarefree tangent cone <=> ordinary
  const auto& bin = sp.cone.binary;
  unsigned s = 0;
  for (unsigned i = 0; i <= m; ++i)
    if (!bin[i].is_zero()) s = i;
  std::vector<Fe> chat(bin.begin(), bin.begin() + s + 1);
  Poly ch(K, std::move(chat));
  bool sqfree = (m - s <= 1) && Poly::gcd(ch, ch.derivative()).degree() == 0;
  sp.ordinary = sqfree;
  return sp;
}

std::vector<ProjPoint> rational_singular_points(const PlaneCurve& C, const SingularScan& s, const Field& K) {
  const Field& B = C.base_field();
  FieldHom h = embed_hom(B, K);
  std::vector<ProjPoint> pts;
  if (s.rx.degree() >= 1) {
    for (const Fe& x0 : roots(lift_poly(s.rx, h))) {
      Poly g = y_gcd_at(s, h, x0);
      if (g.degree() < 1) continue;
      for (const Fe& y0 : roots(g)) pts.emplace_back(x0, y0, K.one());
    }
  }
  if (s.ginf.degree() >= 1)
    for (const Fe& x0 : roots(lift_poly(s.ginf, h))) pts.emplace_back(x0, K.one(), K.zero());
  if (s.corner) pts.emplace_back(K.one(), K.zero(), K.zero());
  return pts;
}

}  // namespace

std::vector<SingularPoint> singular_locus(const PlaneCurve& C, unsigned extension_cap) {
  const Field& B = C.base_field();
  SingularScan scan = build_scan(C);
  std::vector<SingularPoint> locus;

  auto field_for = [&](unsigned rel_degree) { return Field::gf(B.p(), B.k() * rel_degree); };

  if (scan.rx.degree() >= 1) {
    for (const auto& [mi, mult] : factor_univariate(scan.rx).factors) {
      unsigned a = static_cast<unsigned>(mi.degree());
      (void)mult;
      if (a > extension_cap) {
        // the factor might still be spurious; decide over B[x]/(mi) when possible
        if (B.k() != 1)
          throw capped_error("singular x-coordinate needs extension degree " + std::to_string(a) +
                             " over a non-prime base; cap is " + std::to_string(extension_cap));
        std::vector<u32> mod;
        mod.reserve(a + 1);
        for (unsigned i = 0; i <= a; ++i) mod.push_back(static_cast<u32>(mi.coeff(i).lift()));
        Field Ka = Field::with_modulus(B.p(), std::move(mod));
        FieldHom h = embed_hom(B, Ka);
        Poly g = y_gcd_at(scan, h, Ka.gen());
        if (g.degree() >= 1)
          throw capped_error("singular point requires extension degree " + std::to_string(a) +
                             " > cap " + std::to_string(extension_cap));
        continue;
      }
      Field Ka = field_for(a);
      FieldHom hBa = embed_hom(B, Ka);
      auto xs = roots(lift_poly(mi, hBa));
      if (xs.size() != a) throw integrity_error("irreducible factor did not split in its own field");
      for (const Fe& x0 : xs) {
        Poly g = y_gcd_at(scan, hBa, x0);
        if (g.degree() < 1) continue;
        for (const auto& [hy, hmult] : factor_univariate(g).factors) {
          (void)hmult;
          unsigned b = static_cast<unsigned>(hy.degree());
          if (a * b > extension_cap)
            throw capped_error("singular point requires extension degree " + std::to_string(a * b) +
                               " > cap " + std::to_string(extension_cap));
          Field Kab = field_for(a * b);
          FieldHom hab = embed_hom(Ka, Kab);
          for (const Fe& y0 : roots(lift_poly(hy, hab)))
            locus.push_back(analyze_point(C, ProjPoint(hab(x0), y0, Kab.one())));
        }
      }
    }
  }

  if (scan.ginf.degree() >= 1) {
    for (const auto& [hy, hmult] : factor_univariate(scan.ginf).factors) {
      (void)hmult;
      unsigned a = static_cast<unsigned>(hy.degree());
      if (a > extension_cap)
        throw capped_error("singular point at infinity requires extension degree " + std::to_string(a) +
                           " > cap " + std::to_string(extension_cap));
      Field Ka = field_for(a);
      FieldHom hBa = embed_hom(B, Ka);
      for (const Fe& x0 : roots(lift_poly(hy, hBa)))
        locus.push_back(analyze_point(C, ProjPoint(x0, Ka.one(), Ka.zero())));
    }
  }
  if (scan.corner) locus.push_back(analyze_point(C, ProjPoint(B.one(), B.zero(), B.zero())));
  return locus;
}

u64 genus_nodal(const PlaneCurve& C, unsigned extension_cap) {
  auto locus = singular_locus(C, extension_cap);
  u64 d = C.degree();
  u64 g = (d - 1) * (d - 2) / 2;
  u64 drop = 0;
  for (const auto& sp : locus) {
    if (!sp.ordinary)
      throw unsupported_error("non-ordinary singularity at " + sp.point.str() +
                              "; the nodal genus formula does not apply");
    drop += static_cast<u64>(sp.multiplicity) * (sp.multiplicity - 1) / 2;
  }
  if (drop > g)
    throw domain_error("nodal genus would be negative; the curve is reducible");
  return g - drop;
}

std::vector<std::array<Fe, 2>> tangent_directions_over(const SingularPoint& sp, const Field& K) {
  FieldHom h = embed_hom(sp.point.field(), K);
  unsigned m = sp.multiplicity;
  std::vector<Fe> bin;
  bin.reserve(sp.cone.binary.size());
  for (const auto& c : sp.cone.binary) bin.push_back(h(c));
  unsigned s = 0;
  for (unsigned i = 0; i <= m; ++i)
    if (!bin[i].is_zero()) s = i;
  std::vector<std::array<Fe, 2>> dirs;
  if (s < m) dirs.push_back({K.one(), K.zero()});  // the v = 0 factor
  Poly ch(K, std::vector<Fe>(bin.begin(), bin.begin() + s + 1));
  for (const Fe& tau : roots(ch)) dirs.push_back({tau, K.one()});
  return dirs;
}

// ---------------------------------------------------------------------------
// Point counting
// ---------------------------------------------------------------------------

namespace {

// Affine sweep over chart z = 1 with per-row Horner evaluation.
u64 sweep_affine(const BiPoly& g, const Field& K, u64 x_begin, u64 x_end, bool swap_xy,
                 const std::function<void(const Fe&, const Fe&)>* sink) {
  unsigned du = g.degree_in(swap_xy ? 1 : 0);
  unsigned dv = g.degree_in(swap_xy ? 0 : 1);
  // grid[j][i]: coefficient of outer^i inner^j
  std::vector<std::vector<Fe>> grid(dv + 1, std::vector<Fe>(du + 1, K.zero()));
  for (const auto& [m, c] : g.terms()) {
    unsigned i = swap_xy ? m.second : m.first;
    unsigned j = swap_xy ? m.first : m.second;
    grid[j][i] = c;
  }
  u64 zeros = 0;
  std::vector<Fe> row(dv + 1, K.zero());
  for (u64 xi = x_begin; xi < x_end; ++xi) {
    Fe x = K.element_by_index(xi);
    for (unsigned j = 0; j <= dv; ++j) {
      Fe acc = K.zero();
      for (unsigned i = du + 1; i-- > 0;) acc = acc * x + grid[j][i];
      row[j] = acc;
    }
    for (u64 yi = 0; yi < K.size(); ++yi) {
      Fe y = K.element_by_index(yi);
      Fe acc = K.zero();
      for (unsigned j = dv + 1; j-- > 0;) acc = acc * y + row[j];
      if (acc.is_zero()) {
        ++zeros;
        if (sink) {
          if (swap_xy)
            (*sink)(y, x);
          else
            (*sink)(x, y);
        }
      }
    }
  }
  return zeros;
}

u64 curve_zeros(const PlaneCurve& C, const Field& K, const CountOptions& opt,
                const std::function<void(const ProjPoint&)>* sink) {
  FieldHom h = embed_hom(C.base_field(), K);
  TriPoly FK = C.form.map_coeffs(h);
  BiPoly g = BiPoly::dehomogenize(FK, 2);
  u64 zeros = 0;
  std::function<void(const Fe&, const Fe&)> affine_sink;
  const std::function<void(const Fe&, const Fe&)>* sp = nullptr;
  if (sink) {
    affine_sink = [&](const Fe& x, const Fe& y) { (*sink)(ProjPoint(x, y, K.one())); };
    sp = &affine_sink;
  }
  unsigned stripes = std::max(1u, opt.stripes);
  u64 n = K.size();
  for (unsigned s = 0; s < stripes; ++s) {
    u64 lo = n * s / stripes, hi = n * (s + 1) / stripes;
    zeros += sweep_affine(g, K, lo, hi, opt.swap_xy, sp);
  }
  // line at infinity: [x:1:0] and [1:0:0]
  std::vector<Fe> cinf(C.degree() + 1, K.zero());
  for (const auto& [m, c] : FK.terms())
    if (m[2] == 0) cinf[m[0]] = c;
  Poly pinf(K, std::move(cinf));
  if (pinf.is_zero()) throw unsupported_error("the line at infinity is a component of the curve");
  for (const Fe& x0 : roots(pinf)) {
    ++zeros;
    if (sink) (*sink)(ProjPoint(x0, K.one(), K.zero()));
  }
  if (FK.eval(K.one(), K.zero(), K.zero()).is_zero()) {
    ++zeros;
    if (sink) (*sink)(ProjPoint(K.one(), K.zero(), K.zero()));
  }
  return zeros;
}

}  // namespace

std::vector<ProjPoint> rational_curve_points(const PlaneCurve& C, const Field& K) {
  std::vector<ProjPoint> out;
  std::function<void(const ProjPoint&)> sink = [&](const ProjPoint& P) { out.push_back(P); };
  curve_zeros(C, K, CountOptions{}, &sink);
  return out;
}

std::vector<SingularPoint> rational_singular_over(const PlaneCurve& C, const Field& K) {
  SingularScan scan = build_scan(C);
  std::vector<SingularPoint> out;
  for (const auto& P : rational_singular_points(C, scan, K)) out.push_back(analyze_point(C, P));
  return out;
}

PlaceCensus count_places_deg1(const PlaneCurve& C, const Field& K, const CountOptions& opt) {
  if (K.p() != C.base_field().p() || K.k() % C.base_field().k() != 0)
    throw domain_error("counting field must contain the curve's base field");
  SingularScan scan = build_scan(C);
  auto sing = rational_singular_points(C, scan, K);
  PlaceCensus census;
  census.field = K;
  u64 zeros = curve_zeros(C, K, opt, nullptr);
  u64 branch_total = 0;
  for (const auto& P : sing) {
    SingularPoint sp = analyze_point(C, P);
    if (!sp.ordinary)
      throw unsupported_error("non-ordinary singularity at " + P.str() + "; place counting unsupported");
    u64 branches = tangent_directions_over(sp, K).size();
    census.branch_counts.emplace_back(P, branches);
    branch_total += branches;
  }
  census.smooth_points = zeros - sing.size();
  census.total = census.smooth_points + branch_total;
  return census;
}

MaximalityVerdict maximality_verdict(const PlaneCurve& C, u64 p) {
  if (C.base_field().p() != p || C.base_field().k() != 1)
    throw domain_error("maximality verdict expects a curve over the prime field F_p");
  MaximalityVerdict v;
  v.p = p;
  v.genus = genus_nodal(C);
  v.places = count_places_deg1(C, Field::gf(p, 2)).total;
  v.bound = p * p + 1 + 2 * v.genus * p;
  v.maximal = v.places == v.bound;
  return v;
}

// ---------------------------------------------------------------------------
// Bounded factor search
// ---------------------------------------------------------------------------

namespace {

std::vector<Mono> monomials_of_degree(unsigned e) {
  std::vector<Mono> out;
  for (unsigned a = 0; a <= e; ++a)
    for (unsigned b = 0; b + a <= e; ++b) out.push_back({e - a - b, b, a});
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Restriction of a form to the parametrized line (t, c, 1).
Poly restrict_line(const TriPoly& F, const Fe& c) {
  const Field& K = F.field();
  std::vector<Fe> out(F.degree() + 1, K.zero());
  for (const auto& [m, co] : F.terms()) out[m[0]] = out[m[0]] + co * c.pow(m[1]);
  return Poly(K, std::move(out));
}

bool divides_poly(const Poly& d, const Poly& f) {
  if (d.degree() <= 0) return true;
  return (f % d).is_zero();
}

}  // namespace

std::optional<TriPoly> find_small_factor(const PlaneCurve& C, unsigned max_deg, u64 candidate_budget) {
  if (max_deg < 1 || max_deg > 3) throw domain_error("factor search supports degrees 1..3");
  const Field& B = C.base_field();
  if (B.k() != 1) throw domain_error("factor search expects a curve over a prime field");
  u64 spent = 0;
  const u64 sat = candidate_budget + 2;
  auto sat_mul = [&](u64 a, u64 b) { return (b != 0 && a > sat / b) ? sat : a * b; };
  for (unsigned e = 1; e <= max_deg && e < C.degree(); ++e) {
    auto monos = monomials_of_degree(e);
    size_t M = monos.size();
    for (unsigned ext = 1; ext <= 2; ++ext) {
      Field K = Field::gf(B.p(), ext);
      FieldHom h = embed_hom(B, K);
      TriPoly FK = C.form.map_coeffs(h);
      std::array<Poly, 3> flines;
      std::array<Fe, 3> cs = {K.from_int(0), K.from_int(1), K.from_int(2)};
      for (int i = 0; i < 3; ++i) flines[static_cast<size_t>(i)] = restrict_line(FK, cs[static_cast<size_t>(i)]);
      // projectively normalized candidates: leading nonzero coefficient is 1
      for (size_t lead = 0; lead < M; ++lead) {
        u64 tail_count = 1;
        for (size_t i = lead + 1; i < M; ++i) tail_count = sat_mul(tail_count, K.size());
        for (u64 idx = 0; idx < tail_count; ++idx) {
          if (++spent > candidate_budget)
            throw capped_error("factor search budget " + std::to_string(candidate_budget) +
                               " candidates exceeded at degree " + std::to_string(e) + " over " + K.str());
          TriPoly G(K, e);
          G.add_term(monos[lead], K.one());
          u64 rest = idx;
          for (size_t i = lead + 1; i < M; ++i) {
            u64 digit = rest % K.size();
            rest /= K.size();
            if (digit) G.add_term(monos[i], K.element_by_index(digit));
          }
          bool plausible = true;
          for (int i = 0; i < 3 && plausible; ++i)
            plausible = divides_poly(restrict_line(G, cs[static_cast<size_t>(i)]), flines[static_cast<size_t>(i)]);
          if (!plausible) continue;
          if (TriPoly::exact_divide(FK, G)) return G;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace wiman
