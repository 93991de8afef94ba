#include "wiman/places.hpp"

#include <algorithm>

namespace wiman {

ProjPoint CurveMap::apply(const ProjPoint& P) const {
  Fe a = forms[0].eval(P[0], P[1], P[2]);
  Fe b = forms[1].eval(P[0], P[1], P[2]);
  Fe c = forms[2].eval(P[0], P[1], P[2]);
  return ProjPoint(a, b, c);  // throws on the zero triple
}

bool CurveMap::is_base_point(const ProjPoint& P) const {
  for (const auto& g : forms)
    if (!g.eval(P[0], P[1], P[2]).is_zero()) return false;
  return true;
}

TriPoly verify_preserves_curve(const PlaneCurve& C, const CurveMap& M) {
  TriPoly image = TriPoly::compose(C.form, M.forms[0], M.forms[1], M.forms[2]);
  auto q = TriPoly::exact_divide(image, C.form);
  if (!q)
    throw integrity_error("map " + M.name + " does not preserve the curve (transcription bug?)");
  return *q;
}

CurveMap lift_map(const CurveMap& M, const FieldHom& h) {
  CurveMap out;
  out.name = M.name;
  for (unsigned i = 0; i < 3; ++i) out.forms[i] = M.forms[i].map_coeffs(h);
  return out;
}

namespace {

Series subst_form(const TriPoly& g, const std::array<Series, 3>& P) {
  unsigned n = std::min({P[0].trunc(), P[1].trunc(), P[2].trunc()});
  const Field& K = P[0].field();
  unsigned d = g.degree();
  std::array<std::vector<Series>, 3> pw;
  for (unsigned v = 0; v < 3; ++v) {
    Series one(K, n);
    one.set(0, K.one());
    pw[v].push_back(one);
    for (unsigned e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * P[v]);
  }
  Series acc(K, n);
  for (const auto& [m, c] : g.terms()) acc = acc + (pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]]) * c;
  return acc;
}

// Solve a branch of f(u,v) = 0 through the origin with the given tangent
// direction; coefficients correct through order T. Returns (u(s), v(s)).
std::pair<Series, Series> solve_branch(const BiPoly& f, const std::array<Fe, 2>& dir, unsigned T) {
  const Field& K = f.field();
  bool param_v = !dir[1].is_zero();  // parametrize by the coordinate carrying
                                     // a nonzero tangent component
  unsigned Tw = T + 3;
  Series s_var(K, Tw);
  s_var.set(1, K.one());
  Series known(K, Tw);
  if (param_v) known.set(1, dir[0] / dir[1]);  // u = (du/dv) s + ...

  BiPoly df = f.partial(param_v ? 0u : 1u);
  int guard = 0;
  for (;;) {
    Series u = param_v ? known : s_var;
    Series v = param_v ? s_var : known;
    Series R = f.subst(u, v);
    int l = R.ord();
    if (l < 0 || l > static_cast<int>(T) + 1) break;
    Series S = df.subst(u, v);
    int nu = S.ord();
    if (nu < 0 || l <= nu)
      throw integrity_error("branch solver stalled (is the point an ordinary singularity?)");
    unsigned m = static_cast<unsigned>(l - nu);
    Fe c = -(R.at(static_cast<unsigned>(l)) / S.at(static_cast<unsigned>(nu)));
    known.set(m, known.at(m) + c);
    if (++guard > 4 * static_cast<int>(Tw) + 16)
      throw integrity_error("branch solver failed to converge");
  }
  Series u = param_v ? known : s_var;
  Series v = param_v ? s_var : known;
  return {u, v};
}

std::array<Series, 3> projective_param(const ProjPoint& P, const Series& u, const Series& v) {
  const Field& K = u.field();
  unsigned n = u.trunc();
  unsigned chart = P.chart();
  unsigned v0 = chart == 0 ? 1 : 0;
  unsigned v1 = chart == 2 ? 1 : 2;
  std::array<Series, 3> out{Series(K, n), Series(K, n), Series(K, n)};
  out[chart].set(0, K.one());
  out[v0] = u;
  out[v0].set(0, u.at(0) + P[v0]);
  out[v1] = v;
  out[v1].set(0, v.at(0) + P[v1]);
  return out;
}

BiPoly local_form(const PlaneCurve& C, const ProjPoint& P) {
  FieldHom h = embed_hom(C.base_field(), P.field());
  unsigned chart = P.chart();
  unsigned v0 = chart == 0 ? 1 : 0;
  unsigned v1 = chart == 2 ? 1 : 2;
  return BiPoly::dehomogenize(C.form.map_coeffs(h), chart).translate(P[v0], P[v1]);
}

std::array<Series, 3> branch_param(const PlaneCurve& C, const TriPoly& formK, const ProjPoint& P,
                                   const std::array<Fe, 2>& dir, unsigned T) {
  BiPoly local = local_form(C, P);
  auto [u, v] = solve_branch(local, dir, T);
  auto param = projective_param(P, u, v);
  int o = subst_form(formK, param).ord();
  if (o >= 0 && o <= static_cast<int>(T) + 1)
    throw integrity_error("branch parametrization does not satisfy the curve to order " +
                          std::to_string(T));
  return param;
}

std::array<Fe, 2> smooth_tangent(const BiPoly& local) {
  auto lin = local.homogeneous_part(1);  // lin[i]: coefficient of u^i v^(1-i)
  Fe Lv = lin[0], Lu = lin[1];
  if (Lu.is_zero() && Lv.is_zero())
    throw integrity_error("expected a smooth point but the linear part vanishes");
  return {Lv, -Lu};  // direction of the tangent line Lu*u + Lv*v = 0
}

}  // namespace

PlaceSet build_places(const PlaneCurve& C, const Field& K, std::span<const CurveMap> validate,
                      const BuildPlacesOptions& opt) {
  PlaceSet ps;
  ps.curve = C;
  ps.field = K;
  ps.census = count_places_deg1(C, K);
  if (ps.census.total <= opt.min_places)
    throw capped_error("only " + std::to_string(ps.census.total) +
                       " degree-1 places; raise the extension degree (need > " +
                       std::to_string(opt.min_places) + ")");

  FieldHom hK = embed_hom(C.base_field(), K);
  TriPoly formK = C.form.map_coeffs(hK);
  std::vector<CurveMap> vmaps;
  vmaps.reserve(validate.size());
  for (const auto& M : validate) vmaps.push_back(lift_map(M, hK));

  auto analyzed = rational_singular_over(C, K);
  std::unordered_map<std::string, const SingularPoint*> sing_at;
  for (const auto& sp : analyzed) sing_at.emplace(sp.point.key(), &sp);

  for (const auto& P : rational_curve_points(C, K)) {
    if (sing_at.count(P.key())) continue;
    Place pl;
    pl.point = P;
    pl.chart = P.chart();
    ps.smooth_at.emplace(P.key(), static_cast<u32>(ps.places.size()));
    ps.places.push_back(std::move(pl));
  }

  for (const auto& sp : analyzed) {
    if (sp.multiplicity != 2)
      throw unsupported_error("place construction supports nodes only; multiplicity " +
                              std::to_string(sp.multiplicity) + " at " + sp.point.str());
    auto dirs = tangent_directions_over(sp, K);
    if (dirs.empty()) continue;  // non-split node: no degree-1 places here
    if (dirs.size() != 2)
      throw integrity_error("node with " + std::to_string(dirs.size()) + " rational tangents");
    auto& list = ps.branches_at[sp.point.key()];
    for (const auto& dir : dirs) {
      Place pl;
      pl.point = sp.point;
      pl.at_node = true;
      pl.chart = sp.point.chart();
      pl.tangent = dir;
      unsigned T = opt.start_order;
      for (;;) {
        auto param = branch_param(C, formK, sp.point, dir, T);
        bool enough = true;
        for (const auto& M : vmaps) {
          std::array<Series, 3> img{subst_form(M.forms[0], param), subst_form(M.forms[1], param),
                                    subst_form(M.forms[2], param)};
          int mu = -1;
          for (const auto& s : img) {
            int o = s.ord();
            if (o >= 0) mu = mu < 0 ? o : std::min(mu, o);
          }
          if (mu < 0 || static_cast<int>(T) - mu < 3) {
            enough = false;
            break;
          }
        }
        if (enough) {
          pl.param = std::make_shared<const std::array<Series, 3>>(std::move(param));
          break;
        }
        if (T >= opt.truncation_cap)
          throw capped_error("branch truncation cap " + std::to_string(opt.truncation_cap) +
                             " reached while validating map images");
        T = std::min(opt.truncation_cap, T + 4);
      }
      list.push_back(static_cast<u32>(ps.places.size()));
      ps.places.push_back(std::move(pl));
    }
  }

  if (ps.places.size() != ps.census.total)
    throw integrity_error("place list size " + std::to_string(ps.places.size()) +
                          " disagrees with the census " + std::to_string(ps.census.total));
  return ps;
}

namespace {

u32 identify_place(const PlaceSet& ps, const std::array<Series, 3>& image, const std::string& ctx) {
  int mu = -1;
  for (const auto& s : image) {
    int o = s.ord();
    if (o >= 0) mu = mu < 0 ? o : std::min(mu, o);
  }
  if (mu < 0)
    throw capped_error("image series vanishes to truncation at " + ctx);
  std::array<Series, 3> red{image[0].shifted_down(static_cast<unsigned>(mu)),
                            image[1].shifted_down(static_cast<unsigned>(mu)),
                            image[2].shifted_down(static_cast<unsigned>(mu))};
  ProjPoint Q(red[0].at(0), red[1].at(0), red[2].at(0));
  auto s_it = ps.smooth_at.find(Q.key());
  if (s_it != ps.smooth_at.end()) return s_it->second;
  auto n_it = ps.branches_at.find(Q.key());
  if (n_it == ps.branches_at.end())
    throw integrity_error("image point " + Q.str() + " carries no degree-1 place (" + ctx + ")");
  // node target: read the branch direction off the next-order terms
  unsigned chart = Q.chart();
  unsigned v0 = chart == 0 ? 1 : 0;
  unsigned v1 = chart == 2 ? 1 : 2;
  Series dinv = red[chart].inverse();
  Series A = red[v0] * dinv;
  Series B = red[v1] * dinv;
  A.set(0, A.at(0) - Q[v0]);
  B.set(0, B.at(0) - Q[v1]);
  int oa = A.ord(), ob = B.ord();
  int m = oa < 0 ? ob : (ob < 0 ? oa : std::min(oa, ob));
  if (m <= 0)
    throw capped_error("cannot read a branch direction at " + ctx);
  Fe da = A.at(static_cast<unsigned>(m));
  Fe db = B.at(static_cast<unsigned>(m));
  for (u32 idx : n_it->second) {
    const auto& t = ps.places[idx].tangent;
    if ((t[0] * db - t[1] * da).is_zero()) return idx;
  }
  throw integrity_error("image branch direction at " + Q.str() + " matches no stored place (" + ctx + ")");
}

}  // namespace

Perm map_to_permutation(const CurveMap& M_in, const PlaceSet& ps) {
  CurveMap M = M_in.forms[0].field() == ps.field
                   ? M_in
                   : lift_map(M_in, embed_hom(M_in.forms[0].field(), ps.field));
  std::vector<u32> img(ps.places.size());

  auto smooth_param = [&](u32 i, unsigned T) {
    const Place& pl = ps.places[i];
    BiPoly local = local_form(ps.curve, pl.point);
    auto dir = smooth_tangent(local);
    auto [u, v] = solve_branch(local, dir, T);
    return projective_param(pl.point, u, v);
  };

  auto via_series = [&](u32 i, const std::array<Series, 3>* stored, const std::string& ctx) {
    unsigned T = stored ? 0 : 8;
    for (;;) {
      try {
        std::array<Series, 3> param = stored ? *stored : smooth_param(i, T);
        std::array<Series, 3> image{subst_form(M.forms[0], param), subst_form(M.forms[1], param),
                                    subst_form(M.forms[2], param)};
        return identify_place(ps, image, ctx);
      } catch (const capped_error&) {
        if (stored || T >= 20) throw;
        T += 4;
      }
    }
  };

  for (u32 i = 0; i < ps.places.size(); ++i) {
    const Place& pl = ps.places[i];
    std::string ctx = "place " + std::to_string(i) + " over " + pl.point.str();
    if (!pl.at_node && !M.is_base_point(pl.point)) {
      ProjPoint Q = M.apply(pl.point);
      auto s_it = ps.smooth_at.find(Q.key());
      if (s_it != ps.smooth_at.end()) {
        img[i] = s_it->second;
      } else {
        img[i] = via_series(i, nullptr, ctx);  // image lands on a node
      }
      continue;
    }
    img[i] = via_series(i, pl.param ? pl.param.get() : nullptr, ctx);
  }

  if (!is_bijection(img))
    throw integrity_error("map " + M.name + " did not induce a bijection on places (branch resolution bug)");
  Perm p;
  p.img = std::move(img);
  p.label = M.name;
  return p;
}

}  // namespace wiman
