#include "wiman/hermitian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wiman {

// ---------------------------------------------------------------------------
// Mat3
// ---------------------------------------------------------------------------

Mat3 Mat3::zero(const Field& f) {
  Mat3 m{f, {}};
  for (auto& x : m.a) x = f.zero();
  return m;
}

Mat3 Mat3::identity(const Field& f) {
  Mat3 m = zero(f);
  for (unsigned i = 0; i < 3; ++i) m.at(i, i) = f.one();
  return m;
}

Mat3 Mat3::from_ints(const Field& f, const std::array<std::array<i64, 3>, 3>& rows) {
  Mat3 m = zero(f);
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned c = 0; c < 3; ++c) m.at(r, c) = f.from_int(rows[r][c]);
  return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r = Mat3::zero(x.f);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      Fe acc = x.f.zero();
      for (unsigned k = 0; k < 3; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Mat3 Mat3::operator*(const Fe& s) const {
  Mat3 r = *this;
  for (auto& x : r.a) x = x * s;
  return r;
}

Mat3 Mat3::conj_transpose(u64 q) const {
  Mat3 r = zero(f);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) r.at(i, j) = at(j, i).frobenius(q);
  return r;
}

Fe Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Fe Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Mat3 Mat3::inverse() const {
  Fe d = det();
  if (d.is_zero()) throw domain_error("matrix is singular");
  Fe di = d.inv();
  Mat3 r = zero(f);
  auto cof = [&](unsigned i, unsigned j) {
    unsigned r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
  };
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) r.at(i, j) = cof(j, i) * di;
  return r;
}

Poly Mat3::char_poly() const {
  // t^3 - tr t^2 + c2 t - det, c2 = sum of principal 2x2 minors
  Fe c2 = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0) + at(0, 0) * at(2, 2) -
          at(0, 2) * at(2, 0) + at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  return Poly(f, {-det(), c2, -trace(), f.one()});
}

bool Mat3::is_scalar() const {
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return at(0, 0) == at(1, 1) && at(1, 1) == at(2, 2) && !at(0, 0).is_zero();
}

Mat3 Mat3::projective_normal() const {
  for (const auto& x : a) {
    if (!x.is_zero()) return *this * x.inv();
  }
  throw domain_error("zero matrix has no projective normalization");
}

unsigned Mat3::rank() const {
  std::array<std::array<Fe, 3>, 3> m;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m[i][j] = at(i, j);
  unsigned rank = 0;
  for (unsigned col = 0; col < 3 && rank < 3; ++col) {
    unsigned pivot = 3;
    for (unsigned r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 3) continue;
    std::swap(m[rank], m[pivot]);
    for (unsigned r = rank + 1; r < 3; ++r) {
      if (m[r][col].is_zero()) continue;
      Fe c = m[r][col] / m[rank][col];
      for (unsigned cc = 0; cc < 3; ++cc) m[r][cc] = m[r][cc] - c * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::array<Fe, 3>> Mat3::nullspace() const {
  // row reduce [m | .] and read off free variables
  std::array<std::array<Fe, 3>, 3> m;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m[i][j] = at(i, j);
  std::array<int, 3> pivot_col = {-1, -1, -1};
  unsigned rank = 0;
  for (unsigned col = 0; col < 3 && rank < 3; ++col) {
    unsigned pivot = 3;
    for (unsigned r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 3) continue;
    std::swap(m[rank], m[pivot]);
    Fe inv = m[rank][col].inv();
    for (unsigned cc = 0; cc < 3; ++cc) m[rank][cc] = m[rank][cc] * inv;
    for (unsigned r = 0; r < 3; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Fe c = m[r][col];
      for (unsigned cc = 0; cc < 3; ++cc) m[r][cc] = m[r][cc] - c * m[rank][cc];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  std::vector<std::array<Fe, 3>> basis;
  for (unsigned col = 0; col < 3; ++col) {
    bool is_pivot = false;
    for (unsigned r = 0; r < rank; ++r)
      if (pivot_col[r] == static_cast<int>(col)) is_pivot = true;
    if (is_pivot) continue;
    std::array<Fe, 3> v{f.zero(), f.zero(), f.zero()};
    v[col] = f.one();
    for (unsigned r = 0; r < rank; ++r) v[static_cast<unsigned>(pivot_col[r])] = -m[r][col];
    basis.push_back(v);
  }
  return basis;
}

std::string Mat3::str() const {
  std::ostringstream os;
  for (unsigned r = 0; r < 3; ++r) {
    os << (r ? ";" : "");
    for (unsigned c = 0; c < 3; ++c) os << (c ? "," : "") << at(r, c).str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Models and statistics
// ---------------------------------------------------------------------------

namespace {

std::pair<u64, unsigned> prime_power(u64 q) {
  if (q < 2) throw domain_error("q must be a prime power >= 2");
  u64 p = q;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned n = 0;
  u64 t = q;
  while (t > 1) {
    if (t % p) throw domain_error(std::to_string(q) + " is not a prime power");
    t /= p;
    ++n;
  }
  return {p, n};
}

}  // namespace

HermitianModel hermitian_model(u64 q, HermitianModelId id) {
  auto [p, n] = prime_power(q);
  Field K = Field::gf(p, 2 * n);
  HermitianModel m;
  m.q = q;
  m.id = id;
  m.fq2 = K;
  unsigned dq = static_cast<unsigned>(q);
  switch (id) {
    case HermitianModelId::M1: {
      TriPoly F(K, dq + 1);
      F.add_term({dq + 1, 0, 0}, K.one());
      F.add_term({0, dq + 1, 0}, K.one());
      F.add_term({0, 0, dq + 1}, K.one());
      m.curve = PlaneCurve(F);
      m.gram = Mat3::identity(K);
      break;
    }
    case HermitianModelId::M2: {
      TriPoly F(K, dq + 1);
      F.add_term({dq, 0, 1}, K.one());
      F.add_term({1, 0, dq}, K.one());
      F.add_term({0, dq + 1, 0}, -K.one());
      m.curve = PlaneCurve(F);
      m.gram = Mat3::from_ints(K, {{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}});
      break;
    }
    case HermitianModelId::M3: {
      Fe omega;
      bool found = false;
      Fe minus1 = -K.one();
      for (u64 i = 1; i < K.size(); ++i) {
        Fe w = K.element_by_index(i);
        if (w.pow(q - 1) == minus1) {
          omega = w;
          found = true;
          break;
        }
      }
      if (!found) throw domain_error("no element with w^(q-1) = -1 in " + K.str());
      TriPoly F(K, dq + 1);
      F.add_term({1, dq, 0}, K.one());
      F.add_term({dq, 1, 0}, -K.one());
      F.add_term({0, 0, dq + 1}, omega);
      m.curve = PlaneCurve(F);
      m.gram = Mat3::from_ints(K, {{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}});
      m.gram.at(2, 2) = omega;
      m.omega = omega;
      break;
    }
  }
  return m;
}

HermitianStats hermitian_stats(u64 q, HermitianModelId id, u64 sweep_cap) {
  if (q > sweep_cap)
    throw capped_error("full line sweeps capped at q <= " + std::to_string(sweep_cap));
  HermitianModel m = hermitian_model(q, id);
  const Field& K = m.fq2;
  HermitianStats st;
  st.q = q;
  st.id = id;

  std::unordered_set<std::string> points;
  for (const auto& P : rational_curve_points(m.curve, K)) points.insert(P.key());
  st.point_count = points.size();

  // every line of PG(2, q^2), parametrized through two spanning points
  auto line_points = [&](const std::array<Fe, 3>& l) {
    std::array<Fe, 3> v1, v2;
    const Fe z = K.zero();
    if (!l[0].is_zero()) {
      v1 = {-l[1], l[0], z};
      v2 = {-l[2], z, l[0]};
    } else if (!l[1].is_zero()) {
      v1 = {K.one(), z, z};
      v2 = {z, -l[2], l[1]};
    } else {
      v1 = {K.one(), z, z};
      v2 = {z, K.one(), z};
    }
    u64 hits = 0;
    for (u64 t = 0; t < K.size(); ++t) {
      Fe lam = K.element_by_index(t);
      ProjPoint P(v1[0] * lam + v2[0], v1[1] * lam + v2[1], v1[2] * lam + v2[2]);
      if (points.count(P.key())) ++hits;
    }
    if (points.count(ProjPoint(v1[0], v1[1], v1[2]).key())) ++hits;
    return hits;
  };

  auto consider = [&](const std::array<Fe, 3>& l) {
    u64 hits = line_points(l);
    ++st.line_sections[hits];
    if (hits == 1) ++st.tangent_lines;
  };
  for (u64 i = 0; i < K.size(); ++i)
    for (u64 j = 0; j < K.size(); ++j)
      consider({K.element_by_index(i), K.element_by_index(j), K.one()});
  for (u64 i = 0; i < K.size(); ++i) consider({K.element_by_index(i), K.one(), K.zero()});
  consider({K.one(), K.zero(), K.zero()});
  return st;
}

// ---------------------------------------------------------------------------
// Unitary elements
// ---------------------------------------------------------------------------

namespace {

Fe solve_norm(const Field& K, u64 q, const Fe& c) {
  // s with s^(q+1) = c; the norm onto F_q is surjective
  for (u64 i = 1; i < K.size(); ++i) {
    Fe s = K.element_by_index(i);
    if (s.pow(q + 1) == c) return s;
  }
  throw integrity_error("norm equation unsolvable; multiplier not in F_q?");
}

}  // namespace

UnitaryElement make_unitary(u64 q, Mat3 m, const Mat3& gram) {
  const Field& K = m.f;
  Mat3 lhs = m.conj_transpose(q) * gram * m;
  // find the multiplier from a nonzero gram entry
  Fe c;
  bool have = false;
  for (unsigned i = 0; i < 9 && !have; ++i) {
    if (!gram.a[i].is_zero()) {
      c = lhs.a[i] / gram.a[i];
      have = true;
    }
  }
  if (!have) throw domain_error("gram matrix is zero");
  if (c.is_zero()) throw domain_error("matrix does not define a similitude (singular)");
  if (!(lhs == gram * c)) throw domain_error("matrix is not unitary for the given form");
  if (!(c.frobenius(q) == c)) throw integrity_error("similitude multiplier not in F_q");
  if (!c.is_one()) {
    Fe s = solve_norm(K, q, c);
    m = m * s.inv();
  }
  return UnitaryElement{q, m, gram};
}

UnitaryElement random_unitary(u64 q, u64 seed) {
  auto [p, n] = prime_power(q);
  Field K = Field::gf(p, 2 * n);
  Mat3 gram = Mat3::identity(K);
  Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (q + 1)));
  auto beta = [&](const std::array<Fe, 3>& u, const std::array<Fe, 3>& v) {
    Fe acc = K.zero();
    for (unsigned i = 0; i < 3; ++i) acc = acc + u[i].frobenius(q) * v[i];
    return acc;
  };
  std::array<std::array<Fe, 3>, 3> cols;
  for (unsigned c = 0; c < 3; ++c) {
    int attempts = 0;
    for (;;) {
      if (++attempts > 256)
        throw capped_error("unitary sampling hit the isotropic-rejection cap");
      std::array<Fe, 3> v{K.sample(rng), K.sample(rng), K.sample(rng)};
      for (unsigned prev = 0; prev < c; ++prev) {
        Fe proj = beta(cols[prev], v);
        for (unsigned i = 0; i < 3; ++i) v[i] = v[i] - cols[prev][i] * proj;
      }
      Fe nrm = beta(v, v);
      if (nrm.is_zero()) continue;
      Fe s = solve_norm(K, q, nrm);
      Fe si = s.inv();
      for (auto& x : v) x = x * si;
      cols[c] = v;
      break;
    }
  }
  Mat3 m = Mat3::zero(K);
  for (unsigned c = 0; c < 3; ++c)
    for (unsigned r = 0; r < 3; ++r) m.at(r, c) = cols[c][r];
  return make_unitary(q, m, gram);
}

Mat3 mat_pow(const Mat3& m, u64 e) {
  Mat3 r = Mat3::identity(m.f);
  Mat3 base = m;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

u64 projective_order(const UnitaryElement& u) {
  u64 q = u.q;
  u64 p = u.m.f.p();
  // a multiple of every element order in PGU(3,q)
  u64 N = std::lcm(p * p, std::lcm(p * (q + 1), std::lcm(q * q - 1, q * q - q + 1)));
  if (!mat_pow(u.m, N).is_scalar())
    throw integrity_error("order exceeds the group exponent; input is not a genuine unitary element");
  u64 n = N;
  u64 rest = N;
  for (u64 r = 2; r * r <= rest; ++r) {
    if (rest % r) continue;
    while (rest % r == 0) rest /= r;
    while (n % r == 0 && mat_pow(u.m, n / r).is_scalar()) n /= r;
  }
  if (rest > 1)
    while (n % rest == 0 && mat_pow(u.m, n / rest).is_scalar()) n /= rest;
  return n;
}

const char* elem_type_name(ElemType t) {
  switch (t) {
    case ElemType::A: return "A";
    case ElemType::B1: return "B1";
    case ElemType::B2: return "B2";
    case ElemType::B3: return "B3";
    case ElemType::C: return "C";
    case ElemType::D: return "D";
    case ElemType::E: return "E";
  }
  return "?";
}

namespace {

// The admissible (type, order) -> contribution table for PGU(3, q).
u64 admissible_contribution(u64 q, u64 p, ElemType t, u64 n) {
  auto fail = [&]() -> u64 {
    throw integrity_error(std::string("order ") + std::to_string(n) + " is inconsistent with type " +
                          elem_type_name(t));
  };
  switch (t) {
    case ElemType::A:
      return (n >= 2 && (q + 1) % n == 0) ? q + 1 : fail();
    case ElemType::B1:
      return (n > 2 && (q + 1) % n == 0) ? 0 : fail();
    case ElemType::B2:
      return ((q * q - 1) % n == 0 && (q + 1) % n != 0) ? 2 : fail();
    case ElemType::B3:
      return ((q * q - q + 1) % n == 0) ? 3 : fail();
    case ElemType::C:
      return n == p ? q + 2 : fail();
    case ElemType::D:
      return ((n == p && p != 2) || (p == 2 && n == 4)) ? 2 : fail();
    case ElemType::E:
      return (n % p == 0 && n != p && n % (p * p) != 0 && !(p == 2 && n == 4)) ? 1 : fail();
  }
  return fail();
}

}  // namespace

ElementClass classify_element(const UnitaryElement& u) {
  const Field& K = u.m.f;
  u64 q = u.q;
  u64 p = K.p();
  u64 n = projective_order(u);
  if (n == 1) throw domain_error("classification needs a nontrivial element");
  ElementClass out;
  out.order = n;

  auto on_curve = [&](const std::array<Fe, 3>& v) {
    Fe acc = K.zero();
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) acc = acc + v[i].frobenius(q) * u.gram.at(i, j) * v[j];
    return acc.is_zero();
  };

  if (n % p != 0) {
    Poly chi = u.m.char_poly();
    auto fac = factor_univariate(chi);
    if (fac.factors.size() == 1 && fac.factors[0].first.degree() == 3) {
      out.type = ElemType::B3;
      out.evidence = "irreducible characteristic polynomial";
    } else {
      std::vector<std::pair<Fe, unsigned>> eigen;
      for (const auto& [g, mult] : fac.factors) {
        if (g.degree() != 1)
          throw integrity_error("semisimple element with a quadratic factor; not a multiplier-1 unitary");
        eigen.emplace_back(-g.coeff(0), mult);
      }
      bool repeated = false;
      Fe lam;
      for (const auto& [l, mult] : eigen) {
        if (mult == 3) throw integrity_error("scalar matrix escaped the order check");
        if (mult == 2) {
          repeated = true;
          lam = l;
        }
      }
      if (repeated) {
        Mat3 shifted = u.m;
        for (unsigned i = 0; i < 3; ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
        if (shifted.rank() != 1)
          throw integrity_error("repeated eigenvalue without a plane of fixed points");
        out.type = ElemType::A;
        out.evidence = "homology: eigenvalue of geometric multiplicity 2";
      } else {
        unsigned on = 0;
        for (const auto& [l, mult] : eigen) {
          (void)mult;
          Mat3 shifted = u.m;
          for (unsigned i = 0; i < 3; ++i) shifted.at(i, i) = shifted.at(i, i) - l;
          auto ns = shifted.nullspace();
          if (ns.size() != 1) throw integrity_error("eigenvalue with unexpected eigenspace dimension");
          if (on_curve(ns.front())) ++on;
        }
        if (on == 0) {
          out.type = ElemType::B1;
          out.evidence = "three rational fixed points, all off the curve (self-polar triangle)";
        } else if (on == 2) {
          out.type = ElemType::B2;
          out.evidence = "three rational fixed points, two on the curve";
        } else {
          throw integrity_error("fixed triangle with " + std::to_string(on) + " points on the curve");
        }
      }
    }
  } else if (n == p) {
    auto rts = roots(u.m.char_poly());
    if (rts.size() != 1) throw integrity_error("order-p element without a triple eigenvalue");
    Mat3 shifted = u.m * rts.front().inv();
    for (unsigned i = 0; i < 3; ++i) shifted.at(i, i) = shifted.at(i, i) - K.one();
    unsigned r = shifted.rank();
    if (r == 1) {
      out.type = ElemType::C;
      out.evidence = "elation: unipotent of Jordan type [2,1]";
    } else if (r == 2) {
      out.type = ElemType::D;
      out.evidence = "unipotent of Jordan type [3]";
    } else {
      throw integrity_error("unipotent part has rank " + std::to_string(r));
    }
  } else if (p == 2 && n == 4) {
    out.type = ElemType::D;
    out.evidence = "order 4 in characteristic 2";
  } else {
    out.type = ElemType::E;
    out.evidence = "order divisible by p but not equal to p";
  }
  out.contribution = admissible_contribution(q, p, out.type, n);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

namespace {

std::string mat_key(const Mat3& m) {
  Mat3 nm = m.projective_normal();
  std::string k;
  for (const auto& x : nm.a)
    for (u32 v : x.coeffs()) k.append(reinterpret_cast<const char*>(&v), sizeof(v));
  return k;
}

}  // namespace

std::vector<UnitaryElement> unitary_closure(const std::vector<UnitaryElement>& gens, u64 ceiling) {
  if (gens.empty()) throw domain_error("closure needs at least one generator");
  const Field& K = gens.front().m.f;
  std::vector<UnitaryElement> elems;
  std::unordered_set<std::string> seen;
  UnitaryElement id{gens.front().q, Mat3::identity(K), gens.front().gram};
  elems.push_back(id);
  seen.insert(mat_key(id.m));
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Mat3 prod = g.m * elems[head].m;
      if (seen.insert(mat_key(prod)).second) {
        elems.push_back(UnitaryElement{g.q, prod.projective_normal(), g.gram});
        if (elems.size() > ceiling)
          throw capped_error("matrix closure exceeded the ceiling " + std::to_string(ceiling));
      }
    }
  }
  return elems;
}

QuotientGenus quotient_genus(const std::vector<UnitaryElement>& subgroup) {
  if (subgroup.empty()) throw domain_error("empty subgroup");
  u64 q = subgroup.front().q;
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < subgroup.size(); ++i) index.emplace(mat_key(subgroup[i].m), i);
  if (index.size() != subgroup.size()) throw domain_error("subgroup list contains duplicates");
  bool has_id = false;
  for (const auto& e : subgroup)
    if (e.m.is_scalar()) has_id = true;
  if (!has_id) throw domain_error("subgroup must contain the identity");
  for (const auto& x : subgroup)
    if (!index.count(mat_key(x.m.inverse()))) throw domain_error("subgroup not closed under inverse");
  // closure: grow a generating set from S until its closure has |S| elements,
  // checking that the closure never leaves S
  {
    std::vector<UnitaryElement> gens;
    std::unordered_set<std::string> have;
    have.insert(mat_key(Mat3::identity(subgroup.front().m.f)));
    while (have.size() < subgroup.size()) {
      const UnitaryElement* fresh = nullptr;
      for (const auto& e : subgroup)
        if (!have.count(mat_key(e.m))) {
          fresh = &e;
          break;
        }
      if (!fresh) throw integrity_error("closure bookkeeping lost an element");
      gens.push_back(*fresh);
      for (const auto& e : unitary_closure(gens, subgroup.size() + 1)) {
        if (!index.count(mat_key(e.m))) throw domain_error("subgroup not closed under products");
        have.insert(mat_key(e.m));
      }
    }
  }
  QuotientGenus qg;
  qg.group_order = subgroup.size();
  for (const auto& e : subgroup) {
    if (e.m.is_scalar()) continue;
    qg.delta += classify_element(e).contribution;
  }
  u64 gh = q * (q - 1) / 2;
  i64 numer = 2 * static_cast<i64>(gh) - 2 - static_cast<i64>(qg.delta);
  i64 ord = static_cast<i64>(qg.group_order);
  if (numer % ord != 0)
    throw integrity_error("Riemann-Hurwitz integrality failed: 2g-2-Delta not divisible by |G|");
  i64 two_g_minus_2 = numer / ord;
  if (two_g_minus_2 < -2 || (two_g_minus_2 + 2) % 2 != 0)
    throw integrity_error("Riemann-Hurwitz yielded a non-genus value " + std::to_string(two_g_minus_2));
  qg.genus = static_cast<u64>((two_g_minus_2 + 2) / 2);
  return qg;
}

Sylow2Certificate sylow2_certificate() {
  const u64 q = 19;
  Field K = Field::gf(19, 2);
  Fe i4 = K.gen();
  if (!(i4 * i4 == -K.one()))
    throw integrity_error("the extension generator is no longer a fourth root of unity");
  Mat3 gram = Mat3::identity(K);
  Mat3 d1 = Mat3::identity(K);
  d1.at(0, 0) = i4;
  Mat3 d2 = Mat3::identity(K);
  d2.at(1, 1) = i4;
  Mat3 sw = Mat3::from_ints(K, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
  std::vector<UnitaryElement> gens{make_unitary(q, d1, gram), make_unitary(q, d2, gram),
                                   make_unitary(q, sw, gram)};
  auto elems = unitary_closure(gens, 64);
  if (elems.size() != 32)
    throw integrity_error("monomial 2-group closure has order " + std::to_string(elems.size()));
  Sylow2Certificate cert;
  cert.elements = elems;
  for (const auto& e : elems) {
    u64 n = e.m.is_scalar() ? 1 : projective_order(e);
    ++cert.order_census[n];
    if (n == 2) ++cert.involutions;
    if (n > 1) cert.delta += classify_element(e).contribution;
  }
  return cert;
}

}  // namespace wiman
