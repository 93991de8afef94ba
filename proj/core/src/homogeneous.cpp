#include "wiman/homogeneous.hpp"

#include <sstream>

namespace wiman {

TriPoly TriPoly::monomial(const Field& f, Mono m, const Fe& c) {
  TriPoly r(f, m[0] + m[1] + m[2]);
  r.add_term(m, c);
  return r;
}

TriPoly TriPoly::from_terms(const Field& f, unsigned degree,
                            const std::vector<std::pair<Mono, i64>>& terms) {
  TriPoly r(f, degree);
  for (const auto& [m, v] : terms) r.add_term(m, f.from_int(v));
  return r;
}

Fe TriPoly::coeff(Mono m) const {
  auto it = t_.find(m);
  return it == t_.end() ? f_.zero() : it->second;
}

void TriPoly::add_term(Mono m, const Fe& c) {
  if (m[0] + m[1] + m[2] != d_)
    throw domain_error("monomial degree " + std::to_string(m[0] + m[1] + m[2]) +
                       " does not match form degree " + std::to_string(d_));
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TriPoly TriPoly::operator-() const {
  TriPoly r(f_, d_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  if (a.d_ != b.d_) throw domain_error("degree mismatch in form addition");
  TriPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
  if (a.d_ != b.d_) throw domain_error("degree mismatch in form subtraction");
  TriPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r(a.f_, a.d_ + b.d_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

TriPoly TriPoly::operator*(const Fe& s) const {
  TriPoly r(f_, d_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) { return a.d_ == b.d_ && a.t_ == b.t_; }

Fe TriPoly::eval(const Fe& x, const Fe& y, const Fe& z) const {
  std::array<std::vector<Fe>, 3> pw;
  const Fe* vars[3] = {&x, &y, &z};
  for (unsigned v = 0; v < 3; ++v) {
    pw[v].resize(d_ + 1);
    pw[v][0] = f_.one();
    for (unsigned e = 1; e <= d_; ++e) pw[v][e] = pw[v][e - 1] * *vars[v];
  }
  Fe acc = f_.zero();
  for (const auto& [m, c] : t_) acc = acc + c * pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]];
  return acc;
}

TriPoly TriPoly::partial(unsigned axis) const {
  if (d_ == 0) throw domain_error("partial of a constant form");
  TriPoly r(f_, d_ - 1);
  for (const auto& [m, c] : t_) {
    if (m[axis] == 0) continue;
    Mono n = m;
    --n[axis];
    r.add_term(n, c * f_.from_int(static_cast<i64>(m[axis])));
  }
  return r;
}

TriPoly TriPoly::pow(unsigned e) const {
  TriPoly r = TriPoly::monomial(f_, {0, 0, 0}, f_.one());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

TriPoly TriPoly::compose(const TriPoly& F, const TriPoly& g0, const TriPoly& g1, const TriPoly& g2) {
  if (g0.field() != F.field() || g1.field() != F.field() || g2.field() != F.field())
    throw domain_error("field mismatch in composition");
  unsigned e = g0.degree();
  if (g1.degree() != e || g2.degree() != e) throw domain_error("substituted forms must share a degree");
  unsigned d = F.degree();
  // cache powers of each substituted form up to the exponents that occur
  std::array<const TriPoly*, 3> g = {&g0, &g1, &g2};
  std::array<std::vector<TriPoly>, 3> pw;
  for (unsigned v = 0; v < 3; ++v) {
    pw[v].reserve(d + 1);
    pw[v].push_back(TriPoly::monomial(F.field(), {0, 0, 0}, F.field().one()));
    for (unsigned i = 1; i <= d; ++i) pw[v].push_back(pw[v].back() * *g[v]);
  }
  TriPoly r(F.field(), d * e);
  for (const auto& [m, c] : F.terms()) {
    TriPoly term = pw[0][m[0]] * pw[1][m[1]];
    term = term * pw[2][m[2]];
    // term has degree (m0+m1+m2)*e = d*e since F is homogeneous
    for (const auto& [tm, tc] : term.terms()) r.add_term(tm, tc * c);
  }
  return r;
}

std::optional<TriPoly> TriPoly::exact_divide(const TriPoly& A, const TriPoly& B) {
  if (B.is_zero()) throw domain_error("division by the zero form");
  if (A.is_zero()) return TriPoly(A.f_, 0);
  if (A.field() != B.field()) throw domain_error("field mismatch in form division");
  if (A.d_ < B.d_) return std::nullopt;
  TriPoly rem = A;
  TriPoly q(A.f_, A.d_ - B.d_);
  Mono lb = B.t_.rbegin()->first;
  Fe lcinv = B.t_.rbegin()->second.inv();
  while (!rem.is_zero()) {
    Mono la = rem.t_.rbegin()->first;
    if (la[0] < lb[0] || la[1] < lb[1] || la[2] < lb[2]) return std::nullopt;
    Mono qm = {la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]};
    Fe qc = rem.t_.rbegin()->second * lcinv;
    q.add_term(qm, qc);
    TriPoly sub = B * TriPoly::monomial(A.f_, qm, qc);
    rem = rem - sub;
  }
  return q;
}

TriPoly TriPoly::map_coeffs(const FieldHom& h) const {
  TriPoly r(h.dst, d_);
  for (const auto& [m, c] : t_) r.add_term(m, h(c));
  return r;
}

std::string TriPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names = "XYZ";
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *it;
    bool needs_coeff = !c.is_one() || (m[0] + m[1] + m[2]) == 0;
    if (needs_coeff) os << c.str();
    for (unsigned v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      os << names[v];
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(const Fe& x, const Fe& y, const Fe& z) : c_{x, y, z}, chart_(0) {
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (!c_[static_cast<unsigned>(i)].is_zero()) {
      last = i;
      break;
    }
  }
  if (last < 0) throw domain_error("projective point cannot be the zero triple");
  chart_ = static_cast<unsigned>(last);
  Fe inv = c_[chart_].inv();
  for (auto& c : c_) c = c * inv;
}

ProjPoint ProjPoint::frobenius(u64 q) const {
  return ProjPoint(c_[0].frobenius(q), c_[1].frobenius(q), c_[2].frobenius(q));
}

std::string ProjPoint::key() const {
  std::string k;
  for (const auto& c : c_)
    for (u32 v : c.coeffs()) k.append(reinterpret_cast<const char*>(&v), sizeof(v));
  return k;
}

std::string ProjPoint::str() const {
  return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
}

}  // namespace wiman
