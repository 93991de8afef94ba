#include "wiman/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wiman {

Poly::Poly(Field f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::from_ints(const Field& f, const std::vector<i64>& coeffs) {
  std::vector<Fe> c;
  c.reserve(coeffs.size());
  for (i64 v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, std::move(c));
}

const Fe& Poly::lc() const {
  if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Fe Poly::eval(const Fe& x) const {
  Fe acc = f_.zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Fe> d(c_.size() - 1, f_.zero());
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * f_.from_int(static_cast<i64>(i));
  return Poly(f_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Fe> c(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Fe> c(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(a.f_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.f_);
  std::vector<Fe> c(a.c_.size() + b.c_.size() - 1, a.f_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  }
  return Poly(a.f_, std::move(c));
}

Poly Poly::operator*(const Fe& s) const {
  std::vector<Fe> c(c_);
  for (auto& x : c) x = x * s;
  return Poly(f_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  r = a;
  q = Poly(a.f_);
  int db = b.degree();
  Fe lcinv = b.lc().inv();
  std::vector<Fe> qc;
  if (a.degree() >= db) qc.assign(static_cast<size_t>(a.degree() - db + 1), a.f_.zero());
  while (r.degree() >= db) {
    int d = r.degree();
    Fe c = r.lc() * lcinv;
    qc[static_cast<size_t>(d - db)] = c;
    std::vector<Fe> rc = r.c_;
    for (int i = 0; i <= db; ++i)
      rc[static_cast<size_t>(d - db + i)] = rc[static_cast<size_t>(d - db + i)] - c * b.coeff(static_cast<size_t>(i));
    r = Poly(a.f_, std::move(rc));
  }
  q = Poly(a.f_, std::move(qc));
}

Poly Poly::operator/(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return q;
}

Poly Poly::operator%(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw integrity_error("expected exact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::powmod(u64 e, const Poly& mod) const {
  Poly r = Poly::constant(f_.one()) % mod;
  Poly base = *this % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i].is_one() && i > 0;
    if (!unit) os << "(" << c_[i].str() << ")";
    if (i >= 1) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Factorization: squarefree + distinct-degree + equal-degree splitting.
// ---------------------------------------------------------------------------

namespace {

// x^{|F|^steps} mod f via iterated q-power maps; exponents stay within u64.
Poly frobenius_power_x(const Poly& f, unsigned steps) {
  const Field& F = f.field();
  Poly t = Poly::x(F) % f;
  for (unsigned i = 0; i < steps; ++i) t = t.powmod(F.size(), f);
  return t;
}

Poly poly_pth_root(const Poly& f) {
  // f = g(x^p): extract g with coefficients a^{1/p} = a^{p^{k-1}}.
  const Field& F = f.field();
  u64 p = F.p();
  u64 root_exp = 1;
  for (unsigned i = 0; i + 1 < F.k(); ++i) root_exp *= p;
  std::vector<Fe> g;
  for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += static_cast<size_t>(p))
    g.push_back(f.coeff(i).pow(root_exp));
  return Poly(F, std::move(g));
}

void squarefree_decompose(const Poly& f, unsigned mult, std::map<unsigned, Poly>& out) {
  const Field& F = f.field();
  u64 p = F.p();
  if (f.degree() == 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(poly_pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = f.exact_div(c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly z = w.exact_div(y);
    if (z.degree() > 0) {
      auto it = out.find(i * mult);
      if (it == out.end())
        out.emplace(i * mult, z.monic());
      else
        it->second = (it->second * z).monic();
    }
    c = c.exact_div(y);
    w = std::move(y);
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(poly_pth_root(c), mult * static_cast<unsigned>(p), out);
}

// Trace-based splitter for characteristic 2, Cantor-Zassenhaus otherwise.
Poly random_split_candidate(const Poly& f, unsigned d, Rng& rng) {
  const Field& F = f.field();
  int n = f.degree();
  std::vector<Fe> rc;
  rc.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rc.push_back(F.element_by_index(rng.below(F.size())));
  Poly a(F, std::move(rc));
  if (a.degree() < 1) return Poly(F);
  if (F.p() == 2) {
    // trace map: a + a^2 + a^4 + ... over F_{2^(k*d)}
    unsigned bits = F.k() * d;
    Poly t = a % f;
    Poly acc = t;
    for (unsigned i = 1; i < bits; ++i) {
      t = (t * t) % f;
      acc = acc + t;
    }
    return acc;
  }
  // b = a^{(q^d-1)/(q-1)} via iterated Frobenius, then b^{(q-1)/2} - 1
  Poly b = a % f;
  Poly apow = a % f;
  for (unsigned i = 1; i < d; ++i) {
    apow = apow.powmod(F.size(), f);
    b = (b * apow) % f;
  }
  Poly e = b.powmod((F.size() - 1) / 2, f);
  return e - Poly::constant(F.one());
}

void equal_degree_split(const Poly& f, unsigned d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  for (;;) {
    Poly c = random_split_candidate(f, d, rng);
    if (c.is_zero()) continue;
    Poly g = Poly::gcd(c, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f.exact_div(g), d, rng, out);
      return;
    }
  }
}

u64 poly_seed(const Poly& f) {
  const Field& F = f.field();
  u64 h = fnv1a(&*F.modulus().begin(), F.modulus().size() * sizeof(u32), 0x9e3779b97f4a7c15ULL ^ F.p());
  for (int i = 0; i <= f.degree(); ++i) {
    const auto& c = f.coeff(static_cast<size_t>(i)).coeffs();
    h = fnv1a(c.data(), c.size() * sizeof(u32), h);
  }
  return h;
}

bool poly_key_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Field F = a.field();
  for (int i = a.degree(); i >= 0; --i) {
    u64 ia = F.index_of(a.coeff(static_cast<size_t>(i)));
    u64 ib = F.index_of(b.coeff(static_cast<size_t>(i)));
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

Factorization factor_univariate(const Poly& f) {
  if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
  const Field& F = f.field();
  Factorization out;
  out.unit = f.lc();
  if (f.degree() == 0) return out;
  Rng rng(poly_seed(f));

  std::map<unsigned, Poly> sqfree;
  squarefree_decompose(f.monic(), 1, sqfree);

  for (auto& [mult, part] : sqfree) {
    // distinct-degree on the squarefree part
    Poly rest = part;
    Poly h = Poly::x(F) % rest;  // x^{q^d} mod rest, maintained incrementally
    unsigned d = 0;
    std::vector<std::pair<Poly, unsigned>> stages;
    while (rest.degree() > 0 && 2 * static_cast<int>(d + 1) <= rest.degree()) {
      ++d;
      h = h.powmod(F.size(), rest);
      Poly g = Poly::gcd(h - Poly::x(F), rest);
      if (g.degree() > 0) {
        stages.emplace_back(g, d);
        rest = rest.exact_div(g);
        h = h % rest;
      }
    }
    if (rest.degree() > 0) stages.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    for (auto& [stage, deg] : stages) {
      std::vector<Poly> irr;
      equal_degree_split(stage, deg, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_key_less(a.first, b.first); });
  return out;
}

std::vector<Fe> roots(const Poly& f) {
  if (f.is_zero()) throw domain_error("cannot take roots of the zero polynomial");
  const Field& F = f.field();
  if (f.degree() == 0) return {};
  // gcd with x^|F| - x isolates the linear part
  Poly xq = frobenius_power_x(f, 1);
  Poly lin = Poly::gcd(xq - Poly::x(F), f);
  std::vector<Fe> rts;
  if (lin.degree() >= 1) {
    Rng rng(poly_seed(f) ^ 0x5851f42d4c957f2dULL);
    std::vector<Poly> irr;
    equal_degree_split(lin, 1, rng, irr);
    for (const auto& g : irr) rts.push_back(-g.coeff(0));
  }
  std::sort(rts.begin(), rts.end(), [&](const Fe& a, const Fe& b) { return F.index_of(a) < F.index_of(b); });
  return rts;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Field& F = f.field();
  unsigned n = static_cast<unsigned>(f.degree());
  Poly xq = frobenius_power_x(f, n);
  if (!((xq - Poly::x(F)) % f).is_zero()) return false;
  unsigned m = n;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    Poly s = frobenius_power_x(f, n / r);
    if (Poly::gcd(s - Poly::x(F), f).degree() > 0) return false;
  }
  return true;
}

FieldHom embed_hom(const Field& src, const Field& dst) {
  if (src.p() != dst.p()) throw domain_error("embedding requires equal characteristic");
  if (dst.k() % src.k() != 0) throw domain_error("embedding requires source degree dividing target degree");
  FieldHom h;
  h.src = src;
  h.dst = dst;
  if (src.k() == 1 || src == dst) return h;
  std::vector<Fe> mc;
  mc.reserve(src.modulus().size());
  for (u32 c : src.modulus()) mc.push_back(dst.from_int(static_cast<i64>(c)));
  auto rts = roots(Poly(dst, std::move(mc)));
  if (rts.empty()) throw integrity_error("source modulus has no root in the target field");
  h.gen_image = rts.front();
  return h;
}

}  // namespace wiman
