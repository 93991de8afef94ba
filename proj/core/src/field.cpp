#include "wiman/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace wiman {

namespace {

using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 checked_pow(u64 base, unsigned exp, u64 limit) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base)
      throw capped_error("size " + std::to_string(base) + "^" + std::to_string(exp) +
                         " exceeds the configured bound " + std::to_string(limit));
    r *= base;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 fnv1a(const void* data, std::size_t len, u64 seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  u64 h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// FieldRep: arithmetic on raw coefficient vectors (length k, entries 0..p-1).
// p is capped below 2^20 so convolution sums of length <= 64 fit in u64.
// ---------------------------------------------------------------------------

class FieldRep : public std::enable_shared_from_this<FieldRep> {
 public:
  u64 p;
  unsigned k;
  u64 psize;               // p^k
  std::vector<u32> mod;    // length k+1, monic; {0,1} for prime fields

  using V = std::vector<u32>;

  V zero() const { return V(k, 0); }

  V one() const {
    V v(k, 0);
    if (p > 1) v[0] = 1 % static_cast<u32>(p);
    return v;
  }

  bool is_zero(const V& a) const {
    for (u32 c : a)
      if (c) return false;
    return true;
  }

  V add(const V& a, const V& b) const {
    V r(k);
    for (unsigned i = 0; i < k; ++i) {
      u64 s = u64(a[i]) + b[i];
      r[i] = static_cast<u32>(s >= p ? s - p : s);
    }
    return r;
  }

  V sub(const V& a, const V& b) const {
    V r(k);
    for (unsigned i = 0; i < k; ++i) {
      u64 s = u64(a[i]) + p - b[i];
      r[i] = static_cast<u32>(s >= p ? s - p : s);
    }
    return r;
  }

  V neg(const V& a) const { return sub(zero(), a); }

  // Schoolbook product followed by reduction mod the modulus.
  V mul(const V& a, const V& b) const {
    if (k == 1) return V{static_cast<u32>(u64(a[0]) * b[0] % p)};
    std::vector<u64> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < k; ++j) prod[i + j] += u64(a[i]) * b[j];
    }
    // reduce degree >= k terms using t^k = -(mod[0] + ... + mod[k-1] t^{k-1})
    for (unsigned d = 2 * k - 2; d >= k; --d) {
      u64 c = prod[d] % p;
      prod[d] = 0;
      if (c) {
        for (unsigned j = 0; j < k; ++j) {
          u64 m = u64(mod[j]) * c % p;
          prod[d - k + j] = (prod[d - k + j] + p - m) % p;
        }
      }
      if (d == k) break;
    }
    V r(k);
    for (unsigned i = 0; i < k; ++i) r[i] = static_cast<u32>(prod[i] % p);
    return r;
  }

  V powv(V a, u64 e) const {
    V r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  u64 inv_mod_p(u64 a) const { return powmod_u64(a, p - 2, p); }

  // Extended Euclid against the modulus, on low-to-high coefficient vectors.
  V inv(const V& a) const {
    if (is_zero(a)) throw domain_error("inverse of zero in " + name());
    if (k == 1) return V{static_cast<u32>(inv_mod_p(a[0]))};
    using P = std::vector<u64>;  // dense, low-to-high, entries mod p
    auto deg = [](const P& f) {
      int d = static_cast<int>(f.size()) - 1;
      while (d >= 0 && f[static_cast<size_t>(d)] == 0) --d;
      return d;
    };
    P r0(mod.begin(), mod.end());
    P r1(a.begin(), a.end());
    P s0{0}, s1{1};
    while (deg(r1) >= 0) {
      int d0 = deg(r0), d1 = deg(r1);
      if (d0 < d1) {
        std::swap(r0, r1);
        std::swap(s0, s1);
        continue;
      }
      u64 c = mulmod_u64(r0[static_cast<size_t>(d0)], inv_mod_p(r1[static_cast<size_t>(d1)]), p);
      int shift = d0 - d1;
      for (int i = 0; i <= d1; ++i) {
        auto& t = r0[static_cast<size_t>(i + shift)];
        t = (t + p - mulmod_u64(c, r1[static_cast<size_t>(i)], p)) % p;
      }
      if (s1.size() + static_cast<size_t>(shift) > s0.size()) s0.resize(s1.size() + static_cast<size_t>(shift), 0);
      for (size_t i = 0; i < s1.size(); ++i) {
        auto& t = s0[i + static_cast<size_t>(shift)];
        t = (t + p - mulmod_u64(c, s1[i], p)) % p;
      }
      if (deg(r0) < deg(r1)) {
        std::swap(r0, r1);
        std::swap(s0, s1);
      }
    }
    int d0 = deg(r0);
    if (d0 != 0) throw integrity_error("modulus not coprime to element; corrupt field");
    u64 c = inv_mod_p(r0[0]);
    V out(k, 0);
    for (size_t i = 0; i < s0.size() && i < k; ++i) out[i] = static_cast<u32>(mulmod_u64(s0[i], c, p));
    return out;
  }

  std::string name() const {
    std::ostringstream os;
    os << "GF(" << p;
    if (k > 1) os << "^" << k;
    os << ")";
    return os.str();
  }
};

namespace {

// --- raw univariate helpers over F_p (dense, low-to-high), used only for the
// --- deterministic modulus search, before the public Poly type exists.

using RP = std::vector<u64>;

int rp_deg(const RP& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<size_t>(d)] == 0) --d;
  return d;
}

RP rp_trim(RP f) {
  f.resize(static_cast<size_t>(rp_deg(f) + 1));
  return f;
}

RP rp_mulmod(const RP& a, const RP& b, const RP& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  RP prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  // m monic
  int dm = rp_deg(m);
  for (int d = rp_deg(prod); d >= dm; --d) {
    u64 c = prod[static_cast<size_t>(d)];
    if (c) {
      for (int i = 0; i <= dm; ++i) {
        auto& t = prod[static_cast<size_t>(d - dm + i)];
        t = (t + p - mulmod_u64(c, m[static_cast<size_t>(i)], p)) % p;
      }
    }
  }
  prod.resize(static_cast<size_t>(dm));
  return prod;
}

RP rp_powmod(RP base, u64 e, const RP& m, u64 p) {
  RP r{1};
  while (e) {
    if (e & 1) r = rp_mulmod(r, base, m, p);
    base = rp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

RP rp_gcd(RP a, RP b, u64 p) {
  a = rp_trim(std::move(a));
  b = rp_trim(std::move(b));
  while (rp_deg(b) >= 0) {
    // a mod b
    int db = rp_deg(b);
    u64 lcinv = powmod_u64(b[static_cast<size_t>(db)], p - 2, p);
    while (rp_deg(a) >= db) {
      int da = rp_deg(a);
      u64 c = mulmod_u64(a[static_cast<size_t>(da)], lcinv, p);
      for (int i = 0; i <= db; ++i) {
        auto& t = a[static_cast<size_t>(da - db + i)];
        t = (t + p - mulmod_u64(c, b[static_cast<size_t>(i)], p)) % p;
      }
      a = rp_trim(std::move(a));
      if (rp_deg(a) < 0) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test over F_p for a monic f.
bool rp_irreducible(const RP& f, u64 p) {
  int n = rp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  RP x{0, 1};
  // x^{p^n} == x mod f
  RP t = x;
  for (int i = 0; i < n; ++i) t = rp_powmod(t, p, f, p);
  RP diff = t;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  if (rp_deg(rp_trim(diff)) >= 0) return false;
  // for each prime r | n: gcd(x^{p^{n/r}} - x, f) == 1
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    RP s = x;
    for (int i = 0; i < n / r; ++i) s = rp_powmod(s, p, f, p);
    RP d = s;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    RP g = rp_gcd(d, f, p);
    if (rp_deg(g) > 0) return false;
  }
  return true;
}

constexpr u64 kMaxP = 1ULL << 20;        // keeps convolutions overflow-free
constexpr u64 kMaxSize = 1ULL << 62;     // p^k machine bound

FieldPtr make_rep(u64 p, unsigned k, std::vector<u32> mod) {
  auto rep = std::make_shared<FieldRep>();
  rep->p = p;
  rep->k = k;
  rep->psize = checked_pow(p, k, kMaxSize);
  rep->mod = std::move(mod);
  return rep;
}

std::vector<u32> smallest_irreducible(u64 p, unsigned k) {
  // Enumerate monic degree-k candidates in lexicographic order of the
  // coefficient vector (c_0, ..., c_{k-1}), comparing low-to-high; the
  // earliest coefficient is the most significant enumeration digit.
  std::vector<u32> c(k, 0);
  for (;;) {
    RP f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) f[i] = c[i];
    f[k] = 1;
    if (rp_irreducible(f, p)) {
      std::vector<u32> out(k + 1);
      for (unsigned i = 0; i < k; ++i) out[i] = c[i];
      out[k] = 1;
      return out;
    }
    // increment with c[k-1] as the fastest digit
    int i = static_cast<int>(k) - 1;
    while (i >= 0) {
      if (++c[static_cast<size_t>(i)] < p) break;
      c[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) throw integrity_error("no irreducible of degree " + std::to_string(k) + " over F_" + std::to_string(p));
  }
}

std::map<std::pair<u64, unsigned>, FieldPtr>& registry() {
  static std::map<std::pair<u64, unsigned>, FieldPtr> reg;
  return reg;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

Field Field::gf(u64 p) { return gf(p, 1); }

Field Field::gf(u64 p, unsigned k) {
  if (!is_prime(p)) throw domain_error("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxP) throw capped_error("characteristic " + std::to_string(p) + " exceeds the machine bound 2^20");
  if (k < 1) throw domain_error("extension degree must be >= 1");
  checked_pow(p, k, kMaxSize);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[{p, k}];
  if (!slot) {
    std::vector<u32> mod = k == 1 ? std::vector<u32>{0, 1} : smallest_irreducible(p, k);
    slot = make_rep(p, k, std::move(mod));
  }
  return Field(slot);
}

Field Field::with_modulus(u64 p, std::vector<u32> modulus) {
  if (!is_prime(p)) throw domain_error("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxP) throw capped_error("characteristic exceeds the machine bound 2^20");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw domain_error("modulus must be monic of degree >= 1");
  unsigned k = static_cast<unsigned>(modulus.size() - 1);
  RP f(modulus.begin(), modulus.end());
  if (k > 1 && !rp_irreducible(f, p)) throw domain_error("modulus is not irreducible over F_" + std::to_string(p));
  return Field(make_rep(p, k, std::move(modulus)));
}

u64 Field::p() const { return rep_->p; }
unsigned Field::k() const { return rep_->k; }
u64 Field::size() const { return rep_->psize; }
const std::vector<u32>& Field::modulus() const { return rep_->mod; }

Fe Field::zero() const { return Fe(rep_, rep_->zero()); }
Fe Field::one() const { return Fe(rep_, rep_->one()); }

Fe Field::from_int(i64 v) const {
  i64 m = static_cast<i64>(rep_->p);
  i64 r = v % m;
  if (r < 0) r += m;
  std::vector<u32> c(rep_->k, 0);
  c[0] = static_cast<u32>(r);
  return Fe(rep_, std::move(c));
}

Fe Field::make(const std::vector<i64>& coeffs) const {
  if (coeffs.size() > rep_->k) throw domain_error("too many coefficients for " + rep_->name());
  std::vector<u32> c(rep_->k, 0);
  i64 m = static_cast<i64>(rep_->p);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    i64 r = coeffs[i] % m;
    if (r < 0) r += m;
    c[i] = static_cast<u32>(r);
  }
  return Fe(rep_, std::move(c));
}

Fe Field::gen() const {
  if (rep_->k < 2) throw domain_error("prime field has no extension generator");
  std::vector<u32> c(rep_->k, 0);
  c[1] = 1;
  return Fe(rep_, std::move(c));
}

Fe Field::element_by_index(u64 idx) const {
  if (idx >= rep_->psize) throw domain_error("element index out of range");
  std::vector<u32> c(rep_->k, 0);
  for (unsigned i = 0; i < rep_->k; ++i) {
    c[i] = static_cast<u32>(idx % rep_->p);
    idx /= rep_->p;
  }
  return Fe(rep_, std::move(c));
}

u64 Field::index_of(const Fe& x) const {
  if (x.rep_ != rep_) throw domain_error("element belongs to a different field");
  u64 idx = 0;
  for (unsigned i = rep_->k; i-- > 0;) idx = idx * rep_->p + x.c_[i];
  return idx;
}

Fe Field::sample(Rng& rng) const { return element_by_index(rng.below(rep_->psize)); }

bool Field::operator==(const Field& o) const {
  if (rep_ == o.rep_) return true;
  if (!rep_ || !o.rep_) return false;
  return rep_->p == o.rep_->p && rep_->k == o.rep_->k && rep_->mod == o.rep_->mod;
}

std::string Field::str() const { return rep_->name(); }

// ---------------------------------------------------------------------------
// Fe
// ---------------------------------------------------------------------------

namespace {
const FieldRep& same_rep(const Fe& a, const Fe& b) {
  if (!a.valid() || !b.valid()) throw domain_error("operation on an uninitialized field element");
  if (a.field() != b.field()) throw domain_error("field mismatch: " + a.field().str() + " vs " + b.field().str());
  return *a.field().rep();
}
}  // namespace

bool Fe::is_zero() const { return rep_->is_zero(c_); }
bool Fe::is_one() const { return c_ == rep_->one(); }
Field Fe::field() const { return Field(rep_); }

u64 Fe::lift() const {
  if (rep_->k != 1) throw domain_error("lift() requires a prime field element");
  return c_[0];
}

Fe Fe::operator-() const { return Fe(rep_, rep_->neg(c_)); }
Fe Fe::inv() const { return Fe(rep_, rep_->inv(c_)); }

Fe Fe::pow(u64 e) const { return Fe(rep_, rep_->powv(c_, e)); }

Fe Fe::frobenius(u64 q) const {
  u64 p = rep_->p;
  u64 t = q;
  while (t > 1) {
    if (t % p) throw domain_error("frobenius power must be a power of the characteristic");
    t /= p;
  }
  if (q < 1) throw domain_error("frobenius power must be positive");
  return pow(q);
}

Fe operator+(const Fe& a, const Fe& b) {
  const auto& r = same_rep(a, b);
  return Fe(a.rep_, r.add(a.c_, b.c_));
}
Fe operator-(const Fe& a, const Fe& b) {
  const auto& r = same_rep(a, b);
  return Fe(a.rep_, r.sub(a.c_, b.c_));
}
Fe operator*(const Fe& a, const Fe& b) {
  const auto& r = same_rep(a, b);
  return Fe(a.rep_, r.mul(a.c_, b.c_));
}
Fe operator/(const Fe& a, const Fe& b) {
  const auto& r = same_rep(a, b);
  return Fe(a.rep_, r.mul(a.c_, r.inv(b.c_)));
}
bool operator==(const Fe& a, const Fe& b) {
  same_rep(a, b);
  return a.c_ == b.c_;
}
bool operator<(const Fe& a, const Fe& b) {
  same_rep(a, b);
  return a.c_ < b.c_;
}

std::string Fe::str() const {
  std::ostringstream os;
  if (rep_->k == 1) {
    os << c_[0];
    return os.str();
  }
  bool first = true;
  for (unsigned i = 0; i < rep_->k; ++i) {
    if (!c_[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) {
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// embed_hom lives in poly.cpp (it needs root finding).

Fe FieldHom::operator()(const Fe& x) const {
  if (src == dst) return x;
  const auto& c = x.coeffs();
  if (src.k() == 1) return dst.from_int(static_cast<i64>(c[0]));
  Fe acc = dst.zero();
  for (unsigned i = src.k(); i-- > 0;) acc = acc * gen_image + dst.from_int(static_cast<i64>(c[i]));
  return acc;
}

}  // namespace wiman
