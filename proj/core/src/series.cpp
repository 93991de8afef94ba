#include "wiman/series.hpp"

#include <algorithm>
#include <sstream>

namespace wiman {

void Series::set(unsigned i, const Fe& v) {
  if (i >= c_.size()) throw domain_error("series coefficient beyond truncation");
  c_[i] = v;
}

int Series::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Series operator+(const Series& a, const Series& b) {
  unsigned n = std::min(a.trunc(), b.trunc());
  Series r(a.f_, n);
  for (unsigned i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  unsigned n = std::min(a.trunc(), b.trunc());
  Series r(a.f_, n);
  for (unsigned i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  unsigned n = std::min(a.trunc(), b.trunc());
  Series r(a.f_, n);
  for (unsigned i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series Series::operator*(const Fe& s) const {
  Series r(f_, trunc());
  for (unsigned i = 0; i < trunc(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Series Series::shifted_down(unsigned m) const {
  int o = ord();
  if (o >= 0 && static_cast<unsigned>(o) < m) throw domain_error("series not divisible by s^" + std::to_string(m));
  if (m > trunc()) throw domain_error("shift below truncation");
  Series r(f_, trunc() - m);
  for (unsigned i = 0; i + m < trunc(); ++i) r.c_[i] = c_[i + m];
  return r;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw domain_error("series inverse needs a unit constant term");
  Series r(f_, trunc());
  Fe inv0 = c_[0].inv();
  r.c_[0] = inv0;
  for (unsigned i = 1; i < trunc(); ++i) {
    Fe acc = f_.zero();
    for (unsigned j = 1; j <= i; ++j) acc = acc + c_[j] * r.c_[i - j];
    r.c_[i] = -(acc * inv0);
  }
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < trunc(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")s^" << i;
  }
  if (first) os << "0";
  os << " + O(s^" << trunc() << ")";
  return os.str();
}

}  // namespace wiman
