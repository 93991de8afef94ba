#include "wiman/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace wiman {

Perm Perm::identity(u32 n, std::string label) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0u);
  p.label = std::move(label);
  return p;
}

bool Perm::is_identity() const {
  for (u32 i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

u64 Perm::order() const {
  std::vector<bool> seen(img.size(), false);
  u64 ord = 1;
  for (u32 i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    u32 j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

u64 Perm::fixed() const {
  u64 f = 0;
  for (u32 i = 0; i < img.size(); ++i)
    if (img[i] == i) ++f;
  return f;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (u32 i = 0; i < img.size(); ++i) r.img[img[i]] = i;
  r.label = label + "^-1";
  return r;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.img.size() != b.img.size()) throw domain_error("permutation degree mismatch");
  Perm r;
  r.img.resize(a.img.size());
  for (u32 i = 0; i < a.img.size(); ++i) r.img[i] = a.img[b.img[i]];
  r.label = a.label + "*" + b.label;
  return r;
}

bool is_bijection(const std::vector<u32>& img) {
  std::vector<bool> hit(img.size(), false);
  for (u32 v : img) {
    if (v >= img.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {
struct VecHash {
  size_t operator()(const std::vector<u32>& v) const {
    return static_cast<size_t>(fnv1a(v.data(), v.size() * sizeof(u32)));
  }
};
}  // namespace

PermGroup close_generators(std::vector<Perm> generators, u64 ceiling) {
  if (generators.empty()) throw domain_error("closure needs at least one generator");
  u32 n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw domain_error("generators act on different sets");
    if (!is_bijection(g.img)) throw integrity_error("generator is not a bijection");
  }
  PermGroup out;
  out.generators = generators;
  std::unordered_map<std::vector<u32>, u32, VecHash> index;
  out.elements.push_back(Perm::identity(n));
  index.emplace(out.elements.front().img, 0u);
  for (size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm h = compose(g, out.elements[head]);
      h.label.clear();
      if (index.emplace(h.img, static_cast<u32>(out.elements.size())).second) {
        out.elements.push_back(std::move(h));
        if (out.elements.size() > ceiling)
          throw capped_error("group closure exceeded the ceiling " + std::to_string(ceiling));
      }
    }
  }
  out.order = out.elements.size();
  for (const auto& e : out.elements) ++out.census[e.order()];
  return out;
}

GroupTable make_table(const PermGroup& g) {
  if (g.order > 200) throw capped_error("group table capped at order 200, got " + std::to_string(g.order));
  GroupTable t;
  t.n = static_cast<u32>(g.order);
  std::unordered_map<std::vector<u32>, u32, VecHash> index;
  for (u32 i = 0; i < t.n; ++i) index.emplace(g.elements[i].img, i);
  t.mul.resize(static_cast<size_t>(t.n) * t.n);
  t.inv.resize(t.n);
  t.elt_order.resize(t.n);
  for (u32 i = 0; i < t.n; ++i) {
    t.elt_order[i] = g.elements[i].order();
    for (u32 j = 0; j < t.n; ++j) {
      auto it = index.find(compose(g.elements[i], g.elements[j]).img);
      if (it == index.end()) throw integrity_error("group is not closed under composition");
      t.mul[static_cast<size_t>(i) * t.n + j] = it->second;
    }
    auto it = index.find(g.elements[i].inverse().img);
    if (it == index.end()) throw integrity_error("group is not closed under inverse");
    t.inv[i] = it->second;
  }
  return t;
}

namespace {

std::vector<u32> close_indices(const GroupTable& t, std::vector<u32> seed) {
  std::set<u32> have(seed.begin(), seed.end());
  have.insert(0);  // identity index is 0 by construction
  std::vector<u32> queue(have.begin(), have.end());
  for (size_t head = 0; head < queue.size(); ++head) {
    for (u32 s : seed) {
      u32 x = t.at(s, queue[head]);
      if (have.insert(x).second) queue.push_back(x);
      u32 y = t.at(queue[head], s);
      if (have.insert(y).second) queue.push_back(y);
    }
  }
  return {have.begin(), have.end()};
}

}  // namespace

std::vector<std::vector<u32>> all_subgroups(const GroupTable& t, u64 order_divides) {
  u64 target = order_divides == 0 ? t.n : order_divides;
  std::set<std::vector<u32>> seen;
  std::vector<std::vector<u32>> queue;
  auto push = [&](std::vector<u32> s) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  push({0});
  for (u32 x = 0; x < t.n; ++x)
    if (target % t.elt_order[x] == 0) push(close_indices(t, {x}));
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<u32> base = queue[head];
    for (u32 x = 0; x < t.n; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<u32> gens = base;
      gens.push_back(x);
      auto k = close_indices(t, gens);
      if (target % k.size() != 0) continue;
      push(std::move(k));
    }
  }
  std::vector<std::vector<u32>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

S5Certificate certify_s5(const PermGroup& g) {
  S5Certificate cert;
  if (g.order != 120) {
    cert.diagnostics = "group order is " + std::to_string(g.order) + ", not 120";
    return cert;
  }
  GroupTable t = make_table(g);
  std::unordered_map<std::vector<u32>, u32, VecHash> index;
  for (u32 i = 0; i < t.n; ++i) index.emplace(g.elements[i].img, i);

  // subgroup search: generator subsets breadth-first by size, then the
  // general bounded enumeration as a fallback
  std::vector<u32> gen_idx;
  for (const auto& gen : g.generators) {
    auto it = index.find(gen.img);
    if (it == index.end()) throw integrity_error("generator missing from its own closure");
    gen_idx.push_back(it->second);
  }
  std::vector<u32> H;
  std::vector<u32> H_gens;
  u32 m = static_cast<u32>(gen_idx.size());
  for (u32 size = 1; size <= m && H.empty(); ++size) {
    for (u32 mask = 1; mask < (1u << m); ++mask) {
      if (static_cast<u32>(__builtin_popcount(mask)) != size) continue;
      std::vector<u32> sub;
      for (u32 i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(gen_idx[i]);
      auto k = close_indices(t, sub);
      if (k.size() == 24) {
        H = k;
        H_gens = sub;
        break;
      }
    }
  }
  if (H.empty()) {
    for (const auto& k : all_subgroups(t, 24)) {
      if (k.size() == 24) {
        H = k;
        H_gens = k;  // no smaller generating set recorded
        break;
      }
    }
  }
  if (H.empty()) {
    cert.diagnostics = "no subgroup of order 24 exists";
    return cert;
  }
  cert.subgroup = H;
  cert.subgroup_generators = H_gens;

  // label the 5 left cosets gH
  std::vector<u32> coset(t.n, UINT32_MAX);
  u32 labels = 0;
  for (u32 x = 0; x < t.n; ++x) {
    if (coset[x] != UINT32_MAX) continue;
    for (u32 h : H) coset[t.at(x, h)] = labels;
    ++labels;
  }
  if (labels != 5) {
    cert.diagnostics = "coset count is " + std::to_string(labels) + ", not 5";
    return cert;
  }
  cert.coset_of = coset;

  // coset representatives, then the action homomorphism
  std::vector<u32> rep(5, UINT32_MAX);
  for (u32 x = 0; x < t.n; ++x)
    if (rep[coset[x]] == UINT32_MAX) rep[coset[x]] = x;
  std::set<std::array<u32, 5>> image;
  u64 kernel = 0;
  for (u32 x = 0; x < t.n; ++x) {
    std::array<u32, 5> act{};
    bool ident = true;
    for (u32 c = 0; c < 5; ++c) {
      act[c] = coset[t.at(x, rep[c])];
      if (act[c] != c) ident = false;
    }
    image.insert(act);
    if (ident) ++kernel;
  }
  cert.image_order = image.size();
  cert.kernel_trivial = kernel == 1;
  cert.ok = cert.kernel_trivial && cert.image_order == 120;
  if (!cert.ok)
    cert.diagnostics = "coset action kernel size " + std::to_string(kernel) + ", image order " +
                       std::to_string(image.size());
  return cert;
}

}  // namespace wiman
