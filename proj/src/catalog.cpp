#include "projrep/catalog.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "projrep/error.hpp"

namespace projrep {

Perm perm_from_cycles(int points, const std::vector<std::vector<int>>& cycles) {
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return p;
}

GroupPtr cyclic_group(int n) {
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  return FiniteGroup::from_permutations("C" + std::to_string(n), std::max(n, 1), gens);
}

GroupPtr dihedral_group(int n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  std::vector<std::vector<int>> refl;
  for (int i = 1, j = n; i < j; ++i, --j) refl.push_back({i, j});
  return FiniteGroup::from_permutations("D" + std::to_string(n), n,
                                        {perm_from_cycles(n, {cyc}), perm_from_cycles(n, refl)});
}

GroupPtr symmetric_group(int n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1);
  return FiniteGroup::from_permutations("S" + std::to_string(n), n,
                                        {perm_from_cycles(n, {{1, 2}}), perm_from_cycles(n, {cyc})});
}

GroupPtr alternating_group(int n) {
  // 3-cycles (1 2 k) generate A_n.
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(perm_from_cycles(n, {{1, 2, k}}));
  return FiniteGroup::from_permutations("A" + std::to_string(n), n, gens);
}

GroupPtr metacyclic_group(std::string name, int m, int k, int r, int s) {
  // Element a^i b^j is point i + m*j. With b a = a^t b (t = r^-1 mod m):
  // (a^i b^j) a = a^(i + t^j) b^j and (a^i b^j) b = a^i b^(j+1), b^k = a^s.
  int t = 1;
  while ((static_cast<long>(t) * r) % m != 1 % m) ++t;
  std::vector<int> tp(k, 1);
  for (int j = 1; j < k; ++j) tp[j] = static_cast<int>((static_cast<long>(tp[j - 1]) * t) % m);
  const int n = m * k;
  Perm pa(n), pb(n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) {
      pa[i + m * j] = (i + tp[j]) % m + m * j;
      pb[i + m * j] = j + 1 < k ? i + m * (j + 1) : (i + s) % m;
    }
  return FiniteGroup::from_permutations(std::move(name), n, {pa, pb});
}

GroupPtr special_linear_2(int p) {
  // Points: nonzero vectors (x, y) as index x + p*y - 1; row vectors times matrices.
  const int n = p * p - 1;
  auto act = [&](int a, int b, int c, int d) {
    Perm perm(n);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        const int nx = (x * a + y * c) % p, ny = (x * b + y * d) % p;
        perm[x + p * y - 1] = nx + p * ny - 1;
      }
    return perm;
  };
  return FiniteGroup::from_permutations("SL(2," + std::to_string(p) + ")", n,
                                        {act(1, 1, 0, 1), act(0, p - 1, 1, 0)});
}

GroupPtr heisenberg_27() {
  auto act = [](auto f) {
    Perm perm(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        auto [nx, ny] = f(x, y);
        perm[x + 3 * y] = nx % 3 + 3 * (ny % 3);
      }
    return perm;
  };
  const Perm shift = act([](int x, int y) { return std::pair{x + 1, y}; });
  const Perm shear = act([](int x, int y) { return std::pair{x, y + x}; });
  return FiniteGroup::from_permutations("Heis27", 9, {shift, shear});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name) {
  auto perms_of = [](const GroupPtr& g, int& points) {
    if (!g->permutations().empty() || g->order() == 1) {
      points = g->points();
      return g->permutations();
    }
    points = g->order();
    return g->regular_generators();
  };
  int pa = 0, pb = 0;
  const std::vector<Perm> ga = perms_of(a, pa), gb = perms_of(b, pb);
  std::vector<Perm> gens;
  for (const auto& p : ga) {
    Perm q(pa + pb);
    for (int i = 0; i < pa; ++i) q[i] = p[i];
    for (int i = 0; i < pb; ++i) q[pa + i] = pa + i;
    gens.push_back(std::move(q));
  }
  for (const auto& p : gb) {
    Perm q(pa + pb);
    for (int i = 0; i < pa; ++i) q[i] = i;
    for (int i = 0; i < pb; ++i) q[pa + i] = pa + p[i];
    gens.push_back(std::move(q));
  }
  if (name.empty()) name = a->name() + "x" + b->name();
  return FiniteGroup::from_permutations(std::move(name), pa + pb, gens);
}

namespace {

GroupPtr a5_as_quotient() {
  GroupPtr sl = catalog_group("SL(2,5)");
  std::vector<Elem> center;
  for (Elem x = 0; x < sl->order(); ++x) {
    bool central = true;
    for (Elem s : sl->generators()) central = central && sl->mul(x, s) == sl->mul(s, x);
    if (central) center.push_back(x);
  }
  Quotient q = quotient_group(sl, Subgroup(sl, center));
  // Rename: quotient groups carry a derived label.
  return FiniteGroup::from_table("A5", q.group->order(), q.group->table(), q.group->generators(), nullptr, false);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, int order, bool solvable, std::function<GroupPtr()> f) {
    c.push_back({std::move(name), order, solvable, std::move(f)});
  };
  auto prod = [](std::string a, std::string b) {
    return [a, b] { return direct_product(catalog_group(a), catalog_group(b), a + "x" + b); };
  };

  for (int n = 1; n <= 24; ++n) add("C" + std::to_string(n), n, true, [n] { return cyclic_group(n); });
  add("C2xC2", 4, true, prod("C2", "C2"));
  add("C2xC4", 8, true, prod("C2", "C4"));
  add("C3xC3", 9, true, prod("C3", "C3"));
  add("C4xC4", 16, true, prod("C4", "C4"));
  add("C2xC2xC2", 8, true, prod("C2", "C2xC2"));
  for (int n = 3; n <= 12; ++n) add("D" + std::to_string(n), 2 * n, true, [n] { return dihedral_group(n); });
  add("Q8", 8, true, [] { return metacyclic_group("Q8", 4, 2, 3, 2); });
  add("Q16", 16, true, [] { return metacyclic_group("Q16", 8, 2, 7, 4); });
  add("C7:C3", 21, true, [] { return metacyclic_group("C7:C3", 7, 3, 2, 0); });
  add("C5:C4", 20, true, [] { return metacyclic_group("C5:C4", 5, 4, 2, 0); });
  add("Heis27", 27, true, [] { return heisenberg_27(); });
  add("C9:C3", 27, true, [] { return metacyclic_group("C9:C3", 9, 3, 4, 0); });
  add("S3", 6, true, [] { return symmetric_group(3); });
  add("S4", 24, true, [] { return symmetric_group(4); });
  add("A4", 12, true, [] { return alternating_group(4); });
  add("SL(2,3)", 24, true, [] { return special_linear_2(3); });
  add("SL(2,5)", 120, false, [] { return special_linear_2(5); });
  add("A5", 60, false, [] { return a5_as_quotient(); });
  add("C2xD4", 16, true, prod("C2", "D4"));
  add("C2xQ8", 16, true, prod("C2", "Q8"));
  add("C3xS3", 18, true, prod("C3", "S3"));
  add("S3xS3", 36, true, prod("S3", "S3"));
  add("C2xA4", 24, true, prod("C2", "A4"));
  add("C3xA4", 36, true, prod("C3", "A4"));
  add("C2xS4", 48, true, prod("C2", "S4"));
  add("C2xSL(2,3)", 48, true, prod("C2", "SL(2,3)"));
  add("D4xS3", 48, true, prod("D4", "S3"));
  add("C3xSL(2,3)", 72, true, prod("C3", "SL(2,3)"));
  add("S4xC3", 72, true, prod("S4", "C3"));
  add("A5xC2", 120, false, prod("A5", "C2"));
  add("S4xS3", 144, true, prod("S4", "S3"));
  add("Heis27xC3", 81, true, prod("Heis27", "C3"));
  add("C5:C4xC5", 100, true, prod("C5:C4", "C5"));

  std::stable_sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

GroupPtr catalog_group(const std::string& name) {
  static std::recursive_mutex mu;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& e : catalog())
    if (e.name == name) {
      GroupPtr g = e.build();
      cache.emplace(name, g);
      return g;
    }
  throw Error(ErrorCode::UnknownGroup, "no catalog group named " + name);
}

}  // namespace projrep
