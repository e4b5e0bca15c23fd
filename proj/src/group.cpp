#include "projrep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "projrep/error.hpp"

namespace projrep {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

bool is_permutation(const Perm& p, int points) {
  if (static_cast<int>(p.size()) != points) return false;
  std::vector<char> seen(points, 0);
  for (int v : p) {
    if (v < 0 || v >= points || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Closure of `gens` inside g, as a sorted element list.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy small generating set: scan by decreasing element order, keep
// elements outside the current span.
std::vector<Elem> greedy_generators(int order, const std::vector<Elem>& table) {
  auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };
  std::vector<int> ord(order, 1);
  for (Elem x = 0; x < order; ++x) {
    Elem y = x;
    int k = 1;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    ord[x] = (x == 0) ? 1 : k - 1;
  }
  std::vector<Elem> cand(order);
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) { return ord[a] > ord[b]; });

  std::vector<Elem> gens;
  std::vector<char> span(order, 0);
  span[0] = 1;
  int span_size = 1;
  for (Elem c : cand) {
    if (span_size == order) break;
    if (span[c]) continue;
    gens.push_back(c);
    std::vector<Elem> elems{0};
    std::fill(span.begin(), span.end(), 0);
    span[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Elem s : gens) {
        Elem y = mul(elems[i], s);
        if (!span[y]) {
          span[y] = 1;
          elems.push_back(y);
        }
      }
    }
    span_size = static_cast<int>(elems.size());
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------- numbers

std::vector<int> prime_factors(long n) {
  std::vector<int> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

PiSet::PiSet(std::vector<int> primes) : primes_(std::move(primes)) {
  for (int p : primes_)
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "not a prime: " + std::to_string(p));
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PiSet::contains(int p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

bool PiSet::is_pi_number(long n) const { return pi_part(n) == n; }

long PiSet::pi_part(long n) const {
  long r = 1;
  for (int p : primes_)
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
  return r;
}

PiSet PiSet::complement_in(long n) const {
  std::vector<int> out;
  for (int p : prime_factors(n))
    if (!contains(p)) out.push_back(p);
  return PiSet(std::move(out));
}

std::string PiSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << primes_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- FiniteGroup

GroupPtr FiniteGroup::from_permutations(std::string name, int points, const std::vector<Perm>& generators,
                                        int cap) {
  if (points < 0) throw Error(ErrorCode::NotPermutation, "negative point count");
  for (const auto& p : generators)
    if (!is_permutation(p, points))
      throw Error(ErrorCode::NotPermutation, "generator is not a permutation of " + std::to_string(points) +
                                                 " points");

  Perm id(points);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Perm y = compose(elems[i], s);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (static_cast<int>(elems.size()) > cap)
          throw Error(ErrorCode::ClosureTooLarge, "closure exceeds cap " + std::to_string(cap));
      }
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = static_cast<int>(elems.size());
  g->points_ = points;
  g->perms_ = generators;
  const int n = g->order_;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  std::set<Elem> seen;
  for (const auto& s : generators) {
    Elem e = index.at(s);
    if (e != 0 && seen.insert(e).second) g->generators_.push_back(e);
  }
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_table(std::string name, int order, const std::vector<Elem>& table,
                                 std::vector<Elem> generators, std::vector<Elem>* relabel,
                                 bool verify) {
  if (order <= 0 || table.size() != static_cast<std::size_t>(order) * order)
    throw Error(ErrorCode::InvalidArgument, "table shape does not match order");
  for (Elem v : table)
    if (v < 0 || v >= order) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
  for (int a = 0; a < order && verify; ++a) {
    if (table[static_cast<std::size_t>(a) * order] != a || table[a] != a)
      throw Error(ErrorCode::InvalidArgument, "element 0 is not the identity");
    std::vector<char> row(order, 0), col(order, 0);
    for (int b = 0; b < order; ++b) {
      row[table[static_cast<std::size_t>(a) * order + b]] = 1;
      col[table[static_cast<std::size_t>(b) * order + a]] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != order || std::count(col.begin(), col.end(), 1) != order)
      throw Error(ErrorCode::InvalidArgument, "table is not a Latin square");
  }
  auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * order + b]; };

  {
    std::vector<Elem> cleaned;
    for (Elem s : generators)
      if (s != 0 && std::find(cleaned.begin(), cleaned.end(), s) == cleaned.end()) cleaned.push_back(s);
    generators = std::move(cleaned);
  }
  if (generators.empty() && order > 1) generators = greedy_generators(order, table);

  // Breadth-first relabelling.
  std::vector<Elem> newidx(order, -1), oldof;
  newidx[0] = 0;
  oldof.push_back(0);
  for (std::size_t i = 0; i < oldof.size(); ++i) {
    for (Elem s : generators) {
      Elem y = mul(oldof[i], s);
      if (newidx[y] < 0) {
        newidx[y] = static_cast<Elem>(oldof.size());
        oldof.push_back(y);
      }
    }
  }
  if (static_cast<int>(oldof.size()) != order)
    throw Error(ErrorCode::InvalidArgument, "generators do not generate the table group");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = order;
  g->points_ = 0;
  g->table_.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      g->table_[static_cast<std::size_t>(a) * order + b] = newidx[mul(oldof[a], oldof[b])];
  for (Elem s : generators) g->generators_.push_back(newidx[s]);
  if (verify && order <= 256 && !g->check_associative())
    throw Error(ErrorCode::InvalidArgument, "table is not associative");
  g->finish();
  if (relabel) *relabel = std::move(newidx);
  return g;
}

void FiniteGroup::finish() {
  const int n = order_;
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  elem_order_.assign(n, 1);
  for (int x = 1; x < n; ++x) {
    int k = 1;
    Elem y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    elem_order_[x] = k;
  }

  class_of_.assign(n, -1);
  classes_.clear();
  for (Elem x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    ConjClass c;
    c.representative = x;
    const int id = static_cast<int>(classes_.size());
    for (Elem g = 0; g < n; ++g) {
      Elem y = conj(x, g);
      if (class_of_[y] < 0) {
        class_of_[y] = id;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.centralizer_order = n / static_cast<int>(c.members.size());
    classes_.push_back(std::move(c));
  }
}

Elem FiniteGroup::pow(Elem x, long k) const {
  const long o = elem_order_[x];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Perm> FiniteGroup::regular_generators() const {
  std::vector<Perm> out;
  for (Elem s : generators_) {
    Perm p(order_);
    for (Elem x = 0; x < order_; ++x) p[x] = mul(x, s);
    out.push_back(std::move(p));
  }
  return out;
}

bool FiniteGroup::check_associative() const {
  const int n = order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), slot_(std::make_shared<Slot>()) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const int n = parent_->order();
  member_.assign(n, 0);
  for (Elem x : elements_) {
    if (x < 0 || x >= n) throw Error(ErrorCode::NotSubgroup, "element out of range");
    member_[x] = 1;
  }
  if (elements_.empty() || elements_[0] != 0) throw Error(ErrorCode::NotSubgroup, "missing identity");
  for (Elem a : elements_)
    for (Elem b : elements_)
      if (!member_[parent_->mul(a, b)]) throw Error(ErrorCode::NotSubgroup, "not closed under multiplication");
}

namespace {

// Subgroups with equal element sets share one local group, so representations
// built on either are interchangeable. An entry stays usable while both the
// parent and the local group are alive.
struct RegistryEntry {
  std::weak_ptr<const FiniteGroup> parent;
  std::weak_ptr<const FiniteGroup> group;
  std::shared_ptr<const Subgroup::Local> maps;  // group field unset
  bool expired() const { return parent.expired() || group.expired(); }
};

struct LocalRegistry {
  std::mutex mu;
  std::map<std::pair<const FiniteGroup*, std::vector<Elem>>, RegistryEntry> entries;
  std::size_t purge_at = 1024;
};

LocalRegistry& local_registry() {
  static LocalRegistry r;
  return r;
}

std::shared_ptr<const Subgroup::Local> build_local(const GroupPtr& parent, const std::vector<Elem>& elements) {
  auto local = std::make_shared<Subgroup::Local>();
  const int n = parent->order();
  const int m = static_cast<int>(elements.size());
  local->parent_of.assign(m, 0);
  local->local_of.assign(n, -1);
  if (m == n) {
    local->group = parent;
    std::iota(local->parent_of.begin(), local->parent_of.end(), 0);
    std::iota(local->local_of.begin(), local->local_of.end(), 0);
    return local;
  }
  std::vector<Elem> sorted_local(n, -1);
  for (int i = 0; i < m; ++i) sorted_local[elements[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = sorted_local[parent->mul(elements[i], elements[j])];
  std::vector<Elem> relabel;
  local->group = FiniteGroup::from_table(parent->name() + "_sub" + std::to_string(m), m, table, {}, &relabel,
                                         /*verify=*/false);
  for (int i = 0; i < m; ++i) {
    local->parent_of[relabel[i]] = elements[i];
    local->local_of[elements[i]] = relabel[i];
  }
  return local;
}

}  // namespace

const Subgroup::Local& Subgroup::local() const {
  std::call_once(slot_->once, [this] {
    LocalRegistry& reg = local_registry();
    auto key = std::make_pair(parent_.get(), elements_);
    auto reuse = [&](const RegistryEntry& e) {
      auto parent = e.parent.lock();
      auto group = e.group.lock();
      if (!group || parent != parent_) return false;
      auto local = std::make_shared<Local>(*e.maps);
      local->group = std::move(group);
      slot_->local = std::move(local);
      return true;
    };
    {
      std::lock_guard<std::mutex> lock(reg.mu);
      if (auto it = reg.entries.find(key); it != reg.entries.end() && reuse(it->second)) return;
    }
    auto built = build_local(parent_, elements_);
    std::lock_guard<std::mutex> lock(reg.mu);
    auto& entry = reg.entries[key];
    if (entry.maps && reuse(entry)) return;
    auto maps = std::make_shared<Local>(Local{nullptr, built->local_of, built->parent_of});
    entry = RegistryEntry{parent_, built->group, std::move(maps)};
    slot_->local = std::move(built);
    if (reg.entries.size() > reg.purge_at) {
      std::erase_if(reg.entries, [](const auto& kv) { return kv.second.expired(); });
      reg.purge_at = std::max<std::size_t>(1024, 2 * reg.entries.size());
    }
  });
  return *slot_->local;
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Elem> generators) {
  auto elems = closure(*parent, generators);
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

bool Subgroup::is_normal() const {
  for (Elem g : parent_->generators())
    for (Elem x : elements_)
      if (!contains(parent_->conj(x, g))) return false;
  return true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (Elem x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

Subgroup Subgroup::relative_to(const Subgroup& outer) const {
  std::vector<Elem> local;
  for (Elem x : elements_) {
    Elem l = outer.to_local(x);
    if (l < 0) throw Error(ErrorCode::NotSubgroup, "subgroup is not contained in the outer subgroup");
    local.push_back(l);
  }
  return Subgroup(outer.group(), std::move(local));
}

Subgroup Subgroup::lift(const Subgroup& local) const {
  std::vector<Elem> out;
  for (Elem l : local.elements()) out.push_back(to_parent(l));
  return Subgroup(parent_, std::move(out));
}

// ---------------------------------------------------------------- operations

bool is_pi_element(const FiniteGroup& g, Elem x, const PiSet& pi) { return pi.is_pi_number(g.element_order(x)); }

Subgroup centralizer(const GroupPtr& g, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) out.push_back(y);
  return Subgroup(g, std::move(out));
}

Subgroup centralizer_of(const GroupPtr& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (Elem x : h.group()->generators()) {
      Elem px = h.to_parent(x);
      if (g->mul(px, y) != g->mul(y, px)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (Elem x : h.elements())
      if (!h.contains(g->conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens;
  for (Elem x : a.group()->generators()) gens.push_back(a.to_parent(x));
  for (Elem x : b.group()->generators()) gens.push_back(b.to_parent(x));
  return Subgroup::generated(a.parent(), gens);
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const auto& G = *h.parent();
  std::vector<Elem> out;
  for (Elem x : h.elements()) out.push_back(G.mul(G.mul(g, x), G.inv(g)));
  return Subgroup(h.parent(), std::move(out));
}

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  const long target = PiSet({p}).pi_part(g->order());
  Subgroup P = Subgroup::trivial(g);
  // Climb: a p-subgroup that is not Sylow has p | |N(P):P|, so some x in
  // N(P) \ P has x^p in P, and <P, x> is a larger p-group.
  while (P.order() < target) {
    Subgroup N = normalizer(g, P);
    bool grown = false;
    for (Elem x : N.elements()) {
      if (P.contains(x) || !P.contains(g->pow(x, p))) continue;
      std::vector<Elem> gens = P.elements();
      gens.push_back(x);
      P = Subgroup::generated(g, gens);
      grown = true;
      break;
    }
    if (!grown) {
      // Exhaustive fallback: search any p-element extension of P.
      for (Elem x = 0; x < g->order() && !grown; ++x) {
        if (P.contains(x) || g->element_order(x) % p != 0) continue;
        std::vector<Elem> gens = P.elements();
        gens.push_back(x);
        Subgroup Q = Subgroup::generated(g, gens);
        if (PiSet({p}).is_pi_number(Q.order())) {
          P = std::move(Q);
          grown = true;
        }
      }
      if (!grown) throw Error(ErrorCode::CrossCheckMismatch, "Sylow climb stalled");
    }
  }
  return P;
}

Subgroup o_pi(const GroupPtr& g, const PiSet& pi) {
  Subgroup N = Subgroup::trivial(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : g->classes()) {
      if (!is_pi_element(*g, c.representative, pi) || N.contains(c.representative)) continue;
      std::vector<Elem> gens = N.elements();
      gens.insert(gens.end(), c.members.begin(), c.members.end());
      Subgroup M = Subgroup::generated(g, gens);
      if (pi.is_pi_number(M.order())) {
        N = std::move(M);
        changed = true;
        break;
      }
    }
  }
  return N;
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (!n.is_normal()) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const int order = g->order();
  std::vector<int> coset(order, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem k : n.elements()) coset[g->mul(x, k)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = coset[g->mul(reps[a], reps[b])];
  std::vector<Elem> gens;
  for (Elem s : g->generators()) gens.push_back(coset[s]);
  std::vector<Elem> relabel;
  Quotient q;
  q.group = FiniteGroup::from_table(g->name() + "/" + std::to_string(n.order()), m, table, gens, &relabel);
  q.projection.resize(order);
  for (Elem x = 0; x < order; ++x) q.projection[x] = relabel[coset[x]];
  q.section.resize(m);
  for (int c = 0; c < m; ++c) q.section[relabel[c]] = reps[c];
  return q;
}

Subgroup preimage(const GroupPtr& g, const Quotient& q, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g->order(); ++x)
    if (h.contains(q.projection[x])) out.push_back(x);
  return Subgroup(g, std::move(out));
}

NormalSeries pi_series(const GroupPtr& g, const PiSet& pi) {
  const PiSet pi_c = pi.complement_in(g->order());
  NormalSeries s;
  s.terms.push_back(Subgroup::trivial(g));
  bool tag_pi = true;
  while (!s.terms.back().is_whole()) {
    const Subgroup& cur = s.terms.back();
    Quotient q = quotient_group(g, cur);
    Subgroup k = o_pi(q.group, tag_pi ? pi : pi_c);
    Subgroup next = preimage(g, q, k);
    const bool grew = next.order() > cur.order();
    // Only the very first factor may be trivial (O_pi(G) = 1).
    if (!grew && s.terms.size() > 1) break;
    s.terms.push_back(std::move(next));
    s.factor_is_pi.push_back(tag_pi);
    tag_pi = !tag_pi;
  }
  s.reaches_group = s.terms.back().is_whole();
  return s;
}

bool is_pi_separable(const GroupPtr& g, const PiSet& pi) { return pi_series(g, pi).reaches_group; }

bool is_p_solvable(const GroupPtr& g, int p) { return is_pi_separable(g, PiSet({p})); }

bool is_solvable(const GroupPtr& g) {
  for (int p : prime_factors(g->order()))
    if (!is_p_solvable(g, p)) return false;
  return true;
}

namespace {

// A complement to the normal pi'-subgroup K inside L, where L/K is a
// pi-group. Built generator by generator: by Schur-Zassenhaus every partial
// complement H extends, so for each generator coset gK some x in gK keeps
// <H, x> a pi-group.
Subgroup complement_of_normal(const GroupPtr& g, const Subgroup& L, const Subgroup& K, const PiSet& pi) {
  const long target = L.order() / K.order();
  Subgroup H = Subgroup::trivial(g);
  for (Elem ls : L.group()->generators()) {
    if (H.order() == target) break;
    const Elem s = L.to_parent(ls);
    bool found = false;
    for (Elem k : K.elements()) {
      const Elem x = g->mul(s, k);
      if (H.contains(x)) {
        found = true;
        break;
      }
      std::vector<Elem> gens = H.elements();
      gens.push_back(x);
      Subgroup cand = Subgroup::generated(g, gens);
      if (pi.is_pi_number(cand.order())) {
        H = std::move(cand);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::ComplementSearchExhausted, "no complement lift in coset");
  }
  if (H.order() != target) throw Error(ErrorCode::ComplementSearchExhausted, "complement has wrong order");
  return H;
}

}  // namespace

Subgroup hall_subgroup(const GroupPtr& g, const PiSet& pi) {
  const long target = pi.pi_part(g->order());
  if (target == g->order()) return Subgroup::whole(g);
  if (target == 1) return Subgroup::trivial(g);
  if (!is_pi_separable(g, pi)) throw Error(ErrorCode::NotPiSeparable, g->name() + " is not " + pi.to_string() + "-separable");

  const PiSet pi_c = pi.complement_in(g->order());
  Subgroup K = o_pi(g, pi_c);
  if (!K.is_trivial()) {
    Quotient q = quotient_group(g, K);
    Subgroup hq = hall_subgroup(q.group, pi);
    Subgroup L = preimage(g, q, hq);
    return complement_of_normal(g, L, K, pi);
  }
  Subgroup M = o_pi(g, pi);
  if (M.is_trivial()) throw Error(ErrorCode::NotPiSeparable, "both O_pi and O_pi' are trivial");
  Quotient q = quotient_group(g, M);
  Subgroup hq = hall_subgroup(q.group, pi);
  return preimage(g, q, hq);
}

HallHigmanResult hall_higman_check(const GroupPtr& g, int p) {
  HallHigmanResult r;
  if (!is_p_solvable(g, p) || !o_pi(g, PiSet({p}).complement_in(g->order())).is_trivial()) {
    r.vacuous = true;
    return r;
  }
  Subgroup op = o_pi(g, PiSet({p}));
  r.holds = centralizer_of(g, op).is_subset_of(op);
  return r;
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> elements) {
  std::vector<Elem> gens;
  for (Elem x : elements)
    for (Elem h = 0; h < g->order(); ++h) gens.push_back(g->conj(x, h));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::generated(g, gens);
}

// Every normal subgroup is a join of normal closures of single elements.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> seen{{0}};
  std::vector<std::vector<Elem>> minimal;
  for (Elem x = 1; x < g->order(); ++x) {
    const Elem one[1] = {x};
    auto elems = normal_closure(g, one).elements();
    if (seen.insert(elems).second) minimal.push_back(std::move(elems));
  }
  std::vector<std::vector<Elem>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& a : frontier)
      for (const auto& b : minimal) {
        if (std::includes(a.begin(), a.end(), b.begin(), b.end())) continue;
        auto elems = join(Subgroup(g, a), Subgroup(g, b)).elements();
        if (seen.insert(elems).second) next.push_back(std::move(elems));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.emplace_back(g, e);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> two_generated_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> seen;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = a; b < g->order(); ++b) {
      const Elem gens[2] = {a, b};
      seen.insert(closure(*g, gens));
    }
  std::vector<std::vector<Elem>> sets(seen.begin(), seen.end());
  std::stable_sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<Subgroup> out;
  for (auto& s : sets) out.emplace_back(g, std::move(s));
  return out;
}

}  // namespace projrep
