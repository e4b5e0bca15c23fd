#pragma once

// Finite groups on dense Cayley tables, subgroups, quotients, and the
// pi-separability toolkit (Sylow and Hall subgroups, O_pi, pi-series).

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace projrep {

using Elem = int;
using Perm = std::vector<int>;  // 0-based images of 0..points-1

inline constexpr int kDefaultOrderCap = 200;

struct ConjClass {
  Elem representative = 0;
  std::vector<Elem> members;  // ascending
  int centralizer_order = 1;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a Cayley table. Element 0 is the identity and the
/// remaining elements are numbered in breadth-first order from the identity,
/// right-multiplying by the generators in their given order. Conjugacy classes
/// and element orders are computed once at construction; instances are
/// immutable afterwards.
class FiniteGroup {
 public:
  /// Closure of permutation generators. The product x*y applies x first, then y.
  static GroupPtr from_permutations(std::string name, int points, const std::vector<Perm>& generators,
                                    int cap = kDefaultOrderCap);

  /// Builds a group from a multiplication table whose element 0 is the
  /// identity. Elements are relabelled into breadth-first order of
  /// `generators` (computed greedily when empty). When `relabel` is non-null it
  /// receives new_index[old_index]. `verify` enables the Latin-square and
  /// associativity checks (skipped for tables derived from a known group).
  static GroupPtr from_table(std::string name, int order, const std::vector<Elem>& table,
                             std::vector<Elem> generators = {}, std::vector<Elem>* relabel = nullptr,
                             bool verify = true);

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv_[g], x), g); }
  Elem pow(Elem x, long k) const;
  int element_order(Elem x) const { return elem_order_[x]; }

  const std::string& name() const { return name_; }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<Elem>& table() const { return table_; }
  /// Generator permutations for permutation-built groups, else empty.
  const std::vector<Perm>& permutations() const { return perms_; }
  int points() const { return points_; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(Elem x) const { return class_of_[x]; }
  bool is_abelian() const;

  /// Right-regular permutations of the generators (points = order()).
  std::vector<Perm> regular_generators() const;

  /// Brute-force associativity check over all triples.
  bool check_associative() const;

 private:
  FiniteGroup() = default;
  void finish();

  std::string name_;
  int order_ = 0;
  int points_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<int> elem_order_;
  std::vector<Elem> generators_;
  std::vector<Perm> perms_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
};

/// A subgroup of `parent`, stored as a sorted element set together with its
/// own FiniteGroup (re-indexed) and the index maps between the two.
class Subgroup {
 public:
  /// Validates closure under multiplication.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  static Subgroup generated(GroupPtr parent, std::span<const Elem> generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Elem x) const { return member_[x] != 0; }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == parent_->order(); }

  /// The subgroup as a group in its own right, built on first use and shared
  /// by all subgroups with the same elements. The whole group maps to the
  /// parent itself.
  const GroupPtr& group() const { return local().group; }
  Elem to_parent(Elem local_index) const { return local().parent_of[local_index]; }
  /// -1 when x is not a member.
  Elem to_local(Elem x) const { return local().local_of[x]; }

  bool is_normal() const;
  bool is_subset_of(const Subgroup& other) const;

  /// This subgroup viewed inside `outer.group()`; requires this <= outer.
  Subgroup relative_to(const Subgroup& outer) const;
  /// Maps a subgroup of group() back to a subgroup of parent().
  Subgroup lift(const Subgroup& local) const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

  struct Local {
    GroupPtr group;
    std::vector<Elem> local_of;
    std::vector<Elem> parent_of;
  };

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const Local> local;
  };
  const Local& local() const;

  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<char> member_;
  std::shared_ptr<Slot> slot_;
};

/// Set of primes pi; pi' is taken relative to the primes of a given order.
class PiSet {
 public:
  PiSet() = default;
  explicit PiSet(std::vector<int> primes);

  const std::vector<int>& primes() const { return primes_; }
  bool contains(int p) const;
  bool empty() const { return primes_.empty(); }
  bool is_pi_number(long n) const;
  long pi_part(long n) const;
  /// Primes of n outside pi.
  PiSet complement_in(long n) const;
  std::string to_string() const;

 private:
  std::vector<int> primes_;
};

struct NormalSeries {
  std::vector<Subgroup> terms;       // terms[0] trivial, ascending, each normal
  std::vector<bool> factor_is_pi;    // tag of terms[i+1]/terms[i]
  bool reaches_group = false;        // false: the group is not pi-separable
};

struct Quotient {
  GroupPtr group;                // G/N
  std::vector<Elem> projection;  // G -> G/N
  std::vector<Elem> section;     // smallest element of each coset
};

struct HallHigmanResult {
  bool holds = true;
  bool vacuous = false;
};

// Number-theoretic helpers.
std::vector<int> prime_factors(long n);
bool is_prime(long n);

Subgroup centralizer(const GroupPtr& g, Elem x);
/// C_G(H)
Subgroup centralizer_of(const GroupPtr& g, const Subgroup& h);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
/// g H g^-1
Subgroup conjugate(const Subgroup& h, Elem g);

Subgroup sylow_subgroup(const GroupPtr& g, int p);
Subgroup o_pi(const GroupPtr& g, const PiSet& pi);
NormalSeries pi_series(const GroupPtr& g, const PiSet& pi);
bool is_pi_separable(const GroupPtr& g, const PiSet& pi);
bool is_p_solvable(const GroupPtr& g, int p);
bool is_solvable(const GroupPtr& g);
Subgroup hall_subgroup(const GroupPtr& g, const PiSet& pi);

Quotient quotient_group(const GroupPtr& g, const Subgroup& n);
/// Preimage in G of a subgroup of G/N.
Subgroup preimage(const GroupPtr& g, const Quotient& q, const Subgroup& h);

HallHigmanResult hall_higman_check(const GroupPtr& g, int p);

/// All subgroups generated by at most two elements, deduplicated, ordered by
/// (order, element list). For small groups this is the full lattice.
std::vector<Subgroup> two_generated_subgroups(const GroupPtr& g);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> elements);
/// All normal subgroups, ordered by (order, elements).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

/// Elements whose order is a pi-number.
bool is_pi_element(const FiniteGroup& g, Elem x, const PiSet& pi);

}  // namespace projrep
