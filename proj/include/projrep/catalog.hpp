#pragma once

// Built-in groups given by permutation generators.

#include <functional>
#include <string>
#include <vector>

#include "projrep/group.hpp"

namespace projrep {

struct CatalogEntry {
  std::string name;
  int order = 0;
  bool solvable = true;
  std::function<GroupPtr()> build;
};

/// Every built-in group, in a fixed order (by order, then name).
const std::vector<CatalogEntry>& catalog();

/// Cached construction by name; throws UnknownGroup.
GroupPtr catalog_group(const std::string& name);

// Constructors used by the catalog, exposed for tests.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);  // order 2n
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
/// <a, b | a^m, b^k = a^s, b^-1 a b = a^r>, order m*k, in its regular representation.
GroupPtr metacyclic_group(std::string name, int m, int k, int r, int s);
/// SL(2, p) acting on the nonzero vectors of F_p^2.
GroupPtr special_linear_2(int p);
/// Heisenberg group of order 27 (exponent 3) as affine maps of F_3^2.
GroupPtr heisenberg_27();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name = "");

/// Permutation from 1-based cycles on `points` points.
Perm perm_from_cycles(int points, const std::vector<std::vector<int>>& cycles);

}  // namespace projrep
