#pragma once

// Executable checks of the degree and Clifford-theoretic statements for
// twisted group algebras, evaluated on (group, coclass, prime set) inputs.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "projrep/projective_rep.hpp"

namespace projrep {

enum class Verdict { Pass, Fail, Inapplicable };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string check;
  std::string group;
  std::vector<int> coclass;  // exponent vector over the multiplier basis
  long coclass_index = 0;
  std::string cocycle_hash;  // of the representative cocycle
  std::vector<int> primes;   // p or pi; empty when not applicable
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  Verdict verdict = Verdict::Pass;
  std::string reason;        // set for Fail and Inapplicable
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
};

struct VerifyConfig {
  Tolerances tol;
  std::uint64_t seed = 1;
  int h2_cap = kDefaultH2Cap;
};

/// Exact multiplier up to the cap; A5 and SL(2,5) from the catalog use known
/// values; anything else only exposes the trivial class.
MultiplierPtr multiplier_for(const GroupPtr& g, int cap = kDefaultH2Cap);

/// Everything computed once per (group, coclass).
struct TwistedContext {
  GroupPtr group;
  Coclass coclass;
  TwistedAlgebra algebra;
  RegularClassData regular;
  WedderburnData wedderburn;
  std::vector<ProjRep> irreps;  // parallel to wedderburn.degrees

  static TwistedContext build(const Coclass& c, const VerifyConfig& cfg);
  std::vector<int> degrees() const { return sorted_degrees(wedderburn); }
};

/// Counting, degree formula, divisibilities, prime-set chain and the Hall criterion.
CheckResult verify_basic(const TwistedContext& ctx, const VerifyConfig& cfg);

/// Clifford statements for one normal N and one V in Irr(N | res c).
CheckResult verify_clifford(const TwistedContext& ctx, const Subgroup& n, const ProjRep& v, const VerifyConfig& cfg);

/// p-solvable equivalence: p divides no degree <=> Sylow conditions over O_p'(G).
CheckResult verify_ito_michler(const TwistedContext& ctx, int p, const VerifyConfig& cfg);

/// Regular-O_p' special case: p divides no degree <=> normal abelian Sylow with trivial restriction.
CheckResult verify_regular_sylow(const TwistedContext& ctx, int p, const VerifyConfig& cfg);

/// pi-separable equivalence and the abelian pi-factor consequences.
CheckResult verify_pi_theorem(const TwistedContext& ctx, const PiSet& pi, const VerifyConfig& cfg);

/// A5, p = 2, trivial class: the Sylow conditions hold while 2 divides a degree.
CheckResult verify_a5_negative_control(const VerifyConfig& cfg);

struct DecompositionCertificate {
  explicit DecompositionCertificate(Subgroup final_subgroup) : j(std::move(final_subgroup)) {}

  Subgroup j;                            // final subgroup of G
  std::vector<ProjRep> factors;          // Y_1..Y_l on j.group()
  std::vector<int> constituent_degrees;  // dim V_i
  std::vector<int> inertia_orders;       // |J_i|
  std::vector<bool> factor_is_pi;        // series tags, when known
  int index = 1;                         // |G:J|
  int intertwiner = 0;                   // dim Hom(ind(Y_1 x ... x Y_l), V)
  double residual = 0.0;                 // worst numeric residual along the way
  bool restrictions_irreducible = false; // each Y_i on J cap N_i
  bool reconstructs() const { return intertwiner == 1; }
};

/// Recursive Clifford decomposition of an irreducible V over `ctx` along a
/// normal series. Throws ReconstructionFailure when the certificate does not verify.
DecompositionCertificate decompose_along_series(const TwistedContext& ctx, const ProjRep& v,
                                                const NormalSeries& series, const VerifyConfig& cfg);

struct PiDecomposition {
  explicit PiDecomposition(DecompositionCertificate c) : certificate(std::move(c)) {}

  DecompositionCertificate certificate;
  ProjRep v_pi, v_pi_prime;  // on certificate.j.group()
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();  // name -> bool
  bool ok = false;
};
PiDecomposition pi_decompose(const TwistedContext& ctx, const ProjRep& v, const PiSet& pi, const VerifyConfig& cfg);

/// pi_decompose on every irreducible of the context.
CheckResult verify_decomposition(const TwistedContext& ctx, const PiSet& pi, const VerifyConfig& cfg);

/// Transitivity through K, the projection formula against every irreducible of
/// G over `other`, and Mackey's formula for L, on every irreducible of H.
CheckResult verify_induction(const TwistedContext& ctx, const Subgroup& h, const Subgroup& k, const Subgroup& l,
                             const TwistedContext& other, const VerifyConfig& cfg);

/// Degrees and c-regular flags are unchanged by `count` random coboundary perturbations.
CheckResult verify_coboundary_invariance(const TwistedContext& ctx, int count, const VerifyConfig& cfg);

enum class CheckKind { Basic, Clifford, ItoMichler, RegularSylow, PiTheorem, Decomposition, Coboundary };
std::string_view to_string(CheckKind k);
CheckKind check_kind_from_string(std::string_view name);
std::vector<CheckKind> all_check_kinds();

struct SuiteConfig {
  VerifyConfig verify;
  std::vector<CheckKind> checks = all_check_kinds();
  std::vector<int> primes;                 // empty: every p dividing |G|
  std::vector<PiSet> pis;                  // empty: every pi with |pi| <= max_pi
  int max_pi = 2;
  int coboundary_perturbations = 20;
  int coboundary_order_cap = 24;
  int jobs = 0;                            // 0: OpenMP default
};

/// All selected checks over every coclass of every group, in input order.
std::vector<CheckResult> run_suite(const std::vector<GroupPtr>& groups, const SuiteConfig& cfg);

/// Nonempty subsets of the prime divisors of n with at most max_size primes.
std::vector<PiSet> prime_subsets(long n, int max_size);

}  // namespace projrep
