#ifndef VNSKEW_IDENTITIES_HPP
#define VNSKEW_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vnskew/poly_value.hpp"

namespace vnskew {

/// One factor psi_j(k + shift)^exponent of a first-type summand.
struct PsiFactor {
  int order;
  long shift;
  int exponent;
};

/// Describes sum_{k=1}^{n} k^c prod_i psi_{j_i}(k + a_i)^{b_i}.
struct FirstTypeSpec {
  int c = 0;
  std::vector<PsiFactor> factors;
  long n = 1;
};

enum class SecondTypeFn {
  kOne,          // f = 1                 (B2)
  kInvK,         // f = 1/k               (B3)
  kPsi0K,        // f = psi_0(k)          (B4)
  kPsi0KOverK,   // f = psi_0(k)/k        (B5)
  kPsi0NmKOverK, // f = psi_0(n+1-k)/k    (B6)
  kInvKPlusA,    // f = 1/(k+a)           (B7)
  kInvK2,        // f = 1/k^2             (B8)
  kPsi0KOverK2,  // f = psi_0(k)/k^2      (B9)
  kPsi0NmKOverK2,// f = psi_0(n+1-k)/k^2  (B10)
  kPsi1K,        // f = psi_1(k)          (B11)
};

/// Describes sum_{k=1}^{m} (n-k)!/(m-k)! f(k) with m <= n.
struct SecondTypeSpec {
  long m = 1;
  long n = 1;
  SecondTypeFn fn = SecondTypeFn::kOne;
  long a = 0;  // only used by kInvKPlusA
};

/// Exact term-by-term evaluation of a first-type sum.
PolyValue sum_type1_bruteforce(const FirstTypeSpec& spec);

/// Printed closed forms A2..A25 as functions of (n, a).
PolyValue sum_type1_closed(const std::string& id, long n, long a);

/// Semi closed forms A26..A29; the residual sum_{k=1}^{n} psi_0(k)/(k+a) is
/// evaluated directly.
PolyValue sum_type1_semi(const std::string& id, long n, long a);

/// Exact kernel-weighted evaluation of a second-type sum.
PolyValue sum_type2_bruteforce(const SecondTypeSpec& spec);

/// Printed closed forms B2..B6 as functions of (m, n).
PolyValue sum_type2_closed(const std::string& id, long m, long n);

/// Semi closed forms B7..B11 (B7 additionally takes the shift a); residual
/// basis sums are evaluated directly. Identities carrying psi_j(n-m) reject
/// m = n.
PolyValue sum_type2_semi(const std::string& id, long m, long n, long a = 0);

enum class MilgramVariant { kPair, kLimit, kSquaredPair };

/// Both sides of the paired-sum relation, its a -> b limit, and the
/// (psi_0^2 + psi_1)/(k+a) pair relation. The pair variant requires a != b.
std::pair<PolyValue, PolyValue> milgram_identities(MilgramVariant variant, long m,
                                                   long a, long b = 0);

/// Result of sweeping one identity over a parameter grid.
struct IdentityReport {
  std::string identity_id;
  std::string grid;
  long pass = 0;
  long fail = 0;
  struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
  };
  std::optional<Counterexample> counterexample;
};

/// Exhaustive exact comparison over an explicit grid; deterministic iteration
/// order, failures captured as data.
using PairEvaluator =
    std::function<std::pair<PolyValue, PolyValue>(long, long)>;
IdentityReport verify_grid(const std::string& id, const std::string& grid_desc,
                           const std::vector<std::pair<long, long>>& grid,
                           const PairEvaluator& eval);

/// All registered identity ids: A2..A29, B2..B11, M1..M3.
const std::vector<std::string>& identity_ids();

/// Sweeps one identity: A-family over 1 <= n <= max_n, 0 <= a <= max_a;
/// B-family over 1 <= m <= n <= max_n (B7 additionally over a <= 3);
/// M-family over m <= max_n and shifts <= max_a.
IdentityReport verify_identity(const std::string& id, long max_n, long max_a);

}  // namespace vnskew

#endif  // VNSKEW_IDENTITIES_HPP
