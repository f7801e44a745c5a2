#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stex/bigfloat.hpp"
#include "stex/params.hpp"

namespace stex {

/// Continued fraction x = [a0; a1, a2, ...] with exact big-integer
/// convergents p_n/q_n (n = 0 is a0/1).  The recurrence guarantees the
/// determinant identity p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1}.
struct ContinuedFraction {
  BigInt a0;
  std::vector<BigInt> quotients;                        // a_1, a_2, ...
  std::vector<std::pair<BigInt, BigInt>> convergents;   // (p_n, q_n)
  /// set when the requested depth exceeded what the input's precision
  /// determines (real input only)
  bool precision_exhausted = false;
  /// set by construct_L_tilde: the value is a truncation of an infinite
  /// expansion, i.e. irrational by construction
  bool constructed = false;
};

/// Exact value of the deepest convergent.
BigRat cf_value(const ContinuedFraction& cf);

/// Open interval containing every continuation of the expansion: the value
/// of any infinite CF extending this one lies strictly between the last
/// two convergents.
std::pair<BigRat, BigRat> cf_enclosure(const ContinuedFraction& cf);

/// Checks p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1} for all n.
bool cf_determinant_ok(const ContinuedFraction& cf);

/// Adds the integer z to the value: a0 += z, p_n += z q_n.
ContinuedFraction cf_shift(const ContinuedFraction& cf, const BigInt& z);

/// Expansion of a real to `depth` partial quotients.  The input is treated
/// as an interval [x-r, x+r] with r at the working-precision noise floor;
/// quotients are emitted only while both endpoints agree, otherwise the
/// expansion stops early with precision_exhausted set.
ContinuedFraction cf_expand(const BigFloat& x, int depth);

/// Exact expansion of a rational; terminates.  Terminating expansions are
/// returned in the form ending in a quotient of 1 (e.g. 355/113 ->
/// [3; 7, 15, 1]), the truncation-of-an-infinite-expansion convention.
ContinuedFraction cf_expand(const BigRat& x, int depth);

enum class ArithmeticSet { L, L_tilde, C_alpha, B_alpha };
enum class Verdict { witnessed_yes, no_witness_up_to_bound };

/// Outcome of a finite membership scan.  A witnessed_yes lists the indices
/// that satisfied the test; it is evidence consistent with membership, not
/// a proof (the defining conditions quantify over infinitely many n).
struct MembershipVerdict {
  ArithmeticSet set;
  Verdict verdict = Verdict::no_witness_up_to_bound;
  std::vector<BigInt> witness;  // satisfying quotient indices n, or shifts n
  BigFloat b = 0;               // parameters the scan used (when applicable)
  BigFloat eps = 0;
};

/// Scan for quotients with a_{n+1} > b^{q_n} (n >= 1), the classical
/// Liouville-type growth test.
MembershipVerdict test_L(const ContinuedFraction& cf, const BigFloat& b);

/// Scan for quotients with a_{n+1} > b^{q_n ln(q_n)^{1+eps}} (n >= 1).
MembershipVerdict test_L_tilde(const ContinuedFraction& cf, const BigFloat& b,
                               const BigFloat& eps);

struct LtConstructConfig {
  int levels = 3;
  /// raises the final quotient to at least this value; the defining
  /// inequality still holds (only a lower bound on the quotient), but the
  /// value approximates its deepest predecessor far better than required —
  /// this is what makes the divergence witness numerically reachable
  BigInt min_last_quotient = 0;
  /// ResourceError if a quotient would exceed this many bits
  long max_quotient_bits = 1 << 20;
};

/// Builds [0; 2, a_2, ..., a_levels] with
/// a_{n+1} = ceil(b^{q_n ln(q_n)^{1+eps}}) + 1, so every constructed level
/// satisfies the growth inequality of test_L_tilde by a strict margin.
ContinuedFraction construct_L_tilde(const BigFloat& b, const BigFloat& eps,
                                    const LtConstructConfig& cfg = {});

/// The resonance set: fractional parts rho = {l/alpha}.  Exact rational
/// alpha = m/n gives {j/m : 1 <= j <= m-1}, each paired with the smallest
/// positive l producing it; irrational alpha gives {l/alpha} for
/// 0 < |l| <= search_bound.  Sorted by value.
std::vector<std::pair<long, BigFloat>> set_C(const StableParams& p,
                                             long search_bound);

/// Scan n = 1..n_max for ||alpha rho + n alpha|| < n^{-ln ln(1+n)},
/// evaluated literally at working precision (n = 1 gives threshold 1).
MembershipVerdict test_B_alpha(const BigFloat& alpha, const BigFloat& rho,
                               long n_max);

struct WitnessResult {
  BigFloat lower_bound;  // bound on |a_{0,q} x^q|
  bool exceeds_one = false;
  BigInt q;
};

/// Exact-arithmetic lower bound
///   |a_{0,q} x^q| > (sin(pi rho)/pi) (1/(2q)!) prod_j ||alpha(rho+j-1)||
///                   * x^q / (pi ||alpha q||)
/// for a constructed alpha in (1,2).  All ||.|| factors are bounded from
/// the exact convergent enclosure of alpha (lower bounds in the product,
/// an upper bound in the denominator), never from a floating alpha, so the
/// result is a certified lower bound up to the sin/pi rounding margin.
/// q must be one of the convergent denominators.
WitnessResult divergence_witness(const ContinuedFraction& alpha_cf,
                                 const BigFloat& rho, const BigFloat& x,
                                 const BigInt& q);

/// Smallest-l solution of rho + k = l/alpha with 1 <= l <= l_bound,
/// |k| <= k_bound (exact for rational alpha, tolerance tol otherwise).
std::optional<std::pair<long, long>> doney_search(const StableParams& p,
                                                  long k_bound, long l_bound,
                                                  const BigFloat& tol =
                                                      BigFloat("1e-12"));

struct InhomApprox {
  long l = 0;
  BigFloat approx_rho;  // {l/alpha}
  BigFloat error;       // |rho - {l/alpha}|
};

/// Best inhomogeneous approximation of rho by {l/alpha} over |l| <= q_bound
/// (bounded search in place of Cassels' algorithm).  Ties go to smaller |l|.
InhomApprox inhom_approx(const Alpha& alpha, const BigFloat& rho,
                         long q_bound);

}  // namespace stex
