#pragma once

// Exact evaluation of the degree thresholds for balanced k-partite graphs and
// the numerical facts behind them. Integer and rational arithmetic
// only; nothing in this header touches floating point.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace kham {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int floor(const Rational& r);
Int ceil(const Rational& r);
std::string to_string(const Rational& r);

/// ceil((k+1)/2): the number of parts the extremal independent set spreads over.
inline Int half_part_count(Int k) { return (k + 2) / 2; }

/// Throws InvalidArgument unless n >= 3, 2 <= k <= n and k | n.
void validate_nk(Int n, Int k);

/// ceil(n/2) + floor((n+2) / (2 ceil((k+1)/2))) - n/k.
Int theorem_threshold(Int n, Int k);

/// n/2 + n/(2 ceil((k+1)/2)) - n/k, the earlier strict-inequality bound.
Rational cfgjl_bound(Int n, Int k);

/// (k = 2 and 4 | n) or (k = n/2 and 4 | n).
bool is_exception(Int n, Int k);

/// Minimum degree that guarantees a Hamiltonian cycle: threshold, plus one in the exception regime.
Int required_degree(Int n, Int k);

enum class Rounding { CeilCase, FloorCase };
const char* to_string(Rounding r);

/// Residue characterization of when the threshold equals the ceiling of cfgjl_bound.
///   k even:        n = k   (mod k+2)
///   k odd, n even: n = k-1 (mod k+1)
///   k odd, n odd:  n = j   (mod k+1), j in {k} u {1, 3, 5, ... <= (k+1)/2}
bool ceil_congruence(Int n, Int k);

/// Same as ceil_congruence but with the residue set for odd n taken literally as
/// {k-1, 1, 3, ..., (k+1)/2}; kept only so tests can show where it misclassifies.
bool ceil_congruence_as_printed(Int n, Int k);

/// Label from the congruence, after asserting the threshold really equals the
/// matching rounding of cfgjl_bound (std::logic_error otherwise). When the bound is
/// an integer both roundings coincide and the congruence decides the label.
Rounding classify_rounding(Int n, Int k);

/// floor((n+2) / (2 ceil((k+1)/2))) == floor(ceil((n+1)/2) / ceil((k+1)/2)).
bool check_eq4_identity(Int n, Int k);

/// threshold >= (n+2)/3, compared as rationals. Requires 3 <= k <= n/2.
bool check_domcycle_threshold(Int n, Int k);

struct ThresholdProfile {
    Int n = 0;
    Int k = 0;
    Int m = 0;
    Int theorem_threshold = 0;
    Rational cfgjl_bound;
    Rounding rounding = Rounding::FloorCase;
    bool is_exception = false;
    Int required_degree = 0;
};

ThresholdProfile threshold_profile(Int n, Int k);

struct FactViolation {
    std::string fact;
    Int n = 0;
    Int k = 0;
    std::string detail;
};

struct FactTally {
    std::string fact;
    std::int64_t evaluated = 0;
    std::int64_t violated = 0;
};

struct FactReport {
    Int k_max = 0;
    Int m_max = 0;
    std::vector<FactTally> tallies;
    std::vector<FactViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Evaluates every threshold fact (rounding characterization, odd-k estimate,
/// the four floor bounds with their closed forms, the three degree-sum inequalities)
/// plus the part-count inequality used for the successor sets, over
/// 2 <= k <= k_max, 1 <= m <= m_max with n = mk, wherever each fact's hypotheses hold.
FactReport check_threshold_facts(Int k_max, Int m_max);

struct IdentityScan {
    std::int64_t evaluated = 0;
    std::vector<std::pair<Int, Int>> failures;  // (n, k)
};

IdentityScan scan_eq4_identity(Int k_max, Int m_max);

/// All (n, k) in range (3 <= k, n = mk >= 2k) where check_domcycle_threshold is false.
IdentityScan scan_domcycle_threshold(Int k_max, Int m_max);

}  // namespace kham
