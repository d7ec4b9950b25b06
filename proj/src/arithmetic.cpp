#include "kham/arithmetic.hpp"

#include <sstream>
#include <stdexcept>

#include "kham/error.hpp"

namespace kham {

Int floor_div(Int a, Int b) {
    if (b == 0) throw InvalidArgument("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
Int ceil(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

const char* to_string(Rounding r) { return r == Rounding::CeilCase ? "CeilCase" : "FloorCase"; }

void validate_nk(Int n, Int k) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (n < 3) throw InvalidArgument("n must be at least 3");
    if (k > n) throw InvalidArgument("k must not exceed n");
    if (n % k != 0) throw InvalidArgument("k must divide n");
}

namespace {

// Looser domain for the identities, which also make sense at n = 2.
void validate_divisible(Int n, Int k) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (n < k) throw InvalidArgument("n must be at least k");
    if (n % k != 0) throw InvalidArgument("k must divide n");
}

}  // namespace

Int theorem_threshold(Int n, Int k) {
    validate_nk(n, k);
    const Int parts = half_part_count(k);
    return ceil_div(n, 2) + floor_div(n + 2, 2 * parts) - n / k;
}

Rational cfgjl_bound(Int n, Int k) {
    validate_nk(n, k);
    const Int parts = half_part_count(k);
    return Rational(n, 2) + Rational(n, 2 * parts) - Rational(n / k);
}

bool is_exception(Int n, Int k) {
    validate_nk(n, k);
    return n % 4 == 0 && (k == 2 || 2 * k == n);
}

Int required_degree(Int n, Int k) { return theorem_threshold(n, k) + (is_exception(n, k) ? 1 : 0); }

bool ceil_congruence(Int n, Int k) {
    validate_nk(n, k);
    if (k % 2 == 0) return n % (k + 2) == k;
    if (n % 2 == 0) return n % (k + 1) == k - 1;
    const Int r = n % (k + 1);
    return r == k || (r % 2 == 1 && 2 * r <= k + 1);
}

bool ceil_congruence_as_printed(Int n, Int k) {
    validate_nk(n, k);
    if (k % 2 == 0) return n % (k + 2) == k;
    if (n % 2 == 0) return n % (k + 1) == k - 1;
    const Int r = n % (k + 1);
    return r == k - 1 || (r % 2 == 1 && 2 * r <= k + 1);
}

Rounding classify_rounding(Int n, Int k) {
    const Int d = theorem_threshold(n, k);
    const Rational bound = cfgjl_bound(n, k);
    const Rounding label = ceil_congruence(n, k) ? Rounding::CeilCase : Rounding::FloorCase;
    const Int expected = label == Rounding::CeilCase ? ceil(bound) : floor(bound);
    if (d != expected) {
        throw std::logic_error("threshold " + std::to_string(d) + " disagrees with " +
                               to_string(label) + " of " + to_string(bound));
    }
    return label;
}

bool check_eq4_identity(Int n, Int k) {
    validate_divisible(n, k);
    const Int parts = half_part_count(k);
    return floor_div(n + 2, 2 * parts) == floor_div(ceil_div(n + 1, 2), parts);
}

bool check_domcycle_threshold(Int n, Int k) {
    validate_nk(n, k);
    if (k < 3 || 2 * k > n) throw InvalidArgument("check_domcycle_threshold needs 3 <= k <= n/2");
    return Rational(theorem_threshold(n, k)) >= Rational(n + 2, 3);
}

ThresholdProfile threshold_profile(Int n, Int k) {
    ThresholdProfile p;
    p.n = n;
    p.k = k;
    p.m = n / k;
    p.theorem_threshold = theorem_threshold(n, k);
    p.cfgjl_bound = cfgjl_bound(n, k);
    p.rounding = classify_rounding(n, k);
    p.is_exception = is_exception(n, k);
    p.required_degree = required_degree(n, k);
    return p;
}

namespace {

class FactRecorder {
public:
    explicit FactRecorder(FactReport& report) : report_(report) {}

    void record(const std::string& fact, Int n, Int k, bool ok, const std::string& detail) {
        FactTally& t = tally(fact);
        ++t.evaluated;
        if (!ok) {
            ++t.violated;
            report_.violations.push_back({fact, n, k, detail});
        }
    }

private:
    FactTally& tally(const std::string& fact) {
        for (auto& t : report_.tallies)
            if (t.fact == fact) return t;
        report_.tallies.push_back({fact, 0, 0});
        return report_.tallies.back();
    }

    FactReport& report_;
};

void rounding_fact(FactRecorder& rec, Int n, Int k) {
    const Int d = theorem_threshold(n, k);
    const Rational bound = cfgjl_bound(n, k);
    const Int c = ceil(bound), f = floor(bound);
    const bool congruent = ceil_congruence(n, k);
    bool ok = (d == c || d == f);
    if (ok && c != f) ok = (d == c) == congruent;
    rec.record("rounding_characterization", n, k, ok,
               "D=" + std::to_string(d) + " bound=" + to_string(bound));
}

void odd_k_estimate(FactRecorder& rec, Int n, Int k, Int m) {
    const Rational lhs(theorem_threshold(n, k));
    const Rational common = Rational(n, 2) + Rational(n, k + 1) - Rational(m);
    const Rational middle = n % 2 == 1 ? common + Rational(1, 2) - Rational(k - 2, k + 1)
                                       : common - Rational(k - 3, k + 1);
    const Rational right = common - Rational(k - 3, k + 1);
    const bool ok = lhs >= middle && middle >= right;
    rec.record("odd_k_lower_estimate", n, k, ok,
               to_string(lhs) + " >= " + to_string(middle) + " >= " + to_string(right));
}

// coeff * floor((n+2)/den) - mult*m  >=  coeff*(n+2-slack)/den - mult*m  ==  closed
void floor_bound(FactRecorder& rec, const std::string& fact, Int n, Int k, Int m, Int coeff,
                 Int mult, Int den, Int slack, const Rational& closed) {
    const Rational lhs(coeff * floor_div(n + 2, den) - mult * m);
    const Rational mid = Rational(coeff * (n + 2 - slack), den) - Rational(mult * m);
    const bool floor_ok = lhs >= mid;
    const bool closed_ok = mid == closed;
    rec.record(fact, n, k, floor_ok && closed_ok,
               std::string(floor_ok ? "" : "floor bound fails; ") +
                   (closed_ok ? "" : "closed form differs; ") + to_string(lhs) + " >= " +
                   to_string(mid) + " = " + to_string(closed));
}

void floor_bounds(FactRecorder& rec, Int n, Int k, Int m) {
    if (k % 2 == 0) {
        floor_bound(rec, "floor_bound_even_double", n, k, m, 2, 1, k + 2, k,
                    Rational((m - 2) * (k - 2), k + 2));
        floor_bound(rec, "floor_bound_even_triple", n, k, m, 3, 2, k + 2, k,
                    Rational((m - 3) * (k - 4) - 6, k + 2));
    } else if (n % 2 == 0) {
        floor_bound(rec, "floor_bound_odd_double", n, k, m, 2, 1, k + 1, k - 1,
                    Rational((m - 2) * (k - 1) + 4, k + 1));
        floor_bound(rec, "floor_bound_odd_triple", n, k, m, 3, 2, k + 1, k - 1,
                    Rational((m - 3) * (k - 2) + 3, k + 1));
    }
}

void degree_sum_facts(FactRecorder& rec, Int n, Int k, Int m) {
    const Int d = theorem_threshold(n, k);
    const Rational rhs = Rational(n - m);  // (1 - 1/k) n
    if (k % 2 == 0 && n >= 3 * k)
        rec.record("degree_sum_even", n, k, Rational(2 * d) > rhs, "2D=" + std::to_string(2 * d));
    if (k % 2 == 1 && n >= 2 * k)
        rec.record("degree_sum_odd", n, k, Rational(2 * d) > rhs, "2D=" + std::to_string(2 * d));
    if (n >= 2 * k) {
        const Int triple_rhs = 2 * n - m - floor_div(n - 1, 2) - 2;  // (2 - 1/k) n - floor((n-1)/2) - 2
        rec.record("triple_degree", n, k, 3 * d >= triple_rhs,
                   "3D=" + std::to_string(3 * d) + " rhs=" + std::to_string(triple_rhs));
    }
}

void part_count_fact(FactRecorder& rec, Int n, Int k, Int m) {
    if (n < 2 * k) return;
    const Int d = theorem_threshold(n, k);
    const Int half_k = ceil_div(k, 2);
    const Int lhs = d + 1 - (half_k - 1) * m;
    const Int rhs = ceil_div(n, 2) + floor_div(n + 2, 2 * half_part_count(k)) + 1 - m * half_k;
    rec.record("part_count_lower", n, k, lhs >= rhs && rhs > 0,
               "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
}

// Lower bounds on n that make the threshold reach (n+2)/3, and the algebra that follows.
void long_cycle_bounds(FactRecorder& rec, Int n, Int k) {
    if (n < 2 * k || k < 3) return;
    if (k % 2 == 1) {
        if (k == 3 && (n == 6 || n == 9)) return;
        const Int den = k * k + k - 6;
        const Rational bound(2 * k * (5 * k - 7), den);
        const bool identity = Rational(10) - Rational(24 * k - 60, den) == bound;
        const bool range = n >= 10 && Rational(10) >= bound;
        const Rational slope = Rational(1, 6) - Rational(1, k * (k + 1));
        const bool zero = slope * bound - Rational(2, 3) - Rational(k - 3, k + 1) == Rational(0);
        rec.record("long_cycle_bound_odd", n, k, identity && range && zero, "bound=" + to_string(bound));
    } else {
        if (n == 8 && k == 4) return;
        const Int den = k * k + 2 * k - 12;
        const Rational bound(2 * k * (5 * k - 2), den);
        const bool identity = Rational(12) - Rational(2 * (k + 18) * (k - 4), den) == bound;
        const bool range = n >= 12 && Rational(12) >= bound;
        const Rational slope = Rational(1, 6) - Rational(2, k * (k + 2));
        const bool zero = slope * bound - Rational(2, 3) - Rational(k - 2, k + 2) == Rational(0);
        rec.record("long_cycle_bound_even", n, k, identity && range && zero, "bound=" + to_string(bound));
    }
}

void validate_ranges(Int k_max, Int m_max) {
    if (k_max < 2) throw InvalidArgument("k_max must be at least 2");
    if (m_max < 1) throw InvalidArgument("m_max must be at least 1");
}

}  // namespace

FactReport check_threshold_facts(Int k_max, Int m_max) {
    validate_ranges(k_max, m_max);
    FactReport report;
    report.k_max = k_max;
    report.m_max = m_max;
    FactRecorder rec(report);
    for (Int k = 2; k <= k_max; ++k) {
        for (Int m = 1; m <= m_max; ++m) {
            const Int n = m * k;
            floor_bounds(rec, n, k, m);
            if (n < 3) continue;
            rounding_fact(rec, n, k);
            if (k % 2 == 1 && k >= 3) odd_k_estimate(rec, n, k, m);
            if (k >= 3) {
                degree_sum_facts(rec, n, k, m);
                part_count_fact(rec, n, k, m);
                long_cycle_bounds(rec, n, k);
            }
        }
    }
    return report;
}

IdentityScan scan_eq4_identity(Int k_max, Int m_max) {
    validate_ranges(k_max, m_max);
    IdentityScan scan;
    for (Int k = 2; k <= k_max; ++k) {
        for (Int m = 1; m <= m_max; ++m) {
            ++scan.evaluated;
            if (!check_eq4_identity(m * k, k)) scan.failures.emplace_back(m * k, k);
        }
    }
    return scan;
}

IdentityScan scan_domcycle_threshold(Int k_max, Int m_max) {
    validate_ranges(k_max, m_max);
    IdentityScan scan;
    for (Int k = 3; k <= k_max; ++k) {
        for (Int m = 2; m <= m_max; ++m) {
            ++scan.evaluated;
            if (!check_domcycle_threshold(m * k, k)) scan.failures.emplace_back(m * k, k);
        }
    }
    return scan;
}

}  // namespace kham
