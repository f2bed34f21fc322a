// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mtg/rational.hpp"

namespace mtg {

// A number of the form  unit + sum_i coeff_i * sqrt(p_i)  with rational
// coefficients and pairwise distinct primes p_i.  The set
// {1, sqrt(p_1), sqrt(p_2), ...} is linearly independent over Q, so the value
// is zero iff every stored coefficient is zero; equality tests are plain
// coefficient comparisons and need no numerics.
//
// Sign queries on nonzero values with irrational parts are decided through
// guaranteed rational enclosures of each sqrt(p), refined by doubling the
// fractional bit count until the enclosure excludes zero.
class ExactReal {
public:
    ExactReal() : unit_(0) {}
    ExactReal(long value) : unit_(value) {}           // NOLINT(runtime/explicit)
    ExactReal(const Rat& value) : unit_(value) {}     // NOLINT(runtime/explicit)

    // sqrt(p) for a prime p.  Throws InputError if p is not prime.
    static ExactReal sqrt_prime(long p);

    // General constructor; keys of root_coeffs must be prime.  Zero
    // coefficients are dropped.  Throws InputError on a non-prime key.
    static ExactReal make(const Rat& unit, const std::map<long, Rat>& root_coeffs);

    const Rat& unit() const { return unit_; }
    // Ascending prime order, nonzero coefficients only.
    const std::vector<std::pair<long, Rat>>& roots() const { return roots_; }

    bool is_zero() const { return roots_.empty() && unit_ == 0; }
    bool is_rational() const { return roots_.empty(); }

    ExactReal operator-() const;
    ExactReal& operator+=(const ExactReal& rhs);
    ExactReal& operator-=(const ExactReal& rhs);
    friend ExactReal operator+(ExactReal lhs, const ExactReal& rhs) { lhs += rhs; return lhs; }
    friend ExactReal operator-(ExactReal lhs, const ExactReal& rhs) { lhs -= rhs; return lhs; }
    friend ExactReal operator*(const Rat& s, const ExactReal& x);

    bool operator==(const ExactReal& rhs) const {
        return unit_ == rhs.unit_ && roots_ == rhs.roots_;
    }
    bool operator!=(const ExactReal& rhs) const { return !(*this == rhs); }

    // Exact sign: -1, 0, +1.  Throws LimitError if the enclosure still
    // straddles zero at the precision cap (kMaxSignBits fractional bits).
    int sign() const;

    // Guaranteed enclosure [lo, hi] containing the value, using frac_bits
    // fractional bits per radical.  Enclosures at higher bit counts nest.
    std::pair<Rat, Rat> enclosure(int frac_bits) const;

    // Enclosure of width at most 10^-decimal_digits.
    std::pair<Rat, Rat> approximate(int decimal_digits) const;

    // Decimal rendering of the midpoint, for display only.
    std::string to_decimal_string(int decimal_digits = 12) const;

    static constexpr int kMaxSignBits = 4096;

private:
    Rat unit_;
    std::vector<std::pair<long, Rat>> roots_;
};

// Three-way comparison: -1 if x < y, 0 if equal, +1 if x > y.
int exact_cmp(const ExactReal& x, const ExactReal& y);

inline bool operator<(const ExactReal& x, const ExactReal& y)  { return exact_cmp(x, y) < 0; }
inline bool operator>(const ExactReal& x, const ExactReal& y)  { return exact_cmp(x, y) > 0; }
inline bool operator<=(const ExactReal& x, const ExactReal& y) { return exact_cmp(x, y) <= 0; }
inline bool operator>=(const ExactReal& x, const ExactReal& y) { return exact_cmp(x, y) >= 0; }

// A certified positive rational lower bound on min |a - v| over all anchor /
// value pairs with v != a.  Pairs that coincide exactly are skipped; if every
// pair coincides, throws CoincidenceError.  Values and anchors may repeat.
Rat min_positive_gap(const std::vector<ExactReal>& values,
                     const std::vector<ExactReal>& anchors);

bool is_prime(long p);

}  // namespace mtg
