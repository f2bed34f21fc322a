// SPDX-License-Identifier: Apache-2.0
#include "mtg/exact.hpp"

#include <algorithm>
#include <sstream>

#include "mtg/errors.hpp"

namespace mtg {

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
    // mpq_class parses "num" and "num/den" but tolerates leading whitespace
    // and does not canonicalize; validate shape first.
    if (text.empty()) throw InputError("empty rational literal");
    const auto bad = text.find_first_not_of("-0123456789/");
    if (bad != std::string::npos)
        throw InputError("bad character in rational literal: " + text);
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw InputError("unparsable rational literal: " + text);
    if (q.get_den() == 0) throw InputError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ExactReal ExactReal::sqrt_prime(long p) {
    if (!is_prime(p)) throw InputError("radicand is not prime: " + std::to_string(p));
    ExactReal x;
    x.roots_.emplace_back(p, Rat(1));
    return x;
}

ExactReal ExactReal::make(const Rat& unit, const std::map<long, Rat>& root_coeffs) {
    ExactReal x;
    x.unit_ = unit;
    for (const auto& [p, c] : root_coeffs) {
        if (!is_prime(p)) throw InputError("radicand is not prime: " + std::to_string(p));
        if (c != 0) x.roots_.emplace_back(p, c);
    }
    return x;  // std::map iteration already gives ascending primes
}

ExactReal ExactReal::operator-() const {
    ExactReal x(*this);
    x.unit_ = -x.unit_;
    for (auto& [p, c] : x.roots_) c = -c;
    return x;
}

ExactReal& ExactReal::operator+=(const ExactReal& rhs) {
    unit_ += rhs.unit_;
    std::vector<std::pair<long, Rat>> merged;
    merged.reserve(roots_.size() + rhs.roots_.size());
    auto a = roots_.begin();
    auto b = rhs.roots_.begin();
    while (a != roots_.end() || b != rhs.roots_.end()) {
        if (b == rhs.roots_.end() || (a != roots_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == roots_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rat c = a->second + b->second;
            if (c != 0) merged.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    roots_ = std::move(merged);
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& rhs) { return *this += -rhs; }

ExactReal operator*(const Rat& s, const ExactReal& x) {
    if (s == 0) return ExactReal();
    ExactReal y(x);
    y.unit_ *= s;
    for (auto& [p, c] : y.roots_) c *= s;
    return y;
}

std::pair<Rat, Rat> ExactReal::enclosure(int frac_bits) const {
    // floor(sqrt(p * 4^B)) / 2^B <= sqrt(p) < (floor(...) + 1) / 2^B,
    // so each radical gets a rational sandwich of width 2^-B.
    Rat lo = unit_, hi = unit_;
    mpz_class denom = mpz_class(1) << frac_bits;
    for (const auto& [p, c] : roots_) {
        mpz_class rad = mpz_class(p) << (2 * frac_bits);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
        Rat r_lo(root, denom);
        r_lo.canonicalize();
        Rat r_hi(root + 1, denom);
        r_hi.canonicalize();
        if (c > 0) {
            lo += c * r_lo;
            hi += c * r_hi;
        } else {
            lo += c * r_hi;
            hi += c * r_lo;
        }
    }
    return {lo, hi};
}

int ExactReal::sign() const {
    if (roots_.empty()) return sgn(unit_);
    // Nonzero coefficients on independent radicals force a nonzero value, so
    // refinement terminates unless the value is absurdly close to zero.
    for (int bits = 32; bits <= kMaxSignBits; bits *= 2) {
        auto [lo, hi] = enclosure(bits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw LimitError("sign undecided at " + std::to_string(kMaxSignBits) +
                     " fractional bits");
}

std::pair<Rat, Rat> ExactReal::approximate(int decimal_digits) const {
    if (decimal_digits < 1) throw InputError("decimal_digits must be >= 1");
    if (roots_.empty()) return {unit_, unit_};
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(decimal_digits));
    Rat width_cap(1, p10);
    width_cap.canonicalize();
    constexpr int kMaxApproxBits = 1 << 22;
    for (int bits = 16; bits <= kMaxApproxBits; bits *= 2) {
        auto [lo, hi] = enclosure(bits);
        if (hi - lo <= width_cap) return {lo, hi};
    }
    throw LimitError("approximation width not reached at the bit cap");
}

std::string ExactReal::to_decimal_string(int decimal_digits) const {
    auto [lo, hi] = approximate(decimal_digits);
    Rat mid = (lo + hi) / 2;
    mpf_class f(mid, 256);
    mp_exp_t exp10 = 0;
    std::string digits = f.get_str(exp10, 10, static_cast<size_t>(decimal_digits));
    if (digits.empty()) return "0";
    std::string sign_part;
    if (digits[0] == '-') {
        sign_part = "-";
        digits.erase(digits.begin());
    }
    std::ostringstream out;
    out << sign_part;
    if (exp10 <= 0) {
        out << "0." << std::string(static_cast<size_t>(-exp10), '0') << digits;
    } else if (static_cast<size_t>(exp10) >= digits.size()) {
        out << digits << std::string(static_cast<size_t>(exp10) - digits.size(), '0');
    } else {
        out << digits.substr(0, static_cast<size_t>(exp10)) << "."
            << digits.substr(static_cast<size_t>(exp10));
    }
    return out.str();
}

int exact_cmp(const ExactReal& x, const ExactReal& y) {
    if (x == y) return 0;
    return (x - y).sign();
}

namespace {

// Positive rational lower bound on |d| for nonzero d.
Rat abs_lower_bound(const ExactReal& d) {
    if (d.is_rational()) return abs(d.unit());
    for (int bits = 32; bits <= ExactReal::kMaxSignBits; bits *= 2) {
        auto [lo, hi] = d.enclosure(bits);
        if (lo > 0) return lo;
        if (hi < 0) return -hi;
    }
    throw LimitError("gap bound undecided at the sign bit cap");
}

}  // namespace

Rat min_positive_gap(const std::vector<ExactReal>& values,
                     const std::vector<ExactReal>& anchors) {
    if (values.empty() || anchors.empty())
        throw InputError("min_positive_gap needs nonempty values and anchors");
    // Deduplicate to avoid refining the same difference twice.
    std::vector<ExactReal> vals;
    for (const auto& v : values)
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    std::vector<ExactReal> ancs;
    for (const auto& a : anchors)
        if (std::find(ancs.begin(), ancs.end(), a) == ancs.end()) ancs.push_back(a);

    bool found = false;
    Rat best;
    for (const auto& a : ancs) {
        for (const auto& v : vals) {
            ExactReal d = a - v;
            if (d.is_zero()) continue;  // exact coincidence carries no gap
            Rat b = abs_lower_bound(d);
            if (!found || b < best) best = b;
            found = true;
        }
    }
    if (!found)
        throw CoincidenceError("every value coincides exactly with an anchor");
    return best;
}

}  // namespace mtg
