#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace e10::arith {

using Int = mpz_class;
using Rational = mpq_class;

/// Prime factorization with certified prime factors.
struct Factorization {
    Int value;                                   // the factored integer, >= 1
    std::vector<std::pair<Int, unsigned>> factors; // (p, e), p strictly increasing, e >= 1

    Int product() const; // multiplies the factorization back out
};

/// Deterministic Miller-Rabin, valid for any n that fits in the mpz
/// (witness set covers all 64-bit inputs; larger n use trial division
/// by construction of factorize()).
bool is_prime(const Int& n);

/// Trial division; every reported prime passes is_prime.  n = 1 gives an
/// empty factor list.
Factorization factorize(const Int& n);

/// Kronecker symbol (a|n), fully multiplicative in both arguments,
/// (a|2) = 0, +1, -1 for a even, a = +-1, a = +-3 mod 8.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

enum class E2Case { E0, E2, E5Plus };

/// Valuation/unit profile of d = k^2 - 4.
struct DProfile {
    long k = 0;
    Int d;
    E2Case e2_case = E2Case::E0;
    struct Entry {
        Int p;
        unsigned e; // e_p = v_p(d)
        Int f;      // f_p = d / p^{e_p}
    };
    std::vector<Entry> primes; // one entry per prime dividing d, increasing

    unsigned e2() const;             // v_2(d), 0 if 2 does not divide d
    Int f_of(const Int& p) const;    // f_p, = d if p does not divide d
    unsigned e_of(const Int& p) const;
    unsigned num_odd_primes() const; // number of distinct odd primes dividing d
};

/// Profile of d = k^2 - 4 for k >= 3 (smaller k would give a definite or
/// degenerate span and is rejected).
DProfile d_profile(long k);

/// Closed interval with exact rational endpoints.  Every operation returns
/// an interval containing the exact real result.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational lo, Rational hi);
    static Interval point(const Rational& v) { return Interval(v, v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // o must not contain 0
    Interval operator*(const Rational& c) const;
    Interval pow(unsigned e) const;

private:
    Rational lo_, hi_;
};

/// Enclosure of sqrt(x) for rational x >= 0, of width <= 2*radius.
Interval sqrt_enclosure(const Rational& x, const Rational& radius);

/// Enclosure of the L-series zeta_d(s) = sum over m >= 1 coprime to 2d of
/// (d|m) m^{-s}, of width <= 2*target_radius.  The tail after the cutoff M
/// is bounded by M^{1-s}/(s-1).
Interval zeta_d(const Int& d, int s, const Rational& target_radius);

/// Enclosure of pi^4 of width <= 2*target_radius (Machin's formula with
/// bracketing arctan partial sums).
Interval pi_fourth(const Rational& target_radius);

/// Enclosure of pi of width <= 2*target_radius.
Interval pi_enclosure(const Rational& target_radius);

/// Decimal rendering of a rational, rounded toward -inf (round_up = false)
/// or +inf (round_up = true).  Scientific format with `digits` significand
/// digits, e.g. "1.952154e-07".  Deterministic.
std::string decimal_string(const Rational& x, int digits, bool round_up);

/// Parse "num/den" or integer or decimal string into a rational.
Rational rational_from_string(const std::string& s);

} // namespace e10::arith
