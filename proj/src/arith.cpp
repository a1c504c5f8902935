#include "e10/arith.hpp"

#include "e10/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace e10::arith {

Int Factorization::product() const {
    Int r = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e; ++i) r *= p;
    }
    return r;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 3.3e24, hence for all uint64 inputs.
constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : kMrBases) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    // Inputs this large only come from user-supplied data; fall back to
    // trial division so the answer stays deterministic.
    if (n % 2 == 0) return false;
    Int f = 3;
    while (f * f <= n) {
        if (n % f == 0) return false;
        f += 2;
    }
    return true;
}

Factorization factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    Factorization out;
    out.value = n;
    Int m = n;
    auto push = [&](const Int& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.factors.emplace_back(p, e);
    };
    if (m % 2 == 0) push(2);
    if (m % 3 == 0) push(3);
    Int f = 5;
    while (f * f <= m) {
        if (m % f == 0) push(f);
        f += 2;
        if (f * f > m) break;
        if (m % f == 0) push(f);
        f += 4;
    }
    if (m > 1) out.factors.emplace_back(m, 1);
    for (const auto& [p, e] : out.factors) {
        (void)e;
        if (!is_prime(p)) throw std::logic_error("factorize: non-prime factor");
    }
    return out;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long a, long n) {
    return kronecker(Int(a), Int(n));
}

unsigned DProfile::e2() const { return e_of(2); }

Int DProfile::f_of(const Int& p) const {
    for (const auto& en : primes) {
        if (en.p == p) return en.f;
    }
    return d;
}

unsigned DProfile::e_of(const Int& p) const {
    for (const auto& en : primes) {
        if (en.p == p) return en.e;
    }
    return 0;
}

unsigned DProfile::num_odd_primes() const {
    unsigned c = 0;
    for (const auto& en : primes) {
        if (en.p != 2) ++c;
    }
    return c;
}

DProfile d_profile(long k) {
    if (k < 3) throw std::domain_error("d_profile: k must be >= 3");
    DProfile out;
    out.k = k;
    out.d = Int(k) * Int(k) - 4;
    Factorization f = factorize(out.d);
    for (const auto& [p, e] : f.factors) {
        Int pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        out.primes.push_back({p, e, out.d / pe});
    }
    unsigned e2 = out.e2();
    if (k % 2 == 1) {
        out.e2_case = E2Case::E0;
        if (e2 != 0) throw std::logic_error("d_profile: odd k must give e2 = 0");
    } else if (k % 4 == 0) {
        out.e2_case = E2Case::E2;
        if (e2 != 2) throw std::logic_error("d_profile: k = 0 mod 4 must give e2 = 2");
    } else {
        out.e2_case = E2Case::E5Plus;
        if (e2 < 5) throw std::logic_error("d_profile: k = 2 mod 4 must give e2 >= 5");
    }
    return out;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::operator+(const Interval& o) const {
    return Interval(lo_ + o.lo_, hi_ + o.hi_);
}

Interval Interval::operator-(const Interval& o) const {
    return Interval(lo_ - o.hi_, hi_ - o.lo_);
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_); }

Interval Interval::operator*(const Interval& o) const {
    Rational cands[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    Rational lo = cands[0], hi = cands[0];
    for (int i = 1; i < 4; ++i) {
        if (cands[i] < lo) lo = cands[i];
        if (cands[i] > hi) hi = cands[i];
    }
    return Interval(lo, hi);
}

Interval Interval::operator/(const Interval& o) const {
    if (o.lo_ <= 0 && o.hi_ >= 0)
        throw std::domain_error("Interval division by interval containing 0");
    Rational cands[4] = {lo_ / o.lo_, lo_ / o.hi_, hi_ / o.lo_, hi_ / o.hi_};
    Rational lo = cands[0], hi = cands[0];
    for (int i = 1; i < 4; ++i) {
        if (cands[i] < lo) lo = cands[i];
        if (cands[i] > hi) hi = cands[i];
    }
    return Interval(lo, hi);
}

Interval Interval::operator*(const Rational& c) const {
    if (c >= 0) return Interval(lo_ * c, hi_ * c);
    return Interval(hi_ * c, lo_ * c);
}

Interval Interval::pow(unsigned e) const {
    Interval r = Interval::point(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Interval sqrt_enclosure(const Rational& x, const Rational& radius) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative input");
    if (radius <= 0) throw std::domain_error("sqrt_enclosure: radius must be positive");
    if (x == 0) return Interval::point(0);
    // Integer square root of floor(x) seeds the bracket.
    Int fl = x.get_num() / x.get_den();
    Int r0 = sqrt(fl);
    Rational lo(r0), hi(r0 + 1);
    if (lo * lo > x) lo = 0;
    while (hi * hi < x) hi += 1;
    // Bisection, keeping lo^2 <= x <= hi^2.
    while (hi - lo > 2 * radius) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

Interval zeta_d(const Int& d, int s, const Rational& target_radius) {
    if (d < 1) throw std::domain_error("zeta_d: d must be positive");
    if (s < 2) throw std::domain_error("zeta_d: s must be >= 2");
    if (target_radius <= 0) throw std::domain_error("zeta_d: radius must be positive");
    // Smallest M with M^{1-s}/(s-1) <= target_radius.
    auto tail = [&](const Int& m) {
        Rational t(1, s - 1);
        Rational ms(m);
        for (int i = 0; i < s - 1; ++i) t /= ms;
        return t;
    };
    Int M = 1;
    while (tail(M) > target_radius) M *= 2;
    Int lo = M / 2, hi = M;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (tail(mid) <= target_radius)
            hi = mid;
        else
            lo = mid;
    }
    M = hi;

    Int twod = 2 * d;
    Rational sum = 0;
    for (Int m = 1; m <= M; m += 1) {
        if (gcd(m, twod) != 1) continue;
        int chi = kronecker(d, m);
        if (chi == 0) continue;
        Rational term(chi);
        for (int i = 0; i < s; ++i) term /= Rational(m);
        sum += term;
    }
    Rational t = tail(M);
    return Interval(sum - t, sum + t);
}

namespace {

// Bracketing enclosure of arctan(1/x) from the alternating Leibniz series.
Interval atan_inv(long x, unsigned terms) {
    Rational partial = 0;
    Rational xr(x);
    Rational power = 1 / xr; // x^{-(2k+1)}
    Rational prev = 0;
    for (unsigned k = 0; k < terms; ++k) {
        Rational term = power / Rational(2 * k + 1);
        prev = partial;
        partial += (k % 2 == 0) ? term : -term;
        power /= xr * xr;
    }
    // Consecutive partial sums bracket the limit.
    if (partial < prev) return Interval(partial, prev);
    return Interval(prev, partial);
}

} // namespace

Interval pi_enclosure(const Rational& target_radius) {
    if (target_radius <= 0) throw std::domain_error("pi_enclosure: radius must be positive");
    unsigned terms = 4;
    for (;;) {
        // pi = 16 atan(1/5) - 4 atan(1/239)
        Interval a = atan_inv(5, terms);
        Interval b = atan_inv(239, terms);
        Interval pi = a * Rational(16) - b * Rational(4);
        if (pi.width() <= 2 * target_radius) return pi;
        terms *= 2;
    }
}

Interval pi_fourth(const Rational& target_radius) {
    if (target_radius <= 0) throw std::domain_error("pi_fourth: radius must be positive");
    Rational r = target_radius / 512; // pi^4 has derivative 4 pi^3 < 125 w.r.t. pi
    for (;;) {
        Interval p4 = pi_enclosure(r).pow(4);
        if (p4.width() <= 2 * target_radius) return p4;
        r /= 2;
    }
}

std::string decimal_string(const Rational& x, int digits, bool round_up) {
    if (digits < 1) throw std::domain_error("decimal_string: digits must be >= 1");
    if (x == 0) {
        std::string z = "0.";
        z.append(static_cast<size_t>(digits - 1), '0');
        return z + "e+00";
    }
    bool neg = x < 0;
    Rational ax = neg ? Rational(-x) : x;
    // Decimal exponent e with 10^e <= ax < 10^{e+1}.
    long e = 0;
    Rational ten(10);
    Rational v = ax;
    while (v >= ten) { v /= ten; ++e; }
    while (v < 1) { v *= ten; --e; }
    // significand digits: floor/ceil of ax * 10^{digits-1-e}
    Rational scaled = ax;
    long shift = digits - 1 - e;
    for (long i = 0; i < shift; ++i) scaled *= ten;
    for (long i = 0; i < -shift; ++i) scaled /= ten;
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    bool outward = (round_up != neg); // magnitude rounding direction
    if (outward && r != 0) q += 1;
    // Rounding may carry into one more digit.
    std::string digs = q.get_str();
    if (static_cast<int>(digs.size()) > digits) {
        digs.pop_back();
        ++e;
    }
    std::string out = neg ? "-" : "";
    out += digs.substr(0, 1);
    out += ".";
    out += digs.substr(1);
    char buf[8];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out += buf;
    return out;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    std::string expo;
    auto epos = tail.find_first_of("eE");
    long e10 = 0;
    if (epos != std::string::npos) {
        e10 = std::stol(tail.substr(epos + 1));
        tail = tail.substr(0, epos);
    }
    Rational r(head + tail + "/1");
    r.canonicalize();
    Rational den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    r /= den;
    for (long i = 0; i < e10; ++i) r *= 10;
    for (long i = 0; i < -e10; ++i) r /= 10;
    return r;
}

} // namespace e10::arith
