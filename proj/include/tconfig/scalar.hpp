#pragma once

// Scalar backends: exact arbitrary-precision rationals (GMP-backed) and
// IEEE doubles. All exact-mode code paths take tolerance 0; float-mode
// comparisons always go through an explicit tolerance.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tconfig {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class ScalarMode { Exact, Float };

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
    static double to_double(const Rat& x) { return x.convert_to<double>(); }
    static Rat from_int(long v) { return Rat(v); }
    static void check_tol(const Rat& tol) {
        if (tol != 0) throw std::invalid_argument("exact mode requires tol = 0");
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double abs(double x) { return x < 0 ? -x : x; }
    static double to_double(double x) { return x; }
    static double from_int(long v) { return static_cast<double>(v); }
    static void check_tol(double tol) {
        if (tol < 0) throw std::invalid_argument("tolerance must be >= 0");
    }
};

// Canonical "p/q" serialization, lowest terms, q > 0.
inline std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(p) / Rat(q);
}

// sqrt in Q: succeeds iff numerator and denominator are perfect squares.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    BigInt p = numerator(x), q = denominator(x);
    BigInt sp = sqrt(p), sq = sqrt(q);
    if (sp * sp != p || sq * sq != q) return std::nullopt;
    return Rat(sp) / Rat(sq);
}

// Best rational approximation with bounded denominator (continued fractions).
inline Rat rat_approx(double x, long max_den = 1000000) {
    if (!(x == x)) throw std::invalid_argument("rat_approx of NaN");
    bool neg = x < 0;
    double v = neg ? -x : x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = static_cast<double>(static_cast<long long>(frac));
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rat r = Rat(p1) / Rat(q1);
    return neg ? Rat(-r) : r;
}

// Deterministic splitmix64 stream; the only RNG used anywhere. Seeded runs
// are bit-reproducible in both scalar modes.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi]
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    T next_scalar(long lo, long hi) {
        return scalar_traits<T>::from_int(next_int(lo, hi));
    }

  private:
    std::uint64_t state_;
};

}  // namespace tconfig
