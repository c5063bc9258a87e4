#pragma once

// Software double-double arithmetic for the optional extended evaluation mode,
// plus the process-wide mode switch (LPLAB_PRECISION={double|extended}).
//
// The double-double type carries ~32 significant decimal digits as an
// unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Only the operations the
// series evaluators need are provided. All of it assumes strict IEEE-754
// binary64 semantics; building with -ffast-math would silently break the
// error-free transformations below.

#include <cmath>
#include <cstdlib>
#include <string>

namespace lplab {

enum class Precision {
    Auto,     // resolve from the process-wide mode (env var or set_precision)
    Double,   // plain binary64
    Extended  // software double-double
};

namespace detail {
inline Precision& global_precision() {
    static Precision mode = [] {
        const char* env = std::getenv("LPLAB_PRECISION");
        if (env != nullptr && std::string(env) == "extended") return Precision::Extended;
        return Precision::Double;
    }();
    return mode;
}
} // namespace detail

inline Precision current_precision() { return detail::global_precision(); }
inline void set_precision(Precision p) { detail::global_precision() = p; }

inline Precision resolve_precision(Precision p) {
    return p == Precision::Auto ? current_precision() : p;
}

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace dd {

// Error-free transformations (Knuth / Dekker).
inline DD two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

inline DD quick_two_sum(double a, double b) { // requires |a| >= |b|
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

inline DD add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    DD r = quick_two_sum(s.hi, lo);
    lo = r.lo + t.lo;
    return quick_two_sum(r.hi, lo);
}

inline DD add(const DD& a, double b) { return add(a, DD(b)); }

inline DD neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD sub(const DD& a, const DD& b) { return add(a, neg(b)); }

inline DD mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline DD mul(const DD& a, double b) {
    DD p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline DD div(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return add(q, q3);
}

inline DD div(const DD& a, double b) { return div(a, DD(b)); }

inline DD abs(const DD& a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? neg(a) : a; }

inline bool less(const DD& a, const DD& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

} // namespace dd

// Unit roundoff of the active accumulation mode, used by rounding-error bands.
inline double mode_epsilon(Precision resolved) {
    // binary64: 2^-53; double-double: 2^-105 (conservative for the ops above)
    return resolved == Precision::Extended ? 0x1.0p-105 : 0x1.0p-53;
}

} // namespace lplab
