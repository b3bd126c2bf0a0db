#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace epslab {

typedef boost::multiprecision::cpp_bin_float_quad Float128;

inline Float128 pi128() { return boost::math::constants::pi<Float128>(); }

/// Complex number over Float128. Kept minimal: exactly the operations the
/// analytic layer needs, each built from real transcendentals.
struct Cplx {
    Float128 re, im;

    Cplx() : re(0), im(0) {}
    Cplx(const Float128& r) : re(r), im(0) {}
    Cplx(const Float128& r, const Float128& i) : re(r), im(i) {}
    Cplx(double r) : re(r), im(0) {}
    Cplx(double r, double i) : re(r), im(i) {}

    Cplx operator-() const { return Cplx(-re, -im); }
    Cplx operator+(const Cplx& o) const { return Cplx(re + o.re, im + o.im); }
    Cplx operator-(const Cplx& o) const { return Cplx(re - o.re, im - o.im); }
    Cplx operator*(const Cplx& o) const {
        return Cplx(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Cplx operator/(const Cplx& o) const {
        Float128 d = o.re * o.re + o.im * o.im;
        return Cplx((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d);
    }
    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
    Cplx& operator/=(const Cplx& o) { return *this = *this / o; }

    Cplx conj() const { return Cplx(re, -im); }
};

inline Float128 abs(const Cplx& z) {
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

inline Float128 arg(const Cplx& z) {
    using boost::multiprecision::atan2;
    return atan2(z.im, z.re);
}

inline Cplx exp(const Cplx& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    Float128 m = exp(z.re);
    return Cplx(m * cos(z.im), m * sin(z.im));
}

inline Cplx log(const Cplx& z) {
    using boost::multiprecision::log;
    return Cplx(log(abs(z)), arg(z));
}

/// Principal branch w-th power.
inline Cplx pow(const Cplx& z, const Cplx& w) {
    if (z.re == 0 && z.im == 0) return Cplx(Float128(0));
    return exp(w * log(z));
}

inline Cplx sin(const Cplx& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    return Cplx(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

inline Cplx sqrt(const Cplx& z) { return pow(z, Cplx(Float128(0.5))); }

/// exp(2*pi*i * t) for rational phase t = num/den.
inline Cplx unit_phase(long num, long den) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    Float128 t = 2 * pi128() * Float128(num) / Float128(den);
    return Cplx(cos(t), sin(t));
}

inline std::string cplx_to_string(const Cplx& z, unsigned digits = 25) {
    std::string s = z.re.str(digits);
    std::string t = z.im.str(digits);
    if (!t.empty() && t[0] != '-') t.insert(t.begin(), '+');
    return s + t + "i";
}

}  // namespace epslab
