#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace rhombiflip {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Point2 {
    Rat x, y;

    Point2() = default;
    Point2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
    bool operator<(const Point2& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Rat cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

// "p" or "p/q", lowest terms, q > 0.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw Error("bad rational: " + s);
    }
}

// Exact decimal expansion with at most `digits` fractional digits; throws if
// the value needs more.
inline std::string rat_decimal(const Rat& r, int digits = 6) {
    BigInt num = numerator(r), den = denominator(r);
    std::string sign;
    if (num < 0) { sign = "-"; num = -num; }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    if (scaled % den != 0) throw Error("rational not exact in " + std::to_string(digits) + " digits");
    scaled /= den;
    BigInt ip = scaled / scale, fp = scaled % scale;
    if (fp == 0) return sign + ip.str();
    std::string frac = fp.str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return sign + ip.str() + "." + frac;
}

}  // namespace rhombiflip
