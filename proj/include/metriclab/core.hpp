#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace metriclab {

// A carrier point: 1D values use x (y must stay 0), planar/complex points use (x, y).
struct Point {
    double x = 0.0;
    double y = 0.0;
    int dim = 1;

    friend bool operator==(const Point& a, const Point& b) {
        return a.dim == b.dim && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point point1(double v) { return Point{v, 0.0, 1}; }
inline Point point2(double x, double y) { return Point{x, y, 2}; }

inline std::complex<double> to_complex(const Point& p) { return {p.x, p.y}; }
inline Point from_complex(std::complex<double> z) { return point2(z.real(), z.imag()); }

inline std::string format_point(const Point& p) {
    if (p.dim == 1) return std::to_string(p.x);
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

namespace detail {

inline Point lerp(const Point& a, const Point& b, double f) {
    if (f == 0.0) return a;
    if (f == 1.0) return b;
    Point p;
    p.dim = a.dim;
    p.x = a.x + f * (b.x - a.x);
    p.y = a.y + f * (b.y - a.y);
    return p;
}

}  // namespace detail

// Nonnegative length extended with +infinity. Addition and max treat
// infinity as absorbing, matching IEEE semantics on the raw double.
class ExtendedLength {
public:
    ExtendedLength() = default;

    static ExtendedLength finite(double v) {
        if (!(v >= 0.0) || std::isinf(v))
            throw std::invalid_argument("ExtendedLength::finite needs a finite nonnegative value");
        return ExtendedLength(v);
    }
    static ExtendedLength infinite() {
        return ExtendedLength(std::numeric_limits<double>::infinity());
    }
    static ExtendedLength of(double v) {
        return std::isinf(v) ? infinite() : finite(v);
    }

    double value() const { return value_; }
    bool is_infinite() const { return std::isinf(value_); }
    bool is_finite() const { return !is_infinite(); }

    friend ExtendedLength operator+(ExtendedLength a, ExtendedLength b) {
        return ExtendedLength(a.value_ + b.value_);
    }
    friend bool operator<(ExtendedLength a, ExtendedLength b) { return a.value_ < b.value_; }
    friend bool operator==(ExtendedLength a, ExtendedLength b) { return a.value_ == b.value_; }
    friend ExtendedLength max(ExtendedLength a, ExtendedLength b) {
        return a < b ? b : a;
    }

    std::string str() const {
        return is_infinite() ? "inf" : std::to_string(value_);
    }

private:
    explicit ExtendedLength(double v) : value_(v) {}
    double value_ = 0.0;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CarrierViolation : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct NonPositiveDiagonal : Error { using Error::Error; };
struct DuplicatePoints : Error { using Error::Error; };
struct StepLimitExceeded : Error { using Error::Error; };
struct NoCanonicalPath : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };

// Strict carrier constraints get this much slack so boundary formulas stay finite.
inline constexpr double kCarrierGuard = 1e-12;

}  // namespace metriclab
