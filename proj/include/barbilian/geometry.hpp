#pragma once

#include <cmath>
#include <numbers>

namespace barbilian {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3() = default;
    constexpr Point3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}
    constexpr explicit Point3(Point2 p) : x(p.x), y(p.y), z(0.0) {}

    constexpr Point2 xy() const { return {x, y}; }
};

inline constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline constexpr bool operator==(Point3 a, Point3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline constexpr Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::hypot(a.x, a.y, a.z); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

inline constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

/// Great-circle angle between two nonzero vectors, stable for nearly (anti)parallel inputs.
inline double angle_between(Point3 a, Point3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

/// A nonzero planar velocity (xdot, ydot). Lines through a point are unoriented, so
/// `canonical()` flips the vector to xdot > 0 (or xdot == 0, ydot > 0).
class Direction2 {
public:
    Direction2(double dx, double dy);

    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double length() const { return std::hypot(dx_, dy_); }
    bool is_vertical() const { return dx_ == 0.0; }
    /// ydot / xdot; infinite for vertical directions.
    double slope() const;

    Direction2 canonical() const;
    Point2 unit() const;
    /// Unit normal obtained by rotating `unit()` by +90 degrees.
    Point2 unit_normal() const;
    Direction2 scaled(double c) const;

    static Direction2 from_slope(double m) { return {1.0, m}; }
    static Direction2 from_angle(double radians) { return {std::cos(radians), std::sin(radians)}; }

private:
    double dx_;
    double dy_;
};

inline constexpr double kPi = std::numbers::pi;

} // namespace barbilian
