#pragma once

#include "barbilian/domain.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace barbilian {

/// Portable uniform deviates: mt19937_64 (bit-exact by the standard) with the top 53 bits
/// mapped to [0, 1). Streams reproduce bit-identically across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Rejection sampler over J.
///
/// Bounding boxes: half-plane [-5,5] x (0,5]; quadrant (0,5]^2; disk and circle-minus-point
/// [-rho,rho]^2; polyline the padded box of its charts; parallel planes [-5,5]^2 on z = 0;
/// spheres uniform on the J sphere. Points closer than `near_boundary` to K are rejected
/// unless `allow_near_boundary` is set.
class JSampler {
public:
    JSampler(const Domain& domain, std::uint64_t seed, bool allow_near_boundary = false,
             double near_boundary = 1e-3);

    Point3 next();
    /// Two distinct points.
    std::pair<Point3, Point3> next_pair();
    Rng& rng() { return rng_; }

private:
    Point3 candidate();
    bool acceptable(Point3 p) const;

    const Domain* domain_;
    Rng rng_;
    bool allow_near_boundary_;
    double near_boundary_;
    double x_lo_ = -5, x_hi_ = 5, y_lo_ = -5, y_hi_ = 5;
};

} // namespace barbilian
