#ifndef GSVR_GAUSSIAN_HPP
#define GSVR_GAUSSIAN_HPP

#include <array>
#include <cmath>

#include "gsvr/errors.hpp"
#include "gsvr/math2d.hpp"

namespace gsvr {

// Determinant floor below which a covariance is treated as non-invertible.
inline constexpr double kDetFloor = 1e-12;

// Deformed scales are clamped here so the covariance stays invertible even
// when a plane offset drives exp(scale_raw) + delta negative. The clamp has
// zero gradient in the clamped regime.
inline constexpr double kScaleFloor = 1e-6;

// Canonical per-Gaussian parameters, all pre-activation:
//   activated scale    = exp(scale_raw)         (componentwise)
//   activated rotation = pi * tanh(rot_raw)     in (-pi, pi)
//   dynamic indicator  = sigmoid(dyn_raw)       in (0, 1)
// Position is in normalized screen coordinates, [-1, 1] per axis. Color is
// unclamped during training; clamping to [0, 1] happens only at frame
// write-out. motion[k] is the degree-k coefficient of the quadratic position
// offset.
template <class S>
struct Gaussian2D {
    Vec2<S> pos{};
    Vec2<S> scale_raw{};
    S rot_raw{};
    std::array<S, 3> color{};
    std::array<Vec2<S>, 3> motion{};
    S dyn_raw{};
};

// Float parameters per Gaussian (2 pos + 2 scale + 1 rot + 3 color + 6 motion + 1 indicator).
inline constexpr int kParamsPerGaussian = 15;

// Attributes after deformation and activation, ready for rasterization.
template <class S>
struct DeformedGaussian {
    Vec2<S> pos{};
    Vec2<S> scale{}; // strictly positive (clamped)
    S rot{};
    std::array<S, 3> color{};
};

template <class S>
inline S activated_rotation(S rot_raw) {
    return S(M_PI) * std::tanh(rot_raw);
}

template <class S>
inline S activated_indicator(S dyn_raw) {
    return sigmoid(dyn_raw);
}

// Sigma = R S S^T R^T with R the 2D rotation and S = diag(scale).
// Symmetric positive definite for finite positive scales.
template <class S>
Mat2<S> build_covariance(Vec2<S> scale, S rot) {
    if (!std::isfinite(scale.x) || !std::isfinite(scale.y) || !std::isfinite(rot))
        throw invalid_parameter("build_covariance: non-finite input");
    if (!(scale.x > S(0)) || !(scale.y > S(0)))
        throw invalid_parameter("build_covariance: scale must be positive");
    const S c = std::cos(rot), s = std::sin(rot);
    const S a = scale.x * scale.x, b = scale.y * scale.y;
    // R diag(a, b) R^T expanded.
    return {c * c * a + s * s * b, c * s * (a - b),
            c * s * (a - b), s * s * a + c * c * b};
}

// Closed-form 2x2 inverse; throws when the determinant is below the floor.
template <class S>
Mat2<S> invert_covariance(const Mat2<S>& cov) {
    const S d = cov.det();
    if (!(d > S(kDetFloor)))
        throw degenerate_gaussian("covariance determinant below invertibility floor");
    const S inv = S(1) / d;
    return {cov.m11 * inv, -cov.m01 * inv, -cov.m10 * inv, cov.m00 * inv};
}

// sigma = 1/2 delta^T Sigma^{-1} delta for delta = x - mu, given the
// precomputed inverse covariance.
template <class S>
inline S mahalanobis_half(const Mat2<S>& inv_cov, Vec2<S> delta) {
    const Vec2<S> v = inv_cov * delta;
    return S(0.5) * dot(delta, v);
}

// f(x) = exp(-1/2 (x - mu)^T Sigma^{-1} (x - mu)); equals 1 exactly at x = mu.
template <class S>
S gaussian_weight(const Mat2<S>& cov, Vec2<S> mu, Vec2<S> x) {
    const Mat2<S> inv = invert_covariance(cov);
    return std::exp(-mahalanobis_half(inv, x - mu));
}

// Applies the deformation deltas to scale/rotation/color:
//   scale = max(exp(scale_raw) + dscale, floor)
//   rot   = pi*tanh(rot_raw) + drot
//   color = color + dcolor
// Position is filled with the canonical value; fuse_position() overwrites it.
// Delta layout follows the tri-plane channel map: [0..1] position, [2..3]
// scale, [4] rotation, [5..7] color.
template <class S>
DeformedGaussian<S> activate_attributes(const Gaussian2D<S>& g, const std::array<S, 8>& deltas) {
    DeformedGaussian<S> out;
    out.pos = g.pos;
    out.scale.x = std::max(std::exp(g.scale_raw.x) + deltas[2], S(kScaleFloor));
    out.scale.y = std::max(std::exp(g.scale_raw.y) + deltas[3], S(kScaleFloor));
    out.rot = activated_rotation(g.rot_raw) + deltas[4];
    out.color = {g.color[0] + deltas[5], g.color[1] + deltas[6], g.color[2] + deltas[7]};
    return out;
}

} // namespace gsvr

#endif // GSVR_GAUSSIAN_HPP
