#include "umd/doppler.hpp"

#include <cmath>
#include <stdexcept>

namespace umd::doppler {

namespace {

void check_colinear(const ColinearKinematics& k) {
    if (!(k.sound_mps > 0.0)) {
        throw std::invalid_argument("doppler: propagation speed must be positive");
    }
    if (!(k.source_hz > 0.0)) {
        throw std::invalid_argument("doppler: source frequency must be positive");
    }
    if (!std::isfinite(k.source_mps) || !std::isfinite(k.receiver_mps)) {
        throw std::invalid_argument("doppler: velocities must be finite");
    }
}

void check_bistatic(const BistaticGeometry& g) {
    if (!(g.sound_mps > 0.0)) {
        throw std::invalid_argument("doppler: propagation speed must be positive");
    }
    if (!(g.source_hz > 0.0)) {
        throw std::invalid_argument("doppler: source frequency must be positive");
    }
    if (!(g.speed_mps >= 0.0)) {
        throw std::invalid_argument("doppler: target speed must be non-negative");
    }
    const double pi = 3.14159265358979323846;
    if (!(g.aspect_tx_rad >= 0.0 && g.aspect_tx_rad <= pi) ||
        !(g.aspect_rx_rad >= 0.0 && g.aspect_rx_rad <= pi)) {
        throw std::invalid_argument("doppler: aspect angles must lie in [0, pi]");
    }
}

}  // namespace

DopplerResult colinear_exact(const ColinearKinematics& k) {
    check_colinear(k);
    if (std::abs(k.source_mps) >= k.sound_mps || std::abs(k.receiver_mps) >= k.sound_mps) {
        throw std::domain_error("doppler: colinear speeds must stay below the propagation speed");
    }
    const double received = k.source_hz * (k.sound_mps - k.receiver_mps) / (k.sound_mps - k.source_mps);
    return {received, received - k.source_hz, false};
}

DopplerResult colinear_approx(const ColinearKinematics& k) {
    check_colinear(k);
    const double shift = -(k.relative_mps() / k.sound_mps) * k.source_hz;
    const bool flagged = std::abs(k.source_mps) / k.sound_mps >= kApproxSpeedRatioLimit ||
                         std::abs(k.receiver_mps) / k.sound_mps >= kApproxSpeedRatioLimit;
    return {k.source_hz + shift, shift, flagged};
}

DopplerResult bistatic_approx(const BistaticGeometry& g) {
    check_bistatic(g);
    const double shift = -(g.source_hz * g.speed_mps / g.sound_mps) *
                         (std::cos(g.aspect_tx_rad) + std::cos(g.aspect_rx_rad));
    const bool flagged = g.speed_mps / g.sound_mps >= kApproxSpeedRatioLimit;
    return {g.source_hz + shift, shift, flagged};
}

DopplerResult bistatic_exact(const BistaticGeometry& g) {
    check_bistatic(g);
    const double denom = g.sound_mps + g.speed_mps * std::cos(g.aspect_tx_rad);
    if (!(denom > 0.0)) {
        throw std::domain_error("doppler: bistatic denominator c + v*cos(aspect_tx) must be positive");
    }
    const double received = g.source_hz * (g.sound_mps - g.speed_mps * std::cos(g.aspect_rx_rad)) / denom;
    return {received, received - g.source_hz, false};
}

}  // namespace umd::doppler
