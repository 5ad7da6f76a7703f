#pragma once

namespace umd::doppler {

// Closed-form Doppler shift computations for a continuous-wave ultrasonic
// sensor, exact and small-velocity approximate, in colinear and bistatic
// (separate transmitter/receiver) geometries.
//
// Sign convention: positive velocity means the separation is growing
// (receding), so shifts come out negative. Approaching motion is expressed
// with a negative colinear velocity or an aspect angle above pi/2.

// Source and receiver moving along a common line.
struct ColinearKinematics {
    double source_hz;      // emitted frequency, > 0
    double source_mps;     // source velocity, positive = receding
    double receiver_mps;   // receiver velocity, same convention
    double sound_mps;      // propagation speed, > 0

    // receiver velocity relative to the source
    double relative_mps() const { return receiver_mps - source_mps; }
};

// Stationary transducers illuminating one moving target.
struct BistaticGeometry {
    double source_hz;       // emitted frequency, > 0
    double speed_mps;       // target speed, >= 0
    double aspect_tx_rad;   // angle between target velocity and the away-from-tx direction, [0, pi]
    double aspect_rx_rad;   // same for the receiver, [0, pi]
    double sound_mps;       // propagation speed, > 0
};

struct DopplerResult {
    double received_hz;          // frequency seen at the receiver
    double shift_hz;             // received_hz - source_hz
    bool out_of_regime = false;  // approximation evaluated beyond |v|/c < kApproxSpeedRatioLimit
};

// Above this speed ratio the binomial truncation error of the approximate
// forms exceeds ~10%; results are flagged, not rejected.
inline constexpr double kApproxSpeedRatioLimit = 0.3;

// Exact colinear shift. Throws std::domain_error when either speed
// reaches the propagation speed.
DopplerResult colinear_exact(const ColinearKinematics& k);

// First-order colinear shift: shift = -(v_rel/c) * f. Never throws for
// valid kinematics; out-of-regime inputs are flagged.
DopplerResult colinear_approx(const ColinearKinematics& k);

// First-order bistatic shift: shift = -(f*v/c) * (cos(aspect_tx) + cos(aspect_rx)).
DopplerResult bistatic_approx(const BistaticGeometry& g);

// Full bistatic form, valid at any sub-sonic speed. Throws
// std::domain_error when the denominator c + v*cos(aspect_tx) is not positive.
DopplerResult bistatic_exact(const BistaticGeometry& g);

}  // namespace umd::doppler
