#pragma once

#include <stdexcept>

namespace umd::timer555 {

// Behavioral timing model of a 555 in astable and monostable configurations,
// plus the inverse solvers used for component selection.

// Coefficients of the RC charge/discharge equations. "paper" keeps the
// rounded datasheet-style constants (0.69, 1.45, 1.1, ...); "exact" uses the
// natural-log values they approximate. Note 1.45 != 1/0.69, so under the
// paper set the frequency and 1/period disagree by about 0.05%.
struct ConstantSet {
    double k_charge;  // t_high = k_charge * (r_a + r_b) * c
    double k_freq;    // frequency = k_freq / ((r_a + 2*r_b) * c)
    double k_mono;    // one-shot hold = k_mono * r * c
    double k_upper;   // charge 0 -> 2/3 Vcc: k_upper * r * c             (diagnostic)
    double k_lower;   // charge 0 -> 1/3 Vcc: k_lower * r * c             (diagnostic)

    static ConstantSet paper() { return {0.69, 1.45, 1.1, 1.09, 0.405}; }
    static ConstantSet exact();
};

struct AstableNetwork {
    double r_a_ohms;
    double r_b_ohms;
    double c_farads;
    double v_cc_volts = 9.0;

    // design-rule floor for r_a (supply / 0.2 A); falling below is a
    // warning, not an error
    double min_r_a_ohms() const { return v_cc_volts / 0.2; }
    bool violates_r_a_rule() const { return r_a_ohms < min_r_a_ohms(); }
};

struct MonostableNetwork {
    double r_ohms;    // >= 0; zero gives the minimum (zero) hold
    double c_farads;  // > 0
};

struct TimerTiming {
    double t_high_s;         // output-high time
    double t_low_s;          // output-low time
    double period_s;         // t_high_s + t_low_s
    double frequency_hz;     // k_freq form; see ConstantSet
    double duty;             // t_high_s / period_s, in (0.5, 1)
    double charge_upper_s;   // diagnostic: 0 -> 2/3 Vcc through r_a + r_b
    double charge_lower_s;   // diagnostic: 0 -> 1/3 Vcc through r_a + r_b
};

struct InfeasibleDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TimerTiming astable_timing(const AstableNetwork& net,
                           const ConstantSet& consts = ConstantSet::paper());

// Returns the r_b that makes the astable oscillate at f_target with the
// given r_a and c. Throws InfeasibleDesign when the resistance budget
// k_freq/(f*c) is already consumed by r_a.
double solve_astable_rb(double f_target_hz, double r_a_ohms, double c_farads,
                        const ConstantSet& consts = ConstantSet::paper());

// One-shot hold time k_mono * r * c; zero resistance gives exactly zero.
double monostable_hold(const MonostableNetwork& net,
                       const ConstantSet& consts = ConstantSet::paper());

// Inverse of monostable_hold.
double solve_monostable_r(double t_target_s, double c_farads,
                          const ConstantSet& consts = ConstantSet::paper());

}  // namespace umd::timer555
