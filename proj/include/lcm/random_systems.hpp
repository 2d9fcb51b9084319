#ifndef LCM_RANDOM_SYSTEMS_HPP
#define LCM_RANDOM_SYSTEMS_HPP

#include <random>

#include "lcm/rational.hpp"

namespace lcm {

/// Property-suite fixtures: stable random plants with poles in
/// Re [-10, -0.1] (conjugate pairs |Im| <= 5) and zeros with Re in [-10, 5].
struct RandomSystems {
    explicit RandomSystems(unsigned seed) : rng(seed) {}
    /// Seed from the LCM_SEED environment variable, or the fallback.
    static RandomSystems from_env(unsigned fallback = 20240817);

    std::mt19937 rng;

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);

    /// Conjugate-closed spectrum of the given size; complex pairs only when
    /// allow_complex (and size permits).
    std::vector<Complex> random_spectrum(int count, double re_lo, double re_hi,
                                         bool allow_complex);

    /// n poles, m zeros, positive gain in (0, 10].
    RationalTF random_tf(int n, int m, bool allow_complex = true);
    /// Stable proper system with n in [n_lo, n_hi], m <= n (strict when
    /// strictly_proper).
    RationalTF random_system(int n_lo, int n_hi, bool allow_complex = true,
                             bool strictly_proper = false);
    /// Real spectrum with integer pole/zero values in [-max_exponent, 0]
    /// (commensurable with gamma = 1).
    RationalTF random_commensurable(int max_exponent = 12);
};

}  // namespace lcm

#endif
