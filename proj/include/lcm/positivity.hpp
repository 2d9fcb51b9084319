#ifndef LCM_POSITIVITY_HPP
#define LCM_POSITIVITY_HPP

#include <optional>
#include <string>

#include "lcm/cert.hpp"
#include "lcm/rational.hpp"

namespace lcm {

enum class PosVerdict { Positive, NotPositive, PositiveSampled };

std::string to_string(PosVerdict v);

struct ExPosVerdict {
    PosVerdict verdict = PosVerdict::NotPositive;
    std::optional<double> witness_time;  ///< t* with h(t*) < 0 when NotPositive
    std::string method;
};

/// Exact first-order test: K > 0 and B evaluated at the pole nonnegative.
ExPosVerdict expos_order1(const RationalTF& tf);

/// Exact second-order test: real poles plus the three numerator inequalities.
/// No zero-pole cancellation allowed.
ExPosVerdict expos_order2(const RationalTF& tf);

/// Sampled impulse-response oracle. For n = m the Dirac direct term must be
/// nonnegative in addition to the sampled tail.
ExPosVerdict expos_oracle(const RationalTF& tf, double t_max = 0.0, int n_samples = 20000);

/// Cross-module consistency: an LCM certificate must never coexist with a
/// negative impulse response.
bool lcm_implies_expos_check(const RationalTF& tf);

}  // namespace lcm

#endif
