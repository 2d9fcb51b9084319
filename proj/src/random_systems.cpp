#include "lcm/random_systems.hpp"

#include <cstdlib>
#include <string>

namespace lcm {

RandomSystems RandomSystems::from_env(unsigned fallback) {
    if (const char* env = std::getenv("LCM_SEED"))
        return RandomSystems(static_cast<unsigned>(std::stoul(env)));
    return RandomSystems(fallback);
}

double RandomSystems::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int RandomSystems::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Complex> RandomSystems::random_spectrum(int count, double re_lo, double re_hi,
                                                    bool allow_complex) {
    std::vector<Complex> out;
    int left = count;
    while (left > 0) {
        if (allow_complex && left >= 2 && uniform(0.0, 1.0) < 0.4) {
            double re = uniform(re_lo, std::min(re_hi, -0.1));
            double im = uniform(0.1, 5.0);
            out.emplace_back(re, im);
            out.emplace_back(re, -im);
            left -= 2;
        } else {
            out.emplace_back(uniform(re_lo, re_hi), 0.0);
            --left;
        }
    }
    return out;
}

RationalTF RandomSystems::random_tf(int n, int m, bool allow_complex) {
    RationalTF tf;
    tf.gain = uniform(0.1, 10.0);
    tf.poles = random_spectrum(n, -10.0, -0.1, allow_complex);
    tf.zeros = random_spectrum(m, -10.0, 5.0, allow_complex);
    return tf;
}

RationalTF RandomSystems::random_system(int n_lo, int n_hi, bool allow_complex,
                                        bool strictly_proper) {
    int n = uniform_int(n_lo, n_hi);
    int m = uniform_int(0, strictly_proper ? n - 1 : n);
    return random_tf(n, m, allow_complex);
}

RationalTF RandomSystems::random_commensurable(int max_exponent) {
    int n = uniform_int(1, 4);
    int m = uniform_int(0, n);
    RationalTF tf;
    tf.gain = uniform(0.1, 10.0);
    for (int i = 0; i < n; ++i)
        tf.poles.emplace_back(static_cast<double>(-uniform_int(0, max_exponent)), 0.0);
    for (int j = 0; j < m; ++j)
        tf.zeros.emplace_back(static_cast<double>(-uniform_int(0, max_exponent)), 0.0);
    return tf;
}

}  // namespace lcm
