#ifndef LCM_MAJORIZATION_HPP
#define LCM_MAJORIZATION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lcm {

/// Vector sorted in descending order.
struct SortedVector {
    std::vector<double> values;
};

inline SortedVector sort_desc(std::vector<double> x) {
    std::sort(x.begin(), x.end(), std::greater<double>());
    return {std::move(x)};
}

inline std::vector<double> prefix_sums(const SortedVector& x) {
    std::vector<double> out;
    out.reserve(x.values.size());
    double acc = 0.0;
    for (double v : x.values) out.push_back(acc += v);
    return out;
}

/// Weak majorization x >_w y: every descending prefix sum of x dominates the
/// matching prefix sum of y. slack absorbs summation round-off.
inline bool weakly_majorizes(const std::vector<double>& x, const std::vector<double>& y,
                             double slack = 1e-12) {
    if (x.size() != y.size()) throw std::domain_error("weakly_majorizes: length mismatch");
    std::vector<double> px = prefix_sums(sort_desc(x));
    std::vector<double> py = prefix_sums(sort_desc(y));
    for (std::size_t i = 0; i < px.size(); ++i)
        if (px[i] < py[i] - slack) return false;
    return true;
}

/// Index of the first failing prefix inequality, or -1 when x >_w y.
inline int first_majorization_violation(const std::vector<double>& x, const std::vector<double>& y,
                                        double slack = 1e-12) {
    if (x.size() != y.size()) throw std::domain_error("weakly_majorizes: length mismatch");
    std::vector<double> px = prefix_sums(sort_desc(x));
    std::vector<double> py = prefix_sums(sort_desc(y));
    for (std::size_t i = 0; i < px.size(); ++i)
        if (px[i] < py[i] - slack) return static_cast<int>(i);
    return -1;
}

}  // namespace lcm

#endif
