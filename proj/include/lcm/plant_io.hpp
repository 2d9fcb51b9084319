#ifndef LCM_PLANT_IO_HPP
#define LCM_PLANT_IO_HPP

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcm/rational.hpp"

namespace lcm {

/// Parse failure with the offending position for diagnostics.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line, column;
};

/// Key-value document: one `key = values...` entry per line, `#` comments.
/// Repeated keys accumulate in order.
struct KvDocument {
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<int> lines;

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;  // throws when missing
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::vector<std::string> get_all(const std::string& key) const;
};

KvDocument parse_kv(std::istream& in);

/// Plant files carry either `gain` + `zeros`/`poles` (complex values written
/// as re,im pairs) or `num_coeffs`/`den_coeffs` — exactly one of the two.
RationalTF parse_plant(std::istream& in);
RationalTF load_plant(const std::string& path);

std::vector<Complex> parse_complex_list(const std::string& text, int line);
std::vector<double> parse_real_list(const std::string& text, int line);

}  // namespace lcm

#endif
