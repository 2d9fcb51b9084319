#include "lcm/plant_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lcm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& token, int line, int column) {
    const char* first = token.data();
    const char* last = first + token.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("invalid number '" + token + "'", line, column);
    return value;
}

}  // namespace

bool KvDocument::has(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return true;
    return false;
}

std::string KvDocument::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw ParseError("missing required key '" + key + "'", 1, 1);
}

std::string KvDocument::get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
}

std::vector<std::string> KvDocument::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
        if (k == key) out.push_back(v);
    return out;
}

KvDocument parse_kv(std::istream& in) {
    KvDocument doc;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no,
                             static_cast<int>(line.find_first_not_of(" \t")) + 1);
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("empty key before '='", line_no, 1);
        doc.entries.emplace_back(key, trim(line.substr(eq + 1)));
        doc.lines.push_back(line_no);
    }
    return doc;
}

std::vector<double> parse_real_list(const std::string& text, int line) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string token;
    int column = 1;
    while (ss >> token) {
        out.push_back(parse_number(token, line, column));
        ++column;  // token index; exact character offsets are lost after trimming
    }
    return out;
}

std::vector<Complex> parse_complex_list(const std::string& text, int line) {
    std::vector<Complex> out;
    std::istringstream ss(text);
    std::string token;
    int column = 1;
    while (ss >> token) {
        std::size_t comma = token.find(',');
        if (comma == std::string::npos) {
            out.emplace_back(parse_number(token, line, column), 0.0);
        } else {
            double re = parse_number(token.substr(0, comma), line, column);
            double im = parse_number(token.substr(comma + 1), line, column);
            out.emplace_back(re, im);
        }
        ++column;
    }
    return out;
}

RationalTF parse_plant(std::istream& in) {
    KvDocument doc = parse_kv(in);
    auto line_of = [&](const std::string& key) {
        for (std::size_t i = 0; i < doc.entries.size(); ++i)
            if (doc.entries[i].first == key) return doc.lines[i];
        return 1;
    };

    bool zp = doc.has("poles") || doc.has("zeros") || doc.has("gain");
    bool co = doc.has("num_coeffs") || doc.has("den_coeffs");
    if (zp && co)
        throw ParseError("give either gain/zeros/poles or num_coeffs/den_coeffs, not both",
                         line_of(co ? "num_coeffs" : "poles"), 1);
    if (co) {
        if (!doc.has("num_coeffs") || !doc.has("den_coeffs"))
            throw ParseError("coefficient form needs both num_coeffs and den_coeffs",
                             line_of(doc.has("num_coeffs") ? "num_coeffs" : "den_coeffs"), 1);
        std::vector<double> num = parse_real_list(doc.get("num_coeffs"), line_of("num_coeffs"));
        std::vector<double> den = parse_real_list(doc.get("den_coeffs"), line_of("den_coeffs"));
        if (den.empty() || num.empty())
            throw ParseError("empty coefficient list", line_of("den_coeffs"), 1);
        try {
            return RationalTF::from_coeffs(Polynomial(num), Polynomial(den));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_of("den_coeffs"), 1);
        }
    }
    if (!doc.has("poles")) throw ParseError("missing required key 'poles'", 1, 1);

    RationalTF tf;
    tf.gain = doc.has("gain") ? parse_number(doc.get("gain"), line_of("gain"), 1) : 1.0;
    if (doc.has("zeros")) tf.zeros = parse_complex_list(doc.get("zeros"), line_of("zeros"));
    tf.poles = parse_complex_list(doc.get("poles"), line_of("poles"));
    if (tf.poles.empty()) throw ParseError("pole list is empty", line_of("poles"), 1);
    if (!tf.conjugate_closed())
        throw ParseError("zeros/poles are not closed under conjugation", line_of("poles"), 1);
    return tf;
}

RationalTF load_plant(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open plant file: " + path);
    return parse_plant(in);
}

}  // namespace lcm
