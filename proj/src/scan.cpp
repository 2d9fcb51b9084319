#include "lcm/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lcm/plant_io.hpp"

namespace lcm {

namespace {

int axis_count(double lo, double hi, double step) {
    return static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
}

}  // namespace

int ScanSpec::na() const { return axis_count(a_min, a_max, a_step); }
int ScanSpec::nb() const { return axis_count(b_min, b_max, b_step); }

RationalTF ScanSpec::cell(int i, int j) const {
    RationalTF tf = base;
    double a = a_at(i), b = b_at(j);
    if (conjugate_pair) {
        tf.poles[static_cast<std::size_t>(index_a)] = Complex(a, b);
        tf.poles[static_cast<std::size_t>(index_a) + 1] = Complex(a, -b);
    } else {
        tf.poles[static_cast<std::size_t>(index_a)] = Complex(a, 0.0);
        tf.poles[static_cast<std::size_t>(index_b)] = Complex(b, 0.0);
    }
    return tf;
}

void ScanSpec::validate() const {
    if (a_step <= 0.0 || b_step <= 0.0) throw GridError("grid step must be positive");
    if (a_max < a_min || b_max < b_min) throw GridError("grid maximum below minimum");
    if (na() < 1 || nb() < 1) throw GridError("grid has no cells");
    int n = base.n();
    if (conjugate_pair) {
        if (index_a < 0 || index_a + 1 >= n)
            throw GridError("conjugate-pair index out of range");
    } else {
        if (index_a < 0 || index_a >= n || index_b < 0 || index_b >= n)
            throw GridError("varied pole index out of range");
        if (index_a == index_b) throw GridError("varied pole indices must differ");
    }
    if (methods.empty()) throw GridError("scan needs at least one method");
    for (const ScanMethod& m : methods) {
        if (m.name != "necessary" && m.name != "theorem1" && m.name != "corollary1" &&
            m.name != "polynomial" && m.name != "sampled" && m.name != "auto")
            throw GridError("unknown scan method '" + m.name + "'");
        if (m.mu < 1) throw GridError("method mu must be a positive integer");
    }
}

ScanSpec parse_scan_spec(std::istream& in) {
    KvDocument doc = parse_kv(in);
    ScanSpec spec;

    {
        std::stringstream plant_text;
        for (std::size_t i = 0; i < doc.entries.size(); ++i) {
            const auto& [k, v] = doc.entries[i];
            if (k == "gain" || k == "zeros" || k == "poles" || k == "num_coeffs" ||
                k == "den_coeffs")
                plant_text << k << " = " << v << "\n";
        }
        spec.base = parse_plant(plant_text);
    }

    std::istringstream vary(doc.get("vary"));
    std::string first;
    vary >> first;
    if (first == "conj") {
        spec.conjugate_pair = true;
        if (!(vary >> spec.index_a)) throw ParseError("vary = conj <pole index>", 1, 1);
    } else {
        spec.index_a = std::stoi(first);
        if (!(vary >> spec.index_b)) throw ParseError("vary = <pole index> <pole index>", 1, 1);
    }

    auto number = [&](const std::string& key) { return std::stod(doc.get(key)); };
    spec.a_min = number("a_min");
    spec.a_max = number("a_max");
    spec.a_step = number("a_step");
    spec.b_min = number("b_min");
    spec.b_max = number("b_max");
    spec.b_step = number("b_step");

    for (const std::string& text : doc.get_all("method")) {
        std::istringstream ss(text);
        ScanMethod m;
        ss >> m.name;
        std::string opt;
        while (ss >> opt) {
            std::size_t eq = opt.find('=');
            if (eq == std::string::npos) throw ParseError("method option needs key=value", 1, 1);
            std::string key = opt.substr(0, eq), val = opt.substr(eq + 1);
            if (key == "mu")
                m.mu = std::stoi(val);
            else if (key == "delta")
                m.delta = std::stod(val);
            else if (key == "gamma")
                m.gamma = std::stod(val);
            else
                throw ParseError("unknown method option '" + key + "'", 1, 1);
        }
        spec.methods.push_back(std::move(m));
    }
    spec.validate();
    return spec;
}

ScanSpec load_scan_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scan spec: " + path);
    return parse_scan_spec(in);
}

ScanRow evaluate_cell(const ScanSpec& spec, int i, int j, const ScanMethod& method) {
    RationalTF tf = spec.cell(i, j);
    ScanRow row;
    row.a = spec.a_at(i);
    row.b = spec.b_at(j);
    row.method = method.name;
    row.mu = method.mu;

    LcmCertificate cert;
    if (method.name == "necessary") {
        cert = check_necessary(tf);
    } else if (method.name == "sampled") {
        cert = check_exact_sampled(tf);
    } else if (method.name == "polynomial") {
        try {
            cert = check_exact_polynomial(tf, method.gamma);
        } catch (const std::domain_error&) {
            cert.verdict = Verdict::Inconclusive;
        }
    } else if (method.name == "theorem1" || method.name == "corollary1") {
        row.delta = method.delta.value_or(auto_delta(tf, method.mu));
        try {
            cert = method.name == "theorem1" ? certify_theorem1(tf, method.mu, row.delta)
                                             : certify_corollary1(tf, method.mu, row.delta);
        } catch (const std::domain_error&) {
            cert.verdict = Verdict::Inconclusive;
        }
    } else {  // auto: the full pipeline
        CertifyOptions opts;
        opts.mu = method.mu;
        opts.delta = method.delta;
        row.delta = method.delta.value_or(auto_delta(tf, method.mu));
        cert = certify(tf, opts);
    }
    row.verdict = cert.verdict;
    return row;
}

std::vector<ScanRow> run_scan_serial(const ScanSpec& spec) {
    spec.validate();
    int na = spec.na(), nb = spec.nb();
    int nm = static_cast<int>(spec.methods.size());
    std::vector<ScanRow> rows(static_cast<std::size_t>(na) * nb * nm);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nm; ++k)
                rows[static_cast<std::size_t>((i * nb + j) * nm + k)] =
                    evaluate_cell(spec, i, j, spec.methods[static_cast<std::size_t>(k)]);
    return rows;
}

std::vector<ScanRow> run_scan_parallel(const ScanSpec& spec) {
    spec.validate();
    int na = spec.na(), nb = spec.nb();
    int nm = static_cast<int>(spec.methods.size());
    int cells = na * nb;
    std::vector<ScanRow> rows(static_cast<std::size_t>(cells) * nm);
    // Cells are independent pure-function evaluations; results land at fixed
    // row-major offsets, so the output order matches the serial driver.
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < cells; ++c) {
        int i = c / nb, j = c % nb;
        for (int k = 0; k < nm; ++k)
            rows[static_cast<std::size_t>(c * nm + k)] =
                evaluate_cell(spec, i, j, spec.methods[static_cast<std::size_t>(k)]);
    }
    return rows;
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) { return run_scan_parallel(spec); }

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
    out << "p_a,p_b,method,mu,delta,verdict\n";
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf);
    };
    for (const ScanRow& r : rows)
        out << fmt(r.a) << ',' << fmt(r.b) << ',' << r.method << ',' << r.mu << ',' << fmt(r.delta)
            << ',' << to_string(r.verdict) << '\n';
}

}  // namespace lcm
