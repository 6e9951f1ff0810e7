#include "mrmm/spec.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mrmm/error.hpp"

namespace mrmm {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

unsigned parse_uint(const std::string& value, const char* what) {
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(value, &pos);
        if (pos != value.size() || v == 0 || v > 1u << 20) throw std::invalid_argument("range");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw FormatError(std::string("spec file: bad ") + what + " '" + value + "'");
    }
}

std::uint64_t parse_hex_word(const std::string& value, unsigned m) {
    PolyF2 p;
    try {
        p = PolyF2::from_hex(value);
    } catch (const InvalidInput& e) {
        throw FormatError(std::string("spec file: ") + e.what());
    }
    auto d = p.degree();
    if (d && *d >= m)
        throw FormatError("spec file: packed word " + value + " exceeds " + std::to_string(m) +
                          " bits");
    return p.low_bits();
}

}  // namespace

MrmmSpec MrmmSpec::create(unsigned m, unsigned n, PolyF2 f, std::vector<std::uint64_t> v_cols) {
    if (m < 1 || m > 64) throw InvalidInput("word width m must be in 1..64");
    if (n < 1) throw InvalidInput("order n must be >= 1");
    auto deg = f.degree();
    if (!deg || *deg != static_cast<std::size_t>(m) * n)
        throw InvalidInput("characteristic polynomial degree must equal m*n");
    if (!f.coeff(0)) throw InvalidInput("characteristic polynomial needs constant term 1");
    if (v_cols.size() != n) throw InvalidInput("expected exactly n packed columns");
    for (std::uint64_t v : v_cols)
        if (m < 64 && (v >> m) != 0) throw InvalidInput("packed column exceeds m bits");
    if (((v_cols[0] >> (m - 1)) & 1) == 0)
        throw InvalidInput("V^0 must carry a_0 = 1 in coordinate 1 (C_0 would be singular)");
    MrmmSpec s;
    s.m = m;
    s.n = n;
    s.f = std::move(f);
    s.v_cols = std::move(v_cols);
    return s;
}

MrmmSpec load_spec(std::istream& in) {
    std::string line;
    bool saw_format = false, saw_q = false;
    unsigned m = 0, n = 0;
    PolyF2 f;
    bool saw_m = false, saw_n = false, saw_f = false;
    std::vector<std::string> v_text;
    bool saw_v = false;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw FormatError("spec file: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "format") {
            if (value != "1") throw FormatError("spec file: unsupported format '" + value + "'");
            saw_format = true;
        } else if (key == "m") {
            m = parse_uint(value, "m");
            saw_m = true;
        } else if (key == "n") {
            n = parse_uint(value, "n");
            saw_n = true;
        } else if (key == "q") {
            if (value != "2") throw FormatError("spec file: only q=2 is supported");
            saw_q = true;
        } else if (key == "f") {
            try {
                f = PolyF2::from_hex(value);
            } catch (const InvalidInput& e) {
                throw FormatError(std::string("spec file: ") + e.what());
            }
            saw_f = true;
        } else if (key == "V") {
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ',')) v_text.push_back(trimmed(tok));
            saw_v = true;
        } else {
            throw FormatError("spec file: unknown key '" + key + "'");
        }
    }
    if (!saw_format) throw FormatError("spec file: missing format=1 line");
    if (!saw_m || !saw_n || !saw_q || !saw_f || !saw_v)
        throw FormatError("spec file: missing one of m/n/q/f/V");
    std::vector<std::uint64_t> v_cols;
    v_cols.reserve(v_text.size());
    for (const std::string& t : v_text) v_cols.push_back(parse_hex_word(t, m));
    return MrmmSpec::create(m, n, std::move(f), std::move(v_cols));
}

void save_spec(const MrmmSpec& spec, std::ostream& out) {
    out << "format=1\n";
    out << "m=" << spec.m << "\n";
    out << "n=" << spec.n << "\n";
    out << "q=2\n";
    out << "f=" << spec.f.to_hex() << "\n";
    out << "V=";
    for (std::size_t j = 0; j < spec.v_cols.size(); ++j) {
        if (j) out << ",";
        out << PolyF2::from_bits(spec.v_cols[j]).to_hex();
    }
    out << "\n";
}

}  // namespace mrmm
