#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace esn_cli {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string where(const std::string& path, size_t line) { return path + ":" + std::to_string(line) + ": "; }

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

}  // namespace

csv_table read_numeric_csv(const std::string& path, const std::vector<std::string>& expected) {
    std::ifstream in(path);
    if (!in) throw csv_error(path + ": cannot open file");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw csv_error(where(path, 1) + "missing header line");
    csv_table t;
    t.columns = split(lines[0]);
    if (!expected.empty() && t.columns != expected)
        throw csv_error(where(path, 1) + "expected header '" + join(expected) + "', found '" + trim(lines[0]) + "'");
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i]);
        if (cells.size() != t.columns.size())
            throw csv_error(where(path, i + 1) + "expected " + std::to_string(t.columns.size()) + " fields, found " +
                            std::to_string(cells.size()));
        std::vector<std::optional<double>> row;
        for (const auto& c : cells) {
            if (c.empty()) {
                row.emplace_back();
                continue;
            }
            double v = 0;
            const char* b = c.data();
            const char* e = b + c.size();
            if (*b == '+') ++b;
            auto [p, ec] = std::from_chars(b, e, v);
            if (ec != std::errc() || p != e)
                throw csv_error(where(path, i + 1) + "cannot parse '" + c + "' as a number");
            row.emplace_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<double> read_points(const std::string& path) {
    const csv_table t = read_numeric_csv(path, {"x"});
    std::vector<double> x;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i][0] || !std::isfinite(*t.rows[i][0]))
            throw csv_error(where(path, i + 2) + "point must be a finite number");
        x.push_back(*t.rows[i][0]);
    }
    if (x.empty()) throw csv_error(path + ": no data rows");
    return x;
}

std::vector<double> read_complex(const std::string& path) {
    const csv_table t = read_numeric_csv(path, {"re", "im"});
    std::vector<double> v;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (const auto& c : t.rows[i]) {
            if (!c || !std::isfinite(*c)) throw csv_error(where(path, i + 2) + "value must be a finite number");
            v.push_back(*c);
        }
    }
    if (v.empty()) throw csv_error(path + ": no data rows");
    return v;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

csv_writer::csv_writer(const std::string& path) : f_(nullptr), owned_(false), path_(path) {
    if (path.empty() || path == "-") {
        f_ = stdout;
    } else {
        f_ = std::fopen(path.c_str(), "w");
        if (!f_) throw csv_error(path + ": cannot open for writing");
        owned_ = true;
    }
}

csv_writer::~csv_writer() {
    if (owned_) std::fclose(f_);
    else std::fflush(f_);
}

void csv_writer::row(const std::vector<std::string>& cells) {
    const std::string s = join(cells) + "\n";
    if (std::fwrite(s.data(), 1, s.size(), f_) != s.size()) throw csv_error(path_ + ": write failed");
}

}  // namespace esn_cli
