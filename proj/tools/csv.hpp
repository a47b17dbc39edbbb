#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esn_cli {

// message already carries "file:line: "
class csv_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct csv_table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;  // empty cells are nullopt
};

// header must match `expected` exactly (after trimming); every cell must parse
csv_table read_numeric_csv(const std::string& path, const std::vector<std::string>& expected = {});
std::vector<double> read_points(const std::string& path);
// interleaved re, im
std::vector<double> read_complex(const std::string& path);

std::string format_number(double v);

class csv_writer {
public:
    // "-" or empty writes to standard output
    explicit csv_writer(const std::string& path);
    ~csv_writer();
    csv_writer(const csv_writer&) = delete;
    csv_writer& operator=(const csv_writer&) = delete;
    void row(const std::vector<std::string>& cells);

private:
    std::FILE* f_;
    bool owned_;
    std::string path_;
};

}  // namespace esn_cli
