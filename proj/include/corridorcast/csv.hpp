#ifndef CORRIDORCAST_CSV_HPP
#define CORRIDORCAST_CSV_HPP

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace corridorcast::csv {

/// Deterministic double formatting for artifacts (round-trips values that
/// were themselves written with <= 10 significant digits).
std::string fmt(double value);
std::string fmt_fixed(double value, int decimals);

void split_line(std::string_view line, std::vector<std::string>& fields);

double parse_double(std::string_view field);   // throws InvalidArgument
long long parse_int(std::string_view field);   // throws InvalidArgument

/// Header-checked row reader. Fields must not contain commas or quotes;
/// the writers below enforce the same restriction.
class Reader {
public:
    Reader(const std::string& path, const std::vector<std::string>& expected_header);

    /// Returns false at end of file. Skips blank lines.
    bool next(std::vector<std::string>& fields);

    size_t line_number() const { return line_number_; }
    const std::string& path() const { return path_; }

private:
    std::ifstream stream_;
    std::string path_;
    std::string line_;
    size_t line_number_ = 0;
};

class Writer {
public:
    explicit Writer(const std::string& path);
    void row(const std::vector<std::string>& fields);
    void raw_line(const std::string& line);

private:
    std::ofstream stream_;
    std::string path_;
};

}  // namespace corridorcast::csv

#endif
