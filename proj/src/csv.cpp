#include "corridorcast/csv.hpp"

#include <charconv>
#include <cstdio>

#include "corridorcast/errors.hpp"

namespace corridorcast::csv {

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string fmt_fixed(double value, int decimals) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

void split_line(std::string_view line, std::vector<std::string>& fields) {
    fields.clear();
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw Error(ErrorCode::InvalidArgument, "bad number '" + std::string(field) + "'");
    return value;
}

long long parse_int(std::string_view field) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw Error(ErrorCode::InvalidArgument, "bad integer '" + std::string(field) + "'");
    return value;
}

Reader::Reader(const std::string& path, const std::vector<std::string>& expected_header)
    : stream_(path), path_(path) {
    if (!stream_) throw Error(ErrorCode::IoError, "cannot open " + path);
    if (!std::getline(stream_, line_))
        throw Error(ErrorCode::EmptyFile, path + " has no header row");
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    ++line_number_;
    std::vector<std::string> header;
    split_line(line_, header);
    if (header != expected_header) {
        std::string expected;
        for (size_t i = 0; i < expected_header.size(); ++i) {
            if (i) expected += ',';
            expected += expected_header[i];
        }
        throw Error(ErrorCode::SchemaMismatch,
                    path + " header is '" + line_ + "', expected '" + expected + "'");
    }
}

bool Reader::next(std::vector<std::string>& fields) {
    while (std::getline(stream_, line_)) {
        ++line_number_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (line_.empty()) continue;
        split_line(line_, fields);
        return true;
    }
    return false;
}

Writer::Writer(const std::string& path) : stream_(path), path_(path) {
    if (!stream_) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
}

void Writer::row(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        if (f.find(',') != std::string::npos || f.find('"') != std::string::npos ||
            f.find('\n') != std::string::npos)
            throw Error(ErrorCode::InvalidArgument,
                        "field '" + f + "' contains a delimiter; not representable");
        if (i) line += ',';
        line += f;
    }
    line += '\n';
    stream_ << line;
    if (!stream_) throw Error(ErrorCode::IoError, "write failed for " + path_);
}

void Writer::raw_line(const std::string& line) {
    stream_ << line << '\n';
    if (!stream_) throw Error(ErrorCode::IoError, "write failed for " + path_);
}

}  // namespace corridorcast::csv
