#pragma once

#include "prequant/toric_data.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace prequant {

enum class Format { human, machine };

// Ordered key/value lines with interleaved comments.
// machine: "key=value" and "# comment"; human: aligned "key  value" and "-- comment --".
class Report {
public:
    void comment(std::string text);
    void add(std::string key, std::string value);
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, const Rational& value) { add(std::move(key), to_string(value)); }
    void add(std::string key, const Integer& value) { add(std::move(key), to_string(value)); }
    std::string render(Format format) const;

private:
    struct Line {
        bool is_comment;
        std::string key, value;
    };
    std::vector<Line> lines_;
};

// keys of a machine report; comments and blank lines are skipped, duplicate keys rejected
std::map<std::string, std::string> parse_machine_report(std::string_view text);

// "1,2;3,4" for the rows (or vectors) given
std::string join_rows(const std::vector<IntVector>& rows);
std::vector<IntVector> parse_rows(std::string_view text, std::size_t width);

void add_toric_data(Report& report, const ToricData& T);
ToricData toric_data_from_report(const std::map<std::string, std::string>& keys);

}  // namespace prequant
