#pragma once
// Line-delimited result records. One record per line, space-separated
// key=value fields in fixed order; optional fields are omitted. Replaying a
// record file into a dedup set makes long searches resumable.

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>

#include "ccode/types.hpp"

namespace ccode {

struct ResultRecord {
    Kind kind = Kind::coil;
    int d = 0;
    int k = 0;
    int n = 0;
    std::optional<std::string> perm;  // cycle notation
    std::optional<std::string> leap;  // bit string, coordinate 0 first
    std::optional<int> period;
    std::optional<int> initial_len;
    std::optional<int> truncation;
    std::string seq;  // transition text
    std::string key;  // canonical key, lowercase hex
};

std::string format_record(const ResultRecord& rec);
ResultRecord parse_record(const std::string& line);

// Canonical keys of all records in the stream (used by --resume).
std::unordered_set<std::string> load_record_keys(std::istream& in);

}  // namespace ccode
