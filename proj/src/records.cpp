#include "ccode/records.hpp"

#include <istream>
#include <sstream>

namespace ccode {

std::string format_record(const ResultRecord& rec) {
    std::ostringstream out;
    out << "kind=" << kind_name(rec.kind) << " d=" << rec.d << " k=" << rec.k << " N=" << rec.n;
    if (rec.perm) out << " perm=" << *rec.perm;
    if (rec.leap) out << " leap=" << *rec.leap;
    if (rec.period) out << " P=" << *rec.period;
    if (rec.initial_len) out << " L=" << *rec.initial_len;
    if (rec.truncation) out << " trunc=" << *rec.truncation;
    out << " seq=" << rec.seq << " key=" << rec.key;
    return out.str();
}

ResultRecord parse_record(const std::string& line) {
    ResultRecord rec;
    std::istringstream in(line);
    std::string token;
    bool saw_kind = false, saw_seq = false;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed record field: " + token);
        std::string name = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (name == "kind") {
            rec.kind = parse_kind(value);
            saw_kind = true;
        } else if (name == "d") {
            rec.d = std::stoi(value);
        } else if (name == "k") {
            rec.k = std::stoi(value);
        } else if (name == "N") {
            rec.n = std::stoi(value);
        } else if (name == "perm") {
            rec.perm = value;
        } else if (name == "leap") {
            rec.leap = value;
        } else if (name == "P") {
            rec.period = std::stoi(value);
        } else if (name == "L") {
            rec.initial_len = std::stoi(value);
        } else if (name == "trunc") {
            rec.truncation = std::stoi(value);
        } else if (name == "seq") {
            rec.seq = value;
            saw_seq = true;
        } else if (name == "key") {
            rec.key = value;
        } else {
            throw std::invalid_argument("unknown record field: " + name);
        }
    }
    if (!saw_kind || !saw_seq) throw std::invalid_argument("record missing required fields");
    return rec;
}

std::unordered_set<std::string> load_record_keys(std::istream& in) {
    std::unordered_set<std::string> keys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto rec = parse_record(line);
        if (!rec.key.empty()) keys.insert(rec.key);
    }
    return keys;
}

}  // namespace ccode
