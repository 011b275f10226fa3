#include "juntalab/record.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace juntalab {

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string num6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void json_value(std::ostream& out, const Record::Value& v) {
    if (std::holds_alternative<std::nullptr_t>(v)) {
        out << "null";
    } else if (std::holds_alternative<bool>(v)) {
        out << (std::get<bool>(v) ? "true" : "false");
    } else if (std::holds_alternative<std::int64_t>(v)) {
        out << std::get<std::int64_t>(v);
    } else if (std::holds_alternative<double>(v)) {
        const double d = std::get<double>(v);
        if (std::isfinite(d))
            out << num17(d);
        else
            out << "null";
    } else if (std::holds_alternative<std::string>(v)) {
        out << '"' << escape_json(std::get<std::string>(v)) << '"';
    } else {
        out << '[';
        const auto& list = std::get<std::vector<std::int64_t>>(v);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out << ',';
            out << list[i];
        }
        out << ']';
    }
}

void csv_value(std::ostream& out, const Record::Value& v) {
    if (std::holds_alternative<std::nullptr_t>(v)) {
        return;  // empty cell
    } else if (std::holds_alternative<bool>(v)) {
        out << (std::get<bool>(v) ? "true" : "false");
    } else if (std::holds_alternative<std::int64_t>(v)) {
        out << std::get<std::int64_t>(v);
    } else if (std::holds_alternative<double>(v)) {
        const double d = std::get<double>(v);
        if (std::isfinite(d)) out << num6(d);
    } else if (std::holds_alternative<std::string>(v)) {
        const std::string& s = std::get<std::string>(v);
        if (s.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char c : s) {
                if (c == '"') out << '"';
                out << c;
            }
            out << '"';
        } else {
            out << s;
        }
    } else {
        const auto& list = std::get<std::vector<std::int64_t>>(v);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out << ';';
            out << list[i];
        }
    }
}

}  // namespace

Record& Record::set(std::string key, Value v) {
    for (auto& [k, existing] : fields_) {
        if (k == key) {
            existing = std::move(v);
            return *this;
        }
    }
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

std::vector<std::string> Record::keys() const {
    std::vector<std::string> out;
    out.reserve(fields_.size());
    for (const auto& [k, v] : fields_) out.push_back(k);
    return out;
}

void write_jsonl(std::ostream& out, std::span<const Record> records) {
    for (const auto& rec : records) {
        out << '{';
        bool first = true;
        for (const auto& [k, v] : rec.fields()) {
            if (!first) out << ',';
            first = false;
            out << '"' << escape_json(k) << "\":";
            json_value(out, v);
        }
        out << "}\n";
    }
}

void write_csv(std::ostream& out, std::span<const Record> records,
               const std::vector<std::string>& schema) {
    std::vector<std::string> header = records.empty() ? schema : records.front().keys();
    if (header.empty()) return;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& rec : records) {
        if (rec.keys() != header)
            throw std::invalid_argument("write_csv: records have inconsistent fields");
        bool first = true;
        for (const auto& [k, v] : rec.fields()) {
            if (!first) out << ',';
            first = false;
            csv_value(out, v);
        }
        out << '\n';
    }
}

}  // namespace juntalab
