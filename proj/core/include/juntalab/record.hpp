#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace juntalab {

/// Flat ordered record for machine-readable reports. Field order is
/// insertion order and is preserved verbatim in both output formats, so
/// identical runs emit identical bytes.
class Record {
public:
    using Value = std::variant<std::nullptr_t, bool, std::int64_t, double, std::string,
                               std::vector<std::int64_t>>;

    Record& set(std::string key, Value v);
    Record& set_null(std::string key) { return set(std::move(key), nullptr); }

    const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }
    std::vector<std::string> keys() const;

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

/// JSON-lines: one object per record, doubles at 17 significant digits
/// (round-trip exact), non-finite doubles as null.
void write_jsonl(std::ostream& out, std::span<const Record> records);

/// CSV with a fixed header (from the first record, or the schema when the
/// record list is empty); doubles at 6 significant digits.
void write_csv(std::ostream& out, std::span<const Record> records,
               const std::vector<std::string>& schema = {});

}  // namespace juntalab
