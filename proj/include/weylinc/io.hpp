#pragma once

#include <iosfwd>
#include <string>

#include "weylinc/core.hpp"

namespace weylinc {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// Line-oriented sequence format: header
///   # dim=<d> family=<name> seed=<s> n=<N>
/// then one point per line, d space-separated 17-significant-digit decimals.
void write_sequence(std::ostream& out, const PointSequence& seq);
void write_sequence_file(const std::string& path, const PointSequence& seq);

PointSequence read_sequence(std::istream& in);
PointSequence read_sequence_file(const std::string& path);

/// Minimal ordered JSON writer; all numbers go through format_double.
class JsonWriter {
public:
    JsonWriter& begin();
    JsonWriter& end();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(bool v);
    JsonWriter& begin_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    std::string str() const { return out_; }

private:
    void separator();
    std::string out_;
    bool need_comma_ = false;
};

}  // namespace weylinc
