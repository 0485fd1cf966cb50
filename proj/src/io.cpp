#include "weylinc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace weylinc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_sequence(std::ostream& out, const PointSequence& seq) {
    out << "# dim=" << seq.dim() << " family=" << seq.provenance().family
        << " seed=" << seq.provenance().seed << " n=" << seq.size() << "\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto p = seq.point(i);
        for (int j = 0; j < seq.dim(); ++j) {
            if (j)
                out << ' ';
            out << format_double(p[static_cast<std::size_t>(j)]);
        }
        out << '\n';
    }
}

void write_sequence_file(const std::string& path, const PointSequence& seq) {
    std::ofstream out(path);
    if (!out)
        throw config_error("cannot open output file '" + path + "'");
    write_sequence(out, seq);
}

namespace {

std::string header_field(const std::string& header, const std::string& key) {
    auto pos = header.find(key + "=");
    if (pos == std::string::npos)
        throw config_error("sequence header missing field '" + key + "'");
    pos += key.size() + 1;
    auto end = header.find(' ', pos);
    return header.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

}  // namespace

PointSequence read_sequence(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# ", 0) != 0)
        throw config_error("sequence file: missing '# dim=... family=...' header");

    int dim = std::stoi(header_field(header, "dim"));
    std::string family = header_field(header, "family");
    std::uint64_t seed = std::stoull(header_field(header, "seed"));
    std::size_t n = std::stoull(header_field(header, "n"));

    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(dim));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        double v;
        int got = 0;
        while (row >> v) {
            data.push_back(v);
            ++got;
        }
        if (got != dim)
            throw config_error("sequence file: row with " + std::to_string(got) +
                               " values, expected " + std::to_string(dim));
    }
    if (data.size() != n * static_cast<std::size_t>(dim))
        throw config_error("sequence file: expected " + std::to_string(n) + " points, got " +
                           std::to_string(data.size() / static_cast<std::size_t>(dim)));

    Provenance prov;
    prov.family = family;
    prov.params = "loaded";
    prov.seed = seed;
    return PointSequence(dim, std::move(data), std::move(prov));
}

PointSequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open input file '" + path + "'");
    return read_sequence(in);
}

void JsonWriter::separator() {
    if (need_comma_)
        out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin() { return begin_object(); }

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separator();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_double(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    out_ += '"';
    out_ += v;
    out_ += '"';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

}  // namespace weylinc
