#include "pgrow/csv.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pgrow/error.hpp"

namespace pgrow {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(trim(line.substr(pos)));
            break;
        }
        out.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

double parse_number(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size())
            throw IoError("trailing characters in number '" + tok + "' on line " +
                          std::to_string(line_no));
        return v;
    } catch (const std::invalid_argument&) {
        throw IoError("not a number: '" + tok + "' on line " + std::to_string(line_no));
    } catch (const std::out_of_range&) {
        throw IoError("number out of range: '" + tok + "' on line " +
                      std::to_string(line_no));
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

Table read_table(std::istream& in) {
    Table t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (t.header.empty()) {
            t.header = split(stripped);
            if (t.header.size() < 2)
                throw IoError("header must name at least two columns (line " +
                              std::to_string(line_no) + ")");
            t.columns.resize(t.header.size());
            continue;
        }
        const std::vector<std::string> toks = split(stripped);
        if (toks.size() != t.header.size())
            throw IoError("row on line " + std::to_string(line_no) + " has " +
                          std::to_string(toks.size()) + " fields, header has " +
                          std::to_string(t.header.size()));
        for (std::size_t c = 0; c < toks.size(); ++c)
            t.columns[c].push_back(parse_number(toks[c], line_no));
    }
    if (t.header.empty()) throw IoError("empty CSV input");
    if (t.columns[0].empty()) throw IoError("CSV has a header but no data rows");
    return t;
}

std::size_t find_column(const Table& t, const std::string& name) {
    for (std::size_t c = 0; c < t.header.size(); ++c)
        if (t.header[c] == name) return c;
    throw IoError("CSV has no column named '" + name + "'");
}

} // namespace

LogLogSample read_sample_csv(std::istream& in, const std::string& column) {
    const Table t = read_table(in);
    const std::string first = t.header[0];

    std::size_t value_col;
    if (!column.empty())
        value_col = find_column(t, column);
    else if (t.header.size() == 2)
        value_col = 1;
    else
        throw IoError("CSV has " + std::to_string(t.header.size()) +
                      " columns; select one with '#column'");

    const bool log_coords = (first == "x");
    if (!log_coords && first != "r")
        throw IoError("first column must be named 'x' (log data) or 'r' (raw data), got '" +
                      first + "'");

    const auto& a = t.columns[0];
    const auto& v = t.columns[value_col];
    std::vector<double> xs(a.size()), ys(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (log_coords) {
            xs[i] = a[i];
            ys[i] = v[i];
        } else {
            if (!(a[i] > 0.0))
                throw IoError("raw radius must be positive, got " + format_double(a[i]) +
                              " in row " + std::to_string(i + 1));
            if (!(v[i] > 0.0))
                throw IoError("raw value must be positive, got " + format_double(v[i]) +
                              " in row " + std::to_string(i + 1) + "; log storage needs F > 0");
            xs[i] = std::log(a[i]);
            ys[i] = std::log(v[i]);
        }
    }
    try {
        return LogLogSample(std::move(xs), std::move(ys));
    } catch (const DomainError& e) {
        throw IoError(std::string("invalid sample data: ") + e.what());
    }
}

LogLogSample read_sample_file(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_sample_csv(in, column);
}

Track read_track_csv(std::istream& in) {
    const Table t = read_table(in);
    if (t.header[0] != "x")
        throw IoError("track CSV must start with an 'x' column, got '" + t.header[0] + "'");
    Track tr;
    tr.xs = t.columns[0];
    tr.values = t.columns[1];
    for (std::size_t i = 1; i < tr.xs.size(); ++i)
        if (!(tr.xs[i] > tr.xs[i - 1]))
            throw IoError("track xs not strictly increasing in row " + std::to_string(i + 1));
    return tr;
}

Track read_track_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_track_csv(in);
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void write_sample_csv(std::ostream& out, const LogLogSample& s) {
    out << "x,y\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << format_double(s.x(i)) << ',' << format_double(s.y(i)) << '\n';
}

void write_track_csv(std::ostream& out, const Track& t) {
    out << "x,y\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << format_double(t.xs[i]) << ',' << format_double(t.values[i]) << '\n';
}

void write_means_csv(std::ostream& out, const MeansSeries& series) {
    out << "r,c,b,m,normalization\n";
    const std::string norm = to_string(series.normalization);
    for (std::size_t i = 0; i < series.rs.size(); ++i)
        out << format_double(series.rs[i]) << ',' << format_double(series.c[i]) << ','
            << format_double(series.b[i]) << ',' << format_double(series.m[i]) << ','
            << norm << '\n';
}

void write_construction_csv(std::ostream& out, const std::vector<double>& xs,
                            const std::vector<double>& ln_a,
                            const std::vector<double>& ln_v,
                            const std::vector<double>& rho_m) {
    out << "x,lnA,lnV,rho_m\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ln_a[i]) << ','
            << format_double(ln_v[i]) << ',' << format_double(rho_m[i]) << '\n';
}

} // namespace pgrow
