#include "pgrow/funcspec.hpp"

#include <cctype>

#include "pgrow/error.hpp"

namespace pgrow {

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

FunctionSpec parse_function_spec(const std::string& text) {
    if (text.empty()) throw ParseError("empty function spec", 0);

    std::size_t pos = 0;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    if (pos == 0) throw ParseError("expected a name", 0);

    FunctionSpec spec;
    spec.name = text.substr(0, pos);

    if (spec.name == "csv") {
        if (pos >= text.size() || text[pos] != ':')
            throw ParseError("expected ':' after 'csv'", pos);
        ++pos;
        const std::size_t hash = text.find('#', pos);
        spec.kind = FunctionSpec::Kind::csv;
        if (hash == std::string::npos) {
            spec.name = text.substr(pos);
        } else {
            spec.name = text.substr(pos, hash - pos);
            spec.column = text.substr(hash + 1);
            if (spec.column.empty())
                throw ParseError("expected a column name after '#'", hash + 1);
        }
        if (spec.name.empty()) throw ParseError("expected a file path", pos);
        return spec;
    }

    if (pos == text.size()) return spec; // bare family name

    if (text[pos] != ':')
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    ++pos;

    while (true) {
        const std::size_t key_start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == key_start) throw ParseError("expected a parameter name", pos);
        const std::string key = text.substr(key_start, pos - key_start);
        if (pos >= text.size() || text[pos] != '=')
            throw ParseError("expected '=' after parameter '" + key + "'", pos);
        ++pos;
        const std::size_t val_start = pos;
        try {
            std::size_t used = 0;
            const double v = std::stod(text.substr(val_start), &used);
            if (used == 0) throw std::invalid_argument("");
            pos = val_start + used;
            if (spec.params.count(key))
                throw ParseError("duplicate parameter '" + key + "'", key_start);
            spec.params[key] = v;
        } catch (const std::invalid_argument&) {
            throw ParseError("expected a number for parameter '" + key + "'", val_start);
        } catch (const std::out_of_range&) {
            throw ParseError("number out of range for parameter '" + key + "'", val_start);
        }
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        ++pos;
    }
    return spec;
}

} // namespace pgrow
