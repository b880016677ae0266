#ifndef PGROW_FUNCSPEC_HPP
#define PGROW_FUNCSPEC_HPP

#include <map>
#include <string>

namespace pgrow {

/// Parsed form of a function selector:
///   name                      catalog family, no parameters
///   name:key=val,key=val      catalog family with parameters
///   csv:path                  sampled data from a CSV file
///   csv:path#col              a named column of a multi-column CSV
struct FunctionSpec {
    enum class Kind { family, csv };
    Kind kind = Kind::family;
    std::string name;                      // family name, or the file path
    std::map<std::string, double> params;  // family parameters
    std::string column;                    // optional CSV column
};

/// Total parse: returns a spec or throws ParseError with the offset of the
/// offending character.
FunctionSpec parse_function_spec(const std::string& text);

} // namespace pgrow

#endif
