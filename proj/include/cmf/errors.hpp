#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cmf {

// All library failures carry a stable machine-readable code plus a
// human-readable message. The CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Parse errors additionally carry a source position (1-based).
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& what, int line, int col)
        : Error(std::move(code),
                what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace cmf
