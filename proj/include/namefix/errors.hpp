#ifndef NAMEFIX_ERRORS_HPP
#define NAMEFIX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace namefix {

// Exit code groups used by the CLI: 0 ok, 2 config, 3 parse/ingest,
// 4 io, 5 evaluation alignment.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg, int exit_code = 1)
        : std::runtime_error(msg), code(exit_code) {}
    int code;
};

struct ParseError : Error {
    ParseError(std::size_t line_, std::size_t column_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + msg, 3),
          line(line_), column(column_) {}
    std::size_t line;
    std::size_t column;
};

struct IngestError : Error {
    explicit IngestError(const std::string& msg) : Error("ingest error: " + msg, 3) {}
};

struct PrintError : Error {
    explicit PrintError(const std::string& msg) : Error("print error: " + msg, 3) {}
};

// A mutation site where the operation cannot produce a buggy variant
// (identical printed arguments/operands, or no alternative operator).
struct DegenerateMutation : Error {
    explicit DegenerateMutation(const std::string& msg)
        : Error("degenerate mutation: " + msg, 2) {}
};

struct NotApplicable : Error {
    explicit NotApplicable(const std::string& msg) : Error("not applicable: " + msg, 2) {}
};

struct MissingContext : Error {
    explicit MissingContext(const std::string& msg) : Error("missing context: " + msg, 2) {}
};

struct NotPatchable : Error {
    explicit NotPatchable(const std::string& msg) : Error("not patchable: " + msg, 2) {}
};

struct MissingMap : Error {
    explicit MissingMap(const std::string& msg) : Error("missing abstraction map: " + msg, 2) {}
};

struct MalformedEncoding : Error {
    explicit MalformedEncoding(const std::string& msg)
        : Error("malformed encoding: " + msg, 3) {}
};

struct SplitError : Error {
    explicit SplitError(const std::string& msg) : Error("split error: " + msg, 2) {}
};

struct AlignmentError : Error {
    explicit AlignmentError(const std::string& msg) : Error("alignment error: " + msg, 5) {}
};

struct EmptyReference : Error {
    explicit EmptyReference(const std::string& msg) : Error("empty reference: " + msg, 5) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io error: " + msg, 4) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config error: " + msg, 2) {}
};

} // namespace namefix

#endif
