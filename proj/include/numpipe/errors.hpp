#pragma once

#include <stdexcept>
#include <string>

namespace numpipe {

struct SchemaParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HeaderMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnboundPlaceholder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnrecognizedTemplate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterpreterMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoAnswer : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyEvidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace numpipe
