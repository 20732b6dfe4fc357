#pragma once

#include <stdexcept>
#include <string>

namespace bandix {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier; the CLI maps it into JSON error objects and exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& m) : Error("syntax_error", m) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& m) : Error("range_error", m) {}
};

struct DisconnectedDiagram : Error {
    explicit DisconnectedDiagram(const std::string& m) : Error("disconnected_diagram", m) {}
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& m) : Error("self_loop", m) {}
};

struct NotConnected : Error {
    explicit NotConnected(const std::string& m) : Error("not_connected", m) {}
};

struct NotBipartite : Error {
    explicit NotBipartite(const std::string& m) : Error("not_bipartite", m) {}
};

struct ParityError : Error {
    explicit ParityError(const std::string& m) : Error("parity_error", m) {}
};

struct NegativeGenus : Error {
    explicit NegativeGenus(const std::string& m) : Error("negative_genus", m) {}
};

struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& m) : Error("not_representable", m) {}
};

struct UncoveredCase : Error {
    explicit UncoveredCase(const std::string& m) : Error("uncovered_case", m) {}
};

struct OddParam : Error {
    explicit OddParam(const std::string& m) : Error("odd_param", m) {}
};

struct ZeroParam : Error {
    explicit ZeroParam(const std::string& m) : Error("zero_param", m) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& m) : Error("invalid_input", m) {}
};

/// An internal invariant was violated; maps to CLI exit code 2.
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error("internal_error", m) {}
};

}  // namespace bandix
