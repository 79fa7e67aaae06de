#ifndef PRODCANON_ERRORS_HPP
#define PRODCANON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodcanon {

// Every recoverable failure in the library is one of these kinds; the CLI
// maps Syntax/Domain to exit code 2 and Unsupported to exit code 3.
enum class ErrorKind {
    ZeroInput,
    MixedContent,
    UnsupportedCoefficients,
    LevelMismatch,
    InvalidWitness,
    SyntaxError,
    DomainError,
    PoleBelowDelta,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::ZeroInput: return "ZeroInput";
            case ErrorKind::MixedContent: return "MixedContent";
            case ErrorKind::UnsupportedCoefficients: return "UnsupportedCoefficients";
            case ErrorKind::LevelMismatch: return "LevelMismatch";
            case ErrorKind::InvalidWitness: return "InvalidWitness";
            case ErrorKind::SyntaxError: return "SyntaxError";
            case ErrorKind::DomainError: return "DomainError";
            case ErrorKind::PoleBelowDelta: return "PoleBelowDelta";
        }
        return "Error";
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace prodcanon

#endif
