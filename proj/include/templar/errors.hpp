#ifndef TEMPLAR_ERRORS_HPP_
#define TEMPLAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace templar {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or empty input that cannot be turned into a DOM tree.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// A page could not be fetched (network failure, missing manifest entry, ...).
class LoadError : public Error {
public:
    explicit LoadError(const std::string& what) : Error("load error: " + what) {}
};

// A caller violated a documented precondition.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& what) : Error("contract violation: " + what) {}
};

// Bad weights/threshold configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

} // namespace templar

#endif
