#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace whit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A ψ-value on Ω was zero.
class SingularPsi : public Error {
public:
    using Error::Error;
};

class NotPositive : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

/// Reduction exceeded its iteration cap. Exact descent makes this an engine bug.
class NonTermination : public Error {
public:
    using Error::Error;
};

/// A rewrite or reduction step failed to decrease its termination measure.
class InternalAssertion : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class ProbeFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {})
        : Error(make_message(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string make_message(std::size_t offset, const std::vector<std::string>& expected,
                                    const std::string& detail) {
        std::string msg = "parse error at offset " + std::to_string(offset);
        if (!expected.empty()) {
            msg += ": expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += " | ";
                msg += expected[i];
            }
        }
        if (!detail.empty()) msg += " (" + detail + ")";
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace whit
