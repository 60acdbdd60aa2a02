#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slopes {

// Malformed or out-of-contract input. The CLI maps this to exit code 3.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A weights-only HodgeData was passed to an operation that needs an explicit flag.
class FlagRequired : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// An operation needed a certified subobject enumeration and only had a sample.
class Uncertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Declared data violates the hypotheses of a formal check, one message per index.
class HypothesisViolation : public InvalidInput {
public:
    explicit HypothesisViolation(std::vector<std::string> violations)
        : InvalidInput(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "hypothesis violation";
        for (const auto& s : v) out += "; " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

// A certified computation reached a state its proof rules out.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace slopes
