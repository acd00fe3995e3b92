#ifndef RAINBOW_ERRORS_HPP
#define RAINBOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

// Bad arguments, malformed parameters, violated type invariants.  CLI exit 1.
class param_error : public std::invalid_argument {
public:
    explicit param_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// File / stream / format failures.  CLI exit 1.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A procedure hypothesis or feasibility condition does not hold for the given
// instance.  Carries the name of the failing condition.  CLI exit 2.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(std::string condition, const std::string& msg)
        : std::runtime_error(msg), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

}  // namespace rainbow

#endif
