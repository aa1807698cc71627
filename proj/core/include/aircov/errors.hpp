#ifndef AIRCOV_ERRORS_HPP
#define AIRCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aircov {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: out-of-range parameter, malformed config, violated precondition.
// CLI maps this to exit code 2.
class validation_error : public error {
public:
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// The request is well-formed but has no solution (e.g. no gain crossover,
// no fleet of <= 10 UAVs). CLI maps this to exit code 3.
class infeasible_error : public error {
public:
    explicit infeasible_error(const std::string& msg) : error(msg) {}
};

class no_crossover_error : public infeasible_error {
public:
    explicit no_crossover_error(const std::string& msg) : infeasible_error(msg) {}
};

// Numerical breakdown: singular denominator, solver ran off its cap.
// CLI maps this to exit code 4.
class numerical_error : public error {
public:
    explicit numerical_error(const std::string& msg) : error(msg) {}
};

class singularity_error : public numerical_error {
public:
    explicit singularity_error(const std::string& msg) : numerical_error(msg) {}
};

class unbounded_radius_error : public numerical_error {
public:
    explicit unbounded_radius_error(const std::string& msg) : numerical_error(msg) {}
};

} // namespace aircov

#endif
