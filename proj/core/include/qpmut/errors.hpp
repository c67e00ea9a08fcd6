#pragma once

#include <stdexcept>
#include <string>

namespace qpmut {

// Base class for all library errors. Subclasses map onto the CLI exit codes:
// input_error -> 2, check_error -> 3, resource_error -> 4.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class input_error : public error {
public:
    using error::error;
};

class check_error : public error {
public:
    using error::error;
};

class resource_error : public error {
public:
    using error::error;
};

class dimension_error : public input_error {
public:
    using input_error::input_error;
};

class divisibility_error : public check_error {
public:
    using check_error::check_error;
};

class domain_error : public input_error {
public:
    using input_error::input_error;
};

class mutation_domain_error : public input_error {
public:
    using input_error::input_error;
};

class admissibility_error : public input_error {
public:
    using input_error::input_error;
};

class truncation_error : public check_error {
public:
    using check_error::check_error;
};

class internal_error : public check_error {
public:
    using check_error::check_error;
};

class parse_error : public input_error {
public:
    using input_error::input_error;
};

}  // namespace qpmut
