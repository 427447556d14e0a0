#pragma once

#include <stdexcept>

namespace hepm {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class SingularConicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegionSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hepm
