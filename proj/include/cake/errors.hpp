#pragma once

#include <stdexcept>
#include <string>

namespace cake {

// Argument outside an operation's domain (point outside [0,1], a > b, bad agent index...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An algorithm was invoked on an instance or input outside the class it is defined for.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rejected while constructing or loading an instance.
class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cake
