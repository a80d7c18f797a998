#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace inflect {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A size guard (rank, minor count, search box) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Two independently derived quantities that must agree did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Base data lacks intersection numbers needed by an evaluation.
class IncompleteData : public Error {
public:
    explicit IncompleteData(std::vector<std::string> missing);

    const std::vector<std::string>& missing() const noexcept { return missing_; }

private:
    std::vector<std::string> missing_;
};

}  // namespace inflect
