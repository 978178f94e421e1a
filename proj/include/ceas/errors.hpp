#pragma once

#include <stdexcept>
#include <string>

namespace ceas {

/// Thrown when an operation would exceed its configured work budget
/// (oracle kernel evaluations, NUFFT internal grid size, ...).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on I/O failures in the field file formats.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ceas
