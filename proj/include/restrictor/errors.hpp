#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace restrictor {

/// Base of every typed failure the library reports.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolated : public Error
{
public:
    explicit PreconditionViolated(const std::string & what) : Error("precondition violated: " + what) {}
};

/// An exact checker was asked to enumerate more than its configured cap.
class CapExceeded : public Error
{
public:
    explicit CapExceeded(const std::string & what) : Error("exact cap exceeded: " + what) {}
};

class SearchFailed : public Error
{
public:
    explicit SearchFailed(const std::string & what) : Error("search failed: " + what) {}
};

class RetryExhausted : public Error
{
public:
    explicit RetryExhausted(std::size_t attempts) :
        Error("retry cap exhausted after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts)
    {
    }

    auto attempts() const -> std::size_t { return attempts_; }

private:
    std::size_t attempts_;
};

class NoViableVertex : public Error
{
public:
    NoViableVertex(std::size_t pattern_vertex, std::size_t level) :
        Error("no viable host vertex for pattern vertex " + std::to_string(pattern_vertex) + " at level " +
              std::to_string(level)),
        pattern_vertex_(pattern_vertex),
        level_(level)
    {
    }

    auto pattern_vertex() const -> std::size_t { return pattern_vertex_; }
    auto level() const -> std::size_t { return level_; }

private:
    std::size_t pattern_vertex_;
    std::size_t level_;
};

class ValidationFailed : public Error
{
public:
    explicit ValidationFailed(const std::string & what) : Error("validation failed: " + what) {}
};

class ConfigMissing : public Error
{
public:
    explicit ConfigMissing(const std::string & what) : Error("configuration missing: " + what) {}
};

} // namespace restrictor
