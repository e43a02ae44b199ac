#pragma once

#include <stdexcept>
#include <string>

namespace edgeflow {

// Base class for everything thrown by this library. Every error carries a
// stable machine-readable name (lower_snake_case, never localized) so tools
// can match on it; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(const std::string& msg) : Error("self_loop", msg) {}
};

class DuplicateEdgeError : public Error {
public:
    explicit DuplicateEdgeError(const std::string& msg) : Error("duplicate_edge", msg) {}
};

class NodeIndexError : public Error {
public:
    explicit NodeIndexError(const std::string& msg) : Error("node_index_out_of_range", msg) {}
};

class EdgeIndexError : public Error {
public:
    explicit EdgeIndexError(const std::string& msg) : Error("edge_index_out_of_range", msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("dimension_mismatch", msg) {}
};

class NotSymmetricError : public Error {
public:
    explicit NotSymmetricError(const std::string& msg) : Error("not_symmetric", msg) {}
};

class NotPositiveDefiniteError : public Error {
public:
    explicit NotPositiveDefiniteError(const std::string& msg)
        : Error("not_positive_definite", msg) {}
};

// Iterative or sweep-based methods that run out of budget report how far
// they got.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, long iterations)
        : Error("no_convergence", msg), iterations_(iterations) {}

    long iterations() const noexcept { return iterations_; }

private:
    long iterations_;
};

class TrivialCycleSpaceError : public Error {
public:
    explicit TrivialCycleSpaceError(const std::string& msg)
        : Error("trivial_cycle_space", msg) {}
};

class CutoffError : public Error {
public:
    explicit CutoffError(const std::string& msg) : Error("cutoff_out_of_range", msg) {}
};

class InvalidFilterSpecError : public Error {
public:
    explicit InvalidFilterSpecError(const std::string& msg)
        : Error("invalid_filter_spec", msg) {}
};

// The mixed filter has no frequency response relative to a single operator:
// its two regularizers do not commute, so no shared eigenbasis exists.
class MixedResponseError : public Error {
public:
    explicit MixedResponseError(const std::string& msg)
        : Error("mixed_filter_has_no_single_operator_response", msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& file, long line, const std::string& message)
        : Error("parse_error", file + ":" + std::to_string(line) + ": " + message),
          file_(file), line_(line) {}

    const std::string& file() const noexcept { return file_; }
    long line() const noexcept { return line_; }

private:
    std::string file_;
    long line_;
};

class GraphHashMismatchError : public Error {
public:
    explicit GraphHashMismatchError(const std::string& msg)
        : Error("graph_hash_mismatch", msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io_error", msg) {}
};

class InvalidRecipeError : public Error {
public:
    explicit InvalidRecipeError(const std::string& msg) : Error("invalid_recipe", msg) {}
};

class EmptyGridError : public Error {
public:
    explicit EmptyGridError(const std::string& msg) : Error("empty_grid", msg) {}
};

}  // namespace edgeflow
