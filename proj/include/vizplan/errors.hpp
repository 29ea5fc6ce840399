#pragma once

#include <stdexcept>
#include <string>

namespace vizplan {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A declared column is absent from the input file header.
struct MissingColumnError : Error {
    explicit MissingColumnError(const std::string& column)
        : Error("missing column: " + column), column(column) {}
    std::string column;
};

/// A data row is structurally malformed (wrong field count).
struct ParseError : Error {
    ParseError(std::size_t row, std::size_t column, const std::string& detail)
        : Error("parse error at row " + std::to_string(row) + ", column " +
                std::to_string(column) + ": " + detail),
          row(row), column(column) {}
    std::size_t row;
    std::size_t column;
};

struct EmptyDatasetError : Error {
    EmptyDatasetError() : Error("dataset has no usable rows") {}
};

struct RateOutOfRangeError : Error {
    explicit RateOutOfRangeError(double rate)
        : Error("missing rate must lie in (0,1), got " + std::to_string(rate)) {}
};

struct CellNotMissingError : Error {
    CellNotMissingError(std::size_t row, std::size_t column)
        : Error("cell (" + std::to_string(row) + "," + std::to_string(column) +
                ") is not missing") {}
};

/// A probability normalization saw a negative aggregate value.
struct NegativeMassError : Error {
    explicit NegativeMassError(const std::string& view)
        : Error("negative aggregate mass in view " + view) {}
};

struct PersistenceOutOfRangeError : Error {
    explicit PersistenceOutOfRangeError(double p)
        : Error("rbo persistence must lie in (0,1), got " + std::to_string(p)) {}
};

/// A ranking passed where full coverage of the view space was required.
struct IncompleteRankingError : Error {
    IncompleteRankingError(std::size_t got, std::size_t want)
        : Error("ranking covers " + std::to_string(got) + " views, expected " +
                std::to_string(want)) {}
};

/// A strategy was evaluated without the context it needs (temp ranking, RNG).
struct MissingContextError : Error {
    explicit MissingContextError(const std::string& what) : Error(what) {}
};

struct NegativeBudgetError : Error {
    NegativeBudgetError() : Error("imputation budget must be non-negative") {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Bad configuration or command-line token; reported as a usage error.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace vizplan
