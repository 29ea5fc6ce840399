#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vizplan/errors.hpp"

namespace vizplan {

enum class Aggregate { Avg, Sum, Min, Max, Count };

std::string_view aggregate_token(Aggregate agg);
Aggregate parse_aggregate(std::string_view token);

/// Column layout of a table: grouping (categorical) columns, numeric
/// measure columns, and the aggregate functions applied to measures.
/// Cell addresses index the concatenation dimensions ++ measures.
struct Schema {
    std::vector<std::string> dimensions;
    std::vector<std::string> measures;
    std::vector<Aggregate> aggregates{Aggregate::Avg, Aggregate::Sum,
                                      Aggregate::Max, Aggregate::Min};

    std::size_t column_count() const { return dimensions.size() + measures.size(); }
    bool is_dimension_column(std::size_t column) const { return column < dimensions.size(); }
    const std::string& column_name(std::size_t column) const {
        return is_dimension_column(column) ? dimensions[column]
                                           : measures[column - dimensions.size()];
    }
    /// Index over dimensions ++ measures, or nullopt if the name is unknown.
    std::optional<std::size_t> column_index(std::string_view name) const;
    std::optional<std::size_t> dimension_index(std::string_view name) const;

    /// Throws ConfigError unless dimensions/measures/aggregates are non-empty
    /// and dimension and measure names are disjoint.
    void validate() const;
};

/// Zero-based (row, column) position; columns span dimensions ++ measures.
struct CellAddress {
    std::size_t row = 0;
    std::size_t column = 0;

    friend bool operator==(const CellAddress&, const CellAddress&) = default;
    /// Row-major order.
    friend auto operator<=>(const CellAddress& a, const CellAddress& b) {
        if (auto c = a.row <=> b.row; c != 0) return c;
        return a.column <=> b.column;
    }
};

/// Immutable complete table. Dimension cells hold non-empty categorical
/// tokens, measure cells finite reals. Stored column-major.
class Dataset {
public:
    Dataset(Schema schema,
            std::vector<std::vector<std::string>> dimension_columns,
            std::vector<std::vector<double>> measure_columns);

    const Schema& schema() const { return schema_; }
    std::size_t row_count() const { return row_count_; }
    std::size_t cell_count() const { return row_count_ * schema_.column_count(); }

    const std::string& dimension_value(std::size_t row, std::size_t dim_index) const {
        return dimension_columns_[dim_index][row];
    }
    double measure_value(std::size_t row, std::size_t measure_index) const {
        return measure_columns_[measure_index][row];
    }

    bool contains(CellAddress cell) const {
        return cell.row < row_count_ && cell.column < schema_.column_count();
    }

private:
    Schema schema_;
    std::size_t row_count_;
    std::vector<std::vector<std::string>> dimension_columns_;
    std::vector<std::vector<double>> measure_columns_;
};

using DatasetPtr = std::shared_ptr<const Dataset>;

/// A complete table plus the set of cell addresses currently unreadable.
/// The ground truth is retained so an imputation restores the true value.
/// Value semantics: imputing yields a new logical state.
class MaskedDataset {
public:
    MaskedDataset(DatasetPtr ground_truth, const std::vector<CellAddress>& mask);

    const Dataset& ground_truth() const { return *ground_truth_; }
    DatasetPtr ground_truth_ptr() const { return ground_truth_; }
    const Schema& schema() const { return ground_truth_->schema(); }
    std::size_t row_count() const { return ground_truth_->row_count(); }

    bool is_missing(CellAddress cell) const {
        return missing_[flat_index(cell)];
    }
    std::size_t missing_count() const { return missing_count_; }

    /// Present dimension value, or nullopt if masked.
    std::optional<std::string_view> dimension_at(std::size_t row, std::size_t dim_index) const;
    /// Present measure value, or nullopt if masked.
    std::optional<double> measure_at(std::size_t row, std::size_t measure_index) const;

    // Row/column occupancy counters, maintained incrementally.
    std::size_t present_dimensions_in_row(std::size_t row) const {
        return schema().dimensions.size() - row_missing_dims_[row];
    }
    std::size_t present_measures_in_row(std::size_t row) const {
        return schema().measures.size() - row_missing_meas_[row];
    }
    std::size_t missing_in_column(std::size_t column) const {
        return column_missing_[column];
    }

    /// Restores the ground-truth value at `cell`, in place.
    /// Throws CellNotMissingError if the cell is not masked.
    void impute(CellAddress cell);

private:
    std::size_t flat_index(CellAddress cell) const {
        return cell.row * schema().column_count() + cell.column;
    }

    DatasetPtr ground_truth_;
    std::vector<bool> missing_;
    std::size_t missing_count_ = 0;
    std::vector<std::uint32_t> row_missing_dims_;
    std::vector<std::uint32_t> row_missing_meas_;
    std::vector<std::uint32_t> column_missing_;
};

/// Row filter: the whole table, or rows whose dimension column equals a value.
struct SubsetSpec {
    enum class Kind { WholeData, Predicate };
    Kind kind = Kind::WholeData;
    std::string column;
    std::string value;

    static SubsetSpec whole_data() { return {}; }
    static SubsetSpec predicate(std::string column, std::string value) {
        return {Kind::Predicate, std::move(column), std::move(value)};
    }
    bool is_whole_data() const { return kind == Kind::WholeData; }

    friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;
};

// ---- operations ----

/// Parses a UTF-8 CSV file (first row = header) against `schema`.
/// Columns bind by exact header-name match; extra columns are ignored.
/// Rows whose measure cells do not parse as finite reals, or with empty
/// dimension tokens, are dropped. A row with the wrong field count is a
/// ParseError. Throws MissingColumnError / EmptyDatasetError.
Dataset load_dataset(const std::string& path, const Schema& schema);

/// Same parser over an in-memory CSV string (used by tests and fixtures).
Dataset load_dataset_from_string(const std::string& csv, const Schema& schema);

/// Masks round(rate * cell_count) distinct cells chosen uniformly at random
/// over the whole table. Deterministic in (dataset, rate, seed).
MaskedDataset inject_mcar(DatasetPtr dataset, double rate, std::uint64_t seed);

/// Returns a copy with `cell` restored to its ground-truth value.
MaskedDataset impute_cell(const MaskedDataset& masked, CellAddress cell);

/// Mask contents in row-major order (stable order for tie-breaking).
std::vector<CellAddress> missing_cells(const MaskedDataset& masked);

/// True iff `row` is in the subset. Rows whose predicate cell is masked
/// report nullopt (membership unknown); WholeData is always true.
std::optional<bool> row_in_subset(const MaskedDataset& data, std::size_t row,
                                  const SubsetSpec& subset);

}  // namespace vizplan
