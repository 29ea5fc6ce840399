#include "vizplan/tabular.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vizplan/rng.hpp"

namespace vizplan {

std::string_view aggregate_token(Aggregate agg) {
    switch (agg) {
        case Aggregate::Avg: return "avg";
        case Aggregate::Sum: return "sum";
        case Aggregate::Min: return "min";
        case Aggregate::Max: return "max";
        case Aggregate::Count: return "count";
    }
    return "?";
}

Aggregate parse_aggregate(std::string_view token) {
    if (token == "avg") return Aggregate::Avg;
    if (token == "sum") return Aggregate::Sum;
    if (token == "min") return Aggregate::Min;
    if (token == "max") return Aggregate::Max;
    if (token == "count") return Aggregate::Count;
    throw ConfigError("unknown aggregate token: " + std::string(token));
}

std::optional<std::size_t> Schema::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < dimensions.size(); ++i)
        if (dimensions[i] == name) return i;
    for (std::size_t i = 0; i < measures.size(); ++i)
        if (measures[i] == name) return dimensions.size() + i;
    return std::nullopt;
}

std::optional<std::size_t> Schema::dimension_index(std::string_view name) const {
    for (std::size_t i = 0; i < dimensions.size(); ++i)
        if (dimensions[i] == name) return i;
    return std::nullopt;
}

void Schema::validate() const {
    if (dimensions.empty()) throw ConfigError("schema declares no dimension columns");
    if (measures.empty()) throw ConfigError("schema declares no measure columns");
    if (aggregates.empty()) throw ConfigError("schema declares no aggregate functions");
    for (const auto& d : dimensions)
        if (std::find(measures.begin(), measures.end(), d) != measures.end())
            throw ConfigError("column declared both dimension and measure: " + d);
}

Dataset::Dataset(Schema schema,
                 std::vector<std::vector<std::string>> dimension_columns,
                 std::vector<std::vector<double>> measure_columns)
    : schema_(std::move(schema)),
      dimension_columns_(std::move(dimension_columns)),
      measure_columns_(std::move(measure_columns)) {
    schema_.validate();
    if (dimension_columns_.size() != schema_.dimensions.size() ||
        measure_columns_.size() != schema_.measures.size())
        throw Error("column data does not match schema");
    row_count_ = dimension_columns_.front().size();
    for (const auto& col : dimension_columns_) {
        if (col.size() != row_count_) throw Error("ragged dimension column");
        for (const auto& token : col)
            if (token.empty()) throw Error("empty categorical token");
    }
    for (const auto& col : measure_columns_) {
        if (col.size() != row_count_) throw Error("ragged measure column");
        for (const double value : col)
            if (!std::isfinite(value)) throw Error("non-finite measure value");
    }
    if (row_count_ == 0) throw EmptyDatasetError();
}

MaskedDataset::MaskedDataset(DatasetPtr ground_truth, const std::vector<CellAddress>& mask)
    : ground_truth_(std::move(ground_truth)) {
    const auto& schema = ground_truth_->schema();
    missing_.assign(ground_truth_->cell_count(), false);
    row_missing_dims_.assign(ground_truth_->row_count(), 0);
    row_missing_meas_.assign(ground_truth_->row_count(), 0);
    column_missing_.assign(schema.column_count(), 0);
    for (const auto& cell : mask) {
        if (!ground_truth_->contains(cell))
            throw Error("mask cell outside dataset bounds");
        const std::size_t idx = cell.row * schema.column_count() + cell.column;
        if (missing_[idx]) continue;
        missing_[idx] = true;
        ++missing_count_;
        if (schema.is_dimension_column(cell.column))
            ++row_missing_dims_[cell.row];
        else
            ++row_missing_meas_[cell.row];
        ++column_missing_[cell.column];
    }
}

std::optional<std::string_view> MaskedDataset::dimension_at(std::size_t row,
                                                            std::size_t dim_index) const {
    if (missing_[row * schema().column_count() + dim_index]) return std::nullopt;
    return std::string_view(ground_truth_->dimension_value(row, dim_index));
}

std::optional<double> MaskedDataset::measure_at(std::size_t row,
                                                std::size_t measure_index) const {
    const std::size_t column = schema().dimensions.size() + measure_index;
    if (missing_[row * schema().column_count() + column]) return std::nullopt;
    return ground_truth_->measure_value(row, measure_index);
}

void MaskedDataset::impute(CellAddress cell) {
    if (!ground_truth_->contains(cell) || !missing_[flat_index(cell)])
        throw CellNotMissingError(cell.row, cell.column);
    missing_[flat_index(cell)] = false;
    --missing_count_;
    if (schema().is_dimension_column(cell.column))
        --row_missing_dims_[cell.row];
    else
        --row_missing_meas_[cell.row];
    --column_missing_[cell.column];
}

namespace {

// One CSV record; handles quoted fields and CRLF endings.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::optional<double> parse_measure(const std::string& raw) {
    const std::string s = trimmed(raw);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) return std::nullopt;
    return value;
}

Dataset parse_csv(std::istream& in, const Schema& schema) {
    schema.validate();
    std::string line;
    if (!std::getline(in, line)) throw EmptyDatasetError();
    const auto header = split_csv_line(line);

    // Bind schema columns to file positions by exact name.
    auto position_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trimmed(header[i]) == name) return i;
        throw MissingColumnError(name);
        return std::size_t{0};
    };
    std::vector<std::size_t> dim_pos, meas_pos;
    for (const auto& name : schema.dimensions) dim_pos.push_back(position_of(name));
    for (const auto& name : schema.measures) meas_pos.push_back(position_of(name));

    std::vector<std::vector<std::string>> dim_cols(schema.dimensions.size());
    std::vector<std::vector<double>> meas_cols(schema.measures.size());

    std::size_t row_number = 0;
    while (std::getline(in, line)) {
        ++row_number;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError(row_number, fields.size(),
                             "expected " + std::to_string(header.size()) + " fields");

        std::vector<std::string> dims;
        std::vector<double> meas;
        bool usable = true;
        for (const auto pos : dim_pos) {
            auto token = trimmed(fields[pos]);
            if (token.empty()) { usable = false; break; }
            dims.push_back(std::move(token));
        }
        if (usable) {
            for (const auto pos : meas_pos) {
                const auto value = parse_measure(fields[pos]);
                if (!value) { usable = false; break; }
                meas.push_back(*value);
            }
        }
        if (!usable) continue;  // reject rows with unparseable cells
        for (std::size_t i = 0; i < dims.size(); ++i) dim_cols[i].push_back(std::move(dims[i]));
        for (std::size_t i = 0; i < meas.size(); ++i) meas_cols[i].push_back(meas[i]);
    }
    if (dim_cols.front().empty()) throw EmptyDatasetError();
    return Dataset(schema, std::move(dim_cols), std::move(meas_cols));
}

}  // namespace

Dataset load_dataset(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_csv(in, schema);
}

Dataset load_dataset_from_string(const std::string& csv, const Schema& schema) {
    std::istringstream in(csv);
    return parse_csv(in, schema);
}

MaskedDataset inject_mcar(DatasetPtr dataset, double rate, std::uint64_t seed) {
    if (!(rate > 0.0 && rate < 1.0)) throw RateOutOfRangeError(rate);
    const std::size_t total = dataset->cell_count();
    const auto target = static_cast<std::size_t>(
        std::llround(rate * static_cast<double>(total)));

    // Partial Fisher-Yates over all flat cell indices.
    std::vector<std::size_t> indices(total);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    Rng rng(seed);
    const std::size_t take = std::min(target, total);
    std::vector<CellAddress> mask;
    mask.reserve(take);
    const std::size_t columns = dataset->schema().column_count();
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + rng.next_below(total - i);
        std::swap(indices[i], indices[j]);
        mask.push_back({indices[i] / columns, indices[i] % columns});
    }
    return MaskedDataset(std::move(dataset), mask);
}

MaskedDataset impute_cell(const MaskedDataset& masked, CellAddress cell) {
    MaskedDataset next = masked;
    next.impute(cell);
    return next;
}

std::vector<CellAddress> missing_cells(const MaskedDataset& masked) {
    std::vector<CellAddress> cells;
    cells.reserve(masked.missing_count());
    const std::size_t columns = masked.schema().column_count();
    for (std::size_t row = 0; row < masked.row_count(); ++row)
        for (std::size_t col = 0; col < columns; ++col)
            if (masked.is_missing({row, col})) cells.push_back({row, col});
    return cells;
}

std::optional<bool> row_in_subset(const MaskedDataset& data, std::size_t row,
                                  const SubsetSpec& subset) {
    if (subset.is_whole_data()) return true;
    const auto dim = data.schema().dimension_index(subset.column);
    if (!dim) throw ConfigError("predicate column is not a dimension: " + subset.column);
    const auto value = data.dimension_at(row, *dim);
    if (!value) return std::nullopt;
    return *value == subset.value;
}

}  // namespace vizplan
