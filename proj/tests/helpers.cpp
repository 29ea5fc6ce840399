#include "helpers.hpp"

namespace helpers {

using namespace vizplan;

DatasetPtr heart_sample(std::size_t rows) {
    const auto full = heart_dataset();
    const auto& schema = full->schema();
    const std::size_t take = std::min(rows, full->row_count());
    std::vector<std::vector<std::string>> dims(schema.dimensions.size());
    std::vector<std::vector<double>> meas(schema.measures.size());
    for (std::size_t d = 0; d < schema.dimensions.size(); ++d)
        for (std::size_t r = 0; r < take; ++r)
            dims[d].push_back(full->dimension_value(r, d));
    for (std::size_t m = 0; m < schema.measures.size(); ++m)
        for (std::size_t r = 0; r < take; ++r)
            meas[m].push_back(full->measure_value(r, m));
    return std::make_shared<const Dataset>(schema, std::move(dims), std::move(meas));
}

RandomInstance random_instance(Rng& rng, std::size_t max_missing,
                               std::size_t columns) {
    const std::size_t rows = 2 + rng.next_below(11);  // 2..12
    const std::size_t dim_count = 1 + rng.next_below(columns - 1);

    Schema schema;
    for (std::size_t d = 0; d < dim_count; ++d)
        schema.dimensions.push_back("d" + std::to_string(d));
    for (std::size_t m = 0; m < columns - dim_count; ++m)
        schema.measures.push_back("m" + std::to_string(m));
    schema.aggregates.clear();
    const Aggregate all[] = {Aggregate::Avg, Aggregate::Sum, Aggregate::Min,
                             Aggregate::Max};
    const std::size_t agg_count = 1 + rng.next_below(4);
    for (std::size_t i = 0; i < agg_count; ++i) schema.aggregates.push_back(all[i]);

    const char* tokens[] = {"a", "b", "c"};
    std::vector<std::vector<std::string>> dims(schema.dimensions.size());
    std::vector<std::vector<double>> meas(schema.measures.size());
    for (std::size_t r = 0; r < rows; ++r) {
        for (auto& col : dims) col.push_back(tokens[rng.next_below(3)]);
        for (auto& col : meas)
            col.push_back(0.5 + static_cast<double>(rng.next_below(19)) * 0.5);
    }

    RandomInstance inst;
    inst.dataset =
        std::make_shared<const Dataset>(schema, std::move(dims), std::move(meas));

    const std::size_t cells = inst.dataset->cell_count();
    const std::size_t want = std::min(max_missing, cells - 1);
    std::vector<std::size_t> flat(cells);
    for (std::size_t i = 0; i < cells; ++i) flat[i] = i;
    for (std::size_t i = 0; i < want; ++i) {
        const std::size_t j = i + rng.next_below(cells - i);
        std::swap(flat[i], flat[j]);
        inst.mask.push_back(
            {flat[i] / schema.column_count(), flat[i] % schema.column_count()});
    }

    switch (rng.next_below(4)) {
        case 0:
            inst.target = SubsetSpec::predicate("d0", tokens[rng.next_below(3)]);
            inst.reference = SubsetSpec::whole_data();
            break;
        case 1:
            inst.target = SubsetSpec::predicate("d0", "a");
            inst.reference = SubsetSpec::predicate("d0", "b");
            break;
        default:
            inst.target = SubsetSpec::whole_data();
            inst.reference = SubsetSpec::whole_data();
            break;
    }
    return inst;
}

}  // namespace helpers
