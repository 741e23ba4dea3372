#ifndef MINKCHEB_INGEST_HPP
#define MINKCHEB_INGEST_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "minkcheb/knn.hpp"

namespace minkcheb::ingest {

/// Loads a headered CSV. Every column except the label column must parse as
/// a finite real; the label column (by name, or the last column when unset)
/// becomes the class table in first-appearance order. Throws
/// std::runtime_error naming the offending row/column on bad input.
Dataset parse_csv(std::istream& in, const std::string& name,
                  const std::optional<std::string>& label_column = std::nullopt);

/// Loads the numeric-only ARFF subset: numeric attributes plus a trailing
/// nominal class attribute. Missing values ("?"), string/date attributes
/// and any non-final nominal attribute are rejected. Keywords are
/// case-insensitive; '%' comment lines are skipped. The class table follows
/// the declared value order.
Dataset parse_arff(std::istream& in, const std::string& name);

/// Dispatches on the ".csv" / ".arff" extension.
Dataset load_dataset(const std::string& path);

/// Affinely maps every feature column onto [0,1]; constant columns map to
/// 0. Labels are untouched. Idempotent.
Dataset minmax_rescale(const Dataset& dataset);

/// Serializes a dataset back to CSV (feature columns f0..fn-1 then
/// "class"); parse_csv of the output reproduces the dataset.
std::string to_csv(const Dataset& dataset);

}  // namespace minkcheb::ingest

#endif
