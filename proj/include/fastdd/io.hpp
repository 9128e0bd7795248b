#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "fastdd/ddplot.hpp"
#include "fastdd/fdata.hpp"
#include "fastdd/model_select.hpp"

namespace fdd {

/// Long format: one `id,t,value[,label]` record per line, optional header.
/// Records of one id may come in any order and are sorted by t; the id
/// order of first appearance is kept. Throws ParseError (with the line
/// number) for malformed rows or an empty input, ValidationError for
/// conflicting labels of one id.
FunctionalDataset read_long_csv(std::istream& in);
FunctionalDataset load_dataset(const std::filesystem::path& path);

/// Writes the original (unshifted) observations in long format.
void write_long_csv(std::ostream& out, const FunctionalDataset& data);
void save_dataset(const std::filesystem::path& path, const FunctionalDataset& data);

/// `z0,z1,label` rows; the label column is empty for unlabeled points.
void write_ddplot_csv(std::ostream& out, std::span<const DDPoint> points);

/// `L,S,epsilon,epsilon_max,cv_error,selected` rows.
void write_selection_csv(std::ostream& out, std::span<const PairScore> scores);

}  // namespace fdd
