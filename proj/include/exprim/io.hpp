#pragma once

// Plain-text formats: matrix groups (.g2m), permutation groups (.perm) and
// prime-order class data (.cls).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exprim/builders.hpp"
#include "exprim/groups.hpp"

namespace exprim::io {

groups::MatrixGroup read_matrix_group(std::istream& in);
groups::MatrixGroup load_matrix_group(const std::filesystem::path& path);
/// Canonical form: dim, order (when known), name (when set), then each
/// generator as its rows.
void write_matrix_group(std::ostream& out, const groups::MatrixGroup& g);
std::string format_matrix_group(const groups::MatrixGroup& g);
void save_matrix_group(const std::filesystem::path& path, const groups::MatrixGroup& g);

struct PermutationGroup {
  std::size_t points = 0;
  std::vector<groups::Permutation> generators;  // 0-based images
  std::string name;
};

PermutationGroup read_permutation_group(std::istream& in);
PermutationGroup load_permutation_group(const std::filesystem::path& path);
void write_permutation_group(std::ostream& out, const PermutationGroup& g);

groups::ClassData read_class_data(std::istream& in);
groups::ClassData load_class_data(const std::filesystem::path& path);
void write_class_data(std::ostream& out, const groups::ClassData& data);

/// Resolves a corpus file name against EXPRIM_DATA_DIR when it is relative
/// and absent from the working directory.
std::filesystem::path data_path(const std::filesystem::path& name);

}  // namespace exprim::io
