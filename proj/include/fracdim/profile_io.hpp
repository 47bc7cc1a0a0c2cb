#pragma once

#include <string>
#include <vector>

#include "fracdim/grid.hpp"

namespace fracdim {

// Column-oriented table for emission: one r column plus named value columns,
// all of equal length. Several profiles over the same grid merge into one
// table with one column each.
struct ProfileTable {
    ProfileMeta meta;                  // field/time describe the table as a whole
    std::vector<std::string> columns;  // value column names, r excluded
    std::vector<double> r;
    std::vector<std::vector<double>> values;  // values[c][i], c indexes columns
};

ProfileTable to_table(const SolutionProfile& p);

/// Header `r,<col>[,...]`, rows with 17 significant digits, '\n' line ends,
/// no trailing separator.
void write_csv(const ProfileTable& t, const std::string& path);

/// {meta: {scenario, D, d, symmetry}, columns: [...], rows: [[...]]}.
void write_json(const ProfileTable& t, const std::string& path);

/// Dispatch on format ("csv" or "json"); rejects anything else.
void write_file(const ProfileTable& t, const std::string& path, const std::string& format);

}  // namespace fracdim
