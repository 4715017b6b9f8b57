#pragma once
#include <string>
#include <utility>
#include <vector>

#include "npe/grid.hpp"

namespace npe {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

/// Legacy ASCII VTK STRUCTURED_POINTS snapshot holding one or more named
/// scalar fields on a shared grid.
void write_vtk(const std::string& path,
               const std::vector<std::pair<std::string, const ScalarField*>>& fields,
               const std::string& title = "npe snapshot");

/// Reads back a snapshot written by write_vtk (strict subset of legacy VTK).
std::vector<std::pair<std::string, ScalarField>> read_vtk(const std::string& path);

/// Plain CSV: header "x,y,value", one node per row, row-major.
void write_csv(const std::string& path, const ScalarField& f);

} // namespace npe
