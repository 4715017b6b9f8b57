#include "npe/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace npe {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_vtk(const std::string& path,
               const std::vector<std::pair<std::string, const ScalarField*>>& fields,
               const std::string& title) {
  if (fields.empty())
    throw Error(ErrorKind::InvalidArgument, "write_vtk: no fields");
  const Grid& g = fields.front().second->grid;
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::Validation, "write_vtk: cannot open " + path);
  out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << g.nx << ' ' << g.ny << " 1\n";
  out << "ORIGIN 0 0 0\n";
  out << "SPACING " << format_full(g.hx) << ' ' << format_full(g.hy) << " 1\n";
  out << "POINT_DATA " << g.size() << '\n';
  for (const auto& [name, f] : fields) {
    if (!(f->grid == g))
      throw Error(ErrorKind::Validation, "write_vtk: grid mismatch for " + name);
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t k = 0; k < f->values.size(); ++k)
      out << format_full(f->values[k]) << '\n';
  }
  if (!out)
    throw Error(ErrorKind::Validation, "write_vtk: write failed for " + path);
}

std::vector<std::pair<std::string, ScalarField>> read_vtk(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Validation, "read_vtk: cannot open " + path);
  std::string line, word;
  int nx = 0, ny = 0, nz = 0;
  double hx = 0, hy = 0, hz = 0;
  std::size_t npoints = 0;
  std::vector<std::pair<std::string, ScalarField>> out;
  Grid grid;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    ls >> word;
    if (word == "DIMENSIONS") {
      ls >> nx >> ny >> nz;
    } else if (word == "SPACING") {
      ls >> hx >> hy >> hz;
      grid = Grid(nx, ny, hx * (nx - 1), hy * (ny - 1));
    } else if (word == "POINT_DATA") {
      ls >> npoints;
      if (npoints != grid.size())
        throw Error(ErrorKind::Parse, "read_vtk: POINT_DATA size mismatch");
    } else if (word == "SCALARS") {
      std::string name;
      ls >> name;
      std::getline(in, line); // LOOKUP_TABLE
      ScalarField f(grid);
      for (std::size_t k = 0; k < npoints; ++k)
        if (!(in >> f.values[k]))
          throw Error(ErrorKind::Parse, "read_vtk: truncated field " + name);
      out.emplace_back(name, std::move(f));
    }
  }
  if (out.empty())
    throw Error(ErrorKind::Parse, "read_vtk: no fields in " + path);
  return out;
}

void write_csv(const std::string& path, const ScalarField& f) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::Validation, "write_csv: cannot open " + path);
  const Grid& g = f.grid;
  out << "x,y,value\n";
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out << format_full(g.x(i)) << ',' << format_full(g.y(j)) << ','
          << format_full(f(i, j)) << '\n';
}

} // namespace npe
