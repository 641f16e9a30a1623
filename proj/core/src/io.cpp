#include "svds/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace svds {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool numeric_row(const std::vector<std::string>& cells) {
  if (cells.empty() || cells.front().empty()) return false;
  char* end = nullptr;
  std::strtod(cells.front().c_str(), &end);
  return end != cells.front().c_str() && *end == '\0';
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::runtime_error("malformed numeric field: '" + s + "'");
  return v;
}

std::vector<std::vector<double>> read_numeric_rows(const std::string& path,
                                                   std::size_t min_cols) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv(line);
    if (first && !numeric_row(cells)) {  // header
      first = false;
      continue;
    }
    first = false;
    if (cells.size() < min_cols) throw std::runtime_error(path + ": short row");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) row.push_back(parse_double(c));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");
  return rows;
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& X) {
  std::ofstream out = open_out(path);
  out << "t";
  for (int i = 0; i < X.dimension(); ++i) out << ",x" << i;
  out << "\n";
  for (std::size_t k = 0; k < X.knots(); ++k) {
    out << format_double(X.times()[k]);
    for (double c : X.points()[k]) out << "," << format_double(c);
    out << "\n";
  }
}

Trajectory read_trajectory_csv(const std::string& path) {
  const auto rows = read_numeric_rows(path, 2);
  const std::size_t dim = rows.front().size() - 1;
  std::vector<double> times;
  std::vector<Vec> points;
  for (const auto& row : rows) {
    if (row.size() != dim + 1) throw std::runtime_error(path + ": ragged trajectory row");
    times.push_back(row[0]);
    points.emplace_back(row.begin() + 1, row.end());
  }
  return Trajectory(std::move(times), std::move(points));
}

void write_measure_csv(const std::string& path, const EmpiricalMeasure& mu) {
  std::ofstream out = open_out(path);
  const int dim = mu.grid().domain().dimension();
  out << "cell";
  for (int i = 0; i < dim; ++i) out << ",c" << i;
  out << ",weight\n";
  for (std::size_t c = 0; c < mu.grid().cell_count(); ++c) {
    out << c;
    for (double v : mu.grid().rep(static_cast<CellId>(c))) out << "," << format_double(v);
    out << "," << format_double(mu.weights()[c]) << "\n";
  }
}

std::vector<double> read_measure_weights_csv(const std::string& path, const Grid& grid) {
  const auto rows = read_numeric_rows(path, 3);
  std::vector<double> w(grid.cell_count(), 0.0);
  for (const auto& row : rows) {
    const std::size_t cell = static_cast<std::size_t>(row.front());
    if (cell >= w.size()) throw std::runtime_error(path + ": cell index out of range");
    w[cell] = row.back();
  }
  return w;
}

void write_edges_csv(const std::string& path, const FiniteRelation& F) {
  std::ofstream out = open_out(path);
  out << "from,to\n";
  for (int x = 0; x < F.n(); ++x)
    for (int y : F.successors(x)) out << x << "," << y << "\n";
}

FiniteRelation read_edges_csv(const std::string& path) {
  const auto rows = read_numeric_rows(path, 2);
  int n = 0;
  for (const auto& row : rows)
    n = std::max({n, static_cast<int>(row[0]) + 1, static_cast<int>(row[1]) + 1});
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (const auto& row : rows)
    succ[static_cast<std::size_t>(row[0])].push_back(static_cast<int>(row[1]));
  return FiniteRelation(std::move(succ));
}

void write_discrete_measure_csv(const std::string& path, const DiscreteMeasure& mu) {
  std::ofstream out = open_out(path);
  out << "state,weight\n";
  for (int i = 0; i < mu.n(); ++i)
    out << i << "," << format_double(mu.p[static_cast<std::size_t>(i)]) << "\n";
}

DiscreteMeasure read_discrete_measure_csv(const std::string& path) {
  const auto rows = read_numeric_rows(path, 2);
  int n = 0;
  for (const auto& row : rows) n = std::max(n, static_cast<int>(row[0]) + 1);
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  for (const auto& row : rows) p[static_cast<std::size_t>(row[0])] = row[1];
  return DiscreteMeasure(std::move(p));
}

void write_coupling_csv(const std::string& path, const EdgeCoupling& coupling) {
  std::ofstream out = open_out(path);
  out << "from,to,weight\n";
  for (int x = 0; x < coupling.n; ++x)
    for (const auto& [y, w] : coupling.rows[static_cast<std::size_t>(x)])
      out << x << "," << y << "," << format_double(w) << "\n";
}

void write_state_set_csv(const std::string& path, const std::vector<int>& states) {
  std::ofstream out = open_out(path);
  out << "state\n";
  for (int s : states) out << s << "\n";
}

}  // namespace svds
