#include "reactgrid/matpower.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "reactgrid/json_io.hpp"

namespace reactgrid {

namespace {

struct NumberTable {
  std::vector<std::vector<double>> rows;
  std::vector<int> lines;  // source line per row
};

// Reads the bracketed matrix following `mpc.<name> = [` ... `];`.
// Rows are newline or ';' separated, values whitespace separated.
NumberTable read_table(const std::string& text, const std::string& name) {
  const std::string key = "mpc." + name;
  std::size_t pos = text.find(key);
  if (pos == std::string::npos) throw InvalidInput("matpower: missing " + key);
  pos = text.find('[', pos);
  if (pos == std::string::npos) throw InvalidInput("matpower: malformed " + key + " block");
  const std::size_t end = text.find(']', pos);
  if (end == std::string::npos) throw InvalidInput("matpower: unterminated " + key + " block");

  int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));

  NumberTable table;
  std::vector<double> row;
  std::string token;
  const auto flush_token = [&]() {
    if (token.empty()) return;
    try {
      row.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InvalidInput("matpower: bad number '" + token + "' near line " + std::to_string(line));
    }
    token.clear();
  };
  const auto flush_row = [&]() {
    flush_token();
    if (!row.empty()) {
      table.rows.push_back(row);
      table.lines.push_back(line);
      row.clear();
    }
  };

  bool comment = false;
  for (std::size_t i = pos + 1; i < end; ++i) {
    const char c = text[i];
    if (c == '\n') {
      comment = false;
      flush_row();
      ++line;
      continue;
    }
    if (comment) continue;
    if (c == '%') {
      comment = true;
      continue;
    }
    if (c == ';') {
      flush_row();
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush_token();
    } else {
      token += c;
    }
  }
  flush_row();
  return table;
}

}  // namespace

Grid grid_from_matpower_text(const std::string& text) {
  const NumberTable bus = read_table(text, "bus");
  const NumberTable branch = read_table(text, "branch");

  std::map<int, double> injection;
  int reference = -1;
  for (std::size_t i = 0; i < bus.rows.size(); ++i) {
    const auto& r = bus.rows[i];
    if (r.size() < 3)
      throw InvalidInput("matpower: bus row at line " + std::to_string(bus.lines[i]) +
                         " needs BUS_I, TYPE, PD");
    const int id = static_cast<int>(r[0]);
    injection[id] = -r[2];  // PD is demand
    if (reference < 0 && static_cast<int>(r[1]) == 3) reference = id;
  }
  if (reference < 0) reference = static_cast<int>(bus.rows.front()[0]);

  if (text.find("mpc.gen") != std::string::npos) {
    const NumberTable gen = read_table(text, "gen");
    for (std::size_t i = 0; i < gen.rows.size(); ++i) {
      const auto& r = gen.rows[i];
      if (r.size() < 2)
        throw InvalidInput("matpower: gen row at line " + std::to_string(gen.lines[i]) +
                           " needs BUS, PG");
      const int id = static_cast<int>(r[0]);
      const auto it = injection.find(id);
      if (it == injection.end())
        throw InvalidInput("matpower: gen at line " + std::to_string(gen.lines[i]) +
                           " references unknown bus " + std::to_string(id));
      it->second += r[1];
    }
  }

  std::vector<Edge> edges;
  int eid = 0;
  for (std::size_t i = 0; i < branch.rows.size(); ++i) {
    const auto& r = branch.rows[i];
    if (r.size() < 4)
      throw InvalidInput("matpower: branch row at line " + std::to_string(branch.lines[i]) +
                         " needs F_BUS, T_BUS, R, X");
    if (r.size() >= 11 && r[10] == 0.0) continue;  // out of service
    const double x = r[3];
    if (!(x > 0.0))
      throw InvalidInput("matpower: branch at line " + std::to_string(branch.lines[i]) +
                         " has non-positive reactance");
    edges.push_back({eid++, static_cast<int>(r[0]), static_cast<int>(r[1]), x});
  }

  // The DC model needs balanced injections; the reference bus absorbs the
  // system mismatch the way a slack bus would.
  double total = 0.0;
  for (const auto& [id, p] : injection) total += p;
  injection[reference] -= total;

  std::vector<Node> nodes;
  nodes.reserve(injection.size());
  for (const auto& [id, p] : injection) nodes.push_back({id, p});
  return Grid::create(std::move(nodes), std::move(edges), reference);
}

Grid load_matpower(const std::string& path) {
  return grid_from_matpower_text(read_text_file(path));
}

}  // namespace reactgrid
