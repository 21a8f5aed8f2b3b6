#include "mapsym/canonical_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mapsym {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8)
    out.push_back(static_cast<char>((v >> s) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_table(std::string& out, const std::vector<std::string>& table) {
  put_u32(out, static_cast<std::uint32_t>(table.size()));
  for (const auto& s : table) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.append(s);
  }
}

struct Search {
  unsigned n;
  std::vector<std::uint16_t> ctype;               // node -> sorted-table type id
  std::vector<std::vector<std::uint16_t>> cedge;  // node x node edge ids
  std::vector<std::uint16_t> stype;               // sorted type id sequence

  std::vector<unsigned> ord;      // current prefix
  std::vector<bool> used;
  std::vector<std::vector<std::uint16_t>> best_rows;
  std::vector<unsigned> best_ord;
  bool have_leaf = false;

  static constexpr std::uint16_t kTop = 0xffff;

  bool twins(unsigned u, unsigned v) const {
    if (ctype[u] != ctype[v])
      return false;
    for (unsigned w = 0; w < n; ++w) {
      if (w == u || w == v)
        continue;
      if (cedge[u][w] != cedge[v][w])
        return false;
    }
    return true;
  }

  void dfs(unsigned d) {
    if (d == n) {
      best_ord = ord;
      have_leaf = true;
      return;
    }

    // Candidates must realize the sorted node label sequence; anything else
    // is lexicographically worse outright.
    std::vector<unsigned> cands;
    for (unsigned v = 0; v < n; ++v) {
      if (used[v] || ctype[v] != stype[d])
        continue;
      bool dup = false;
      for (unsigned u : cands) {
        if (twins(u, v)) {
          dup = true;  // swapping u and v is an automorphism; one branch suffices
          break;
        }
      }
      if (!dup)
        cands.push_back(v);
    }

    std::vector<std::pair<std::vector<std::uint16_t>, unsigned>> rows;
    rows.reserve(cands.size());
    for (unsigned v : cands) {
      std::vector<std::uint16_t> row(d);
      for (unsigned j = 0; j < d; ++j)
        row[j] = cedge[v][ord[j]];
      rows.push_back({std::move(row), v});
    }
    std::sort(rows.begin(), rows.end());

    // Only minimal rows can start a minimal completion; ties all explored.
    const auto& min_row = rows.front().first;
    for (const auto& [row, v] : rows) {
      if (row != min_row)
        break;
      if (row > best_rows[d])
        break;
      if (row < best_rows[d]) {
        best_rows[d] = row;
        for (unsigned e = d + 1; e < n; ++e)
          std::fill(best_rows[e].begin(), best_rows[e].end(), kTop);
        have_leaf = false;
      }
      ord.push_back(v);
      used[v] = true;
      dfs(d + 1);
      used[v] = false;
      ord.pop_back();
    }
  }
};

} // namespace

CanonicalForm canonical_graph_form(const ArchGraph& g) {
  const unsigned n = g.size();
  CanonicalForm cf;

  for (unsigned v = 0; v < n; ++v)
    cf.type_table.push_back(g.node_type(v));
  std::sort(cf.type_table.begin(), cf.type_table.end());
  cf.type_table.erase(std::unique(cf.type_table.begin(), cf.type_table.end()),
                      cf.type_table.end());

  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      cf.edge_table.push_back(g.edge_label(u, v));
  std::sort(cf.edge_table.begin(), cf.edge_table.end());
  cf.edge_table.erase(std::unique(cf.edge_table.begin(), cf.edge_table.end()),
                      cf.edge_table.end());
  if (cf.edge_table.size() >= Search::kTop || cf.type_table.size() >= Search::kTop)
    throw std::invalid_argument("canonical_graph_form: label alphabet too large");

  if (n == 0)
    return cf;

  auto type_id = [&cf](const std::string& s) {
    return static_cast<std::uint16_t>(
        std::lower_bound(cf.type_table.begin(), cf.type_table.end(), s) -
        cf.type_table.begin());
  };
  auto edge_id = [&cf](const std::string& s) {
    return static_cast<std::uint16_t>(
        std::lower_bound(cf.edge_table.begin(), cf.edge_table.end(), s) -
        cf.edge_table.begin());
  };

  Search sr;
  sr.n = n;
  sr.ctype.resize(n);
  sr.cedge.assign(n, std::vector<std::uint16_t>(n, 0));
  for (unsigned v = 0; v < n; ++v) {
    sr.ctype[v] = type_id(g.node_type(v));
    for (unsigned u = 0; u < n; ++u)
      if (u != v)
        sr.cedge[v][u] = edge_id(g.edge_label(v, u));
  }
  sr.stype = sr.ctype;
  std::sort(sr.stype.begin(), sr.stype.end());
  sr.used.assign(n, false);
  sr.best_rows.resize(n);
  for (unsigned d = 0; d < n; ++d)
    sr.best_rows[d].assign(d, Search::kTop);
  sr.ord.reserve(n);

  sr.dfs(0);

  cf.type_seq = sr.stype;
  for (unsigned d = 0; d < n; ++d)
    cf.edge_rows.insert(cf.edge_rows.end(), sr.best_rows[d].begin(), sr.best_rows[d].end());
  cf.order = sr.best_ord;
  return cf;
}

std::string CanonicalForm::certificate() const {
  std::string out = "ACF1";
  put_u32(out, static_cast<std::uint32_t>(type_seq.size()));
  put_table(out, type_table);
  put_table(out, edge_table);
  for (std::uint16_t t : type_seq)
    put_u16(out, t);
  for (std::uint16_t e : edge_rows)
    put_u16(out, e);
  return out;
}

} // namespace mapsym
