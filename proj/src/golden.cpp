#include "hedrite/golden.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hedrite {

namespace detail {
extern const char* const kGoldenTsv;
}

namespace {

// "4^2,6" -> {4,4,6}
std::vector<int> parse_lengths(const std::string& part) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(part);
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto caret = item.find('^');
    int len = std::stoi(item.substr(0, caret));
    int mult = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
    out.insert(out.end(), mult, len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GoldenRow> parse_golden(std::string_view text) {
  std::vector<GoldenRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    GoldenRow r;
    std::string group;
    int red = 0, star = 0;
    if (!(ls >> r.i)) continue;
    if (!(ls >> r.n >> r.id >> group >> r.cc_printed >> red >> star)) {
      throw Error("golden data line " + std::to_string(lineno) + ": expected 7 fields");
    }
    r.group = point_group_from_string(group);
    r.reducible = red != 0;
    r.starred = star != 0;
    rows.push_back(std::move(r));
  }
  return rows;
}

const std::vector<GoldenRow>& embedded_golden() {
  static const std::vector<GoldenRow> rows = parse_golden(detail::kGoldenTsv);
  return rows;
}

bool cc_matches(const std::string& printed, const CCVector& cc) {
  auto semi = printed.find(';');
  if (semi != std::string::npos) {
    return parse_lengths(printed.substr(0, semi)) == cc.simple &&
           parse_lengths(printed.substr(semi + 1)) == cc.self_intersecting;
  }
  auto lengths = parse_lengths(printed);
  if (lengths.size() == 1) return cc.simple.empty() && cc.self_intersecting == lengths;
  std::vector<int> all = cc.simple;
  all.insert(all.end(), cc.self_intersecting.begin(), cc.self_intersecting.end());
  std::sort(all.begin(), all.end());
  return all == lengths;
}

bool row_matches(const GoldenRow& row, PointGroup group, const CCVector& cc) {
  return row.group == group && cc_matches(row.cc_printed, cc);
}

std::optional<std::string> match_catalog(const HedriteRecord& r, const std::vector<GoldenRow>& rows) {
  std::optional<std::string> hit;
  int hits = 0;
  for (const auto& row : rows) {
    if (row.i == r.i && row.n == r.n && row_matches(row, r.point_group, r.cc_vector)) {
      hit = row.id;
      ++hits;
    }
  }
  if (hits != 1) return std::nullopt;
  return hit;
}

CellReport compare_cell(int i, int n, const std::vector<HedriteRecord>& batch,
                        const std::vector<GoldenRow>& rows) {
  CellReport rep;
  rep.i = i;
  rep.n = n;
  std::vector<const GoldenRow*> cell;
  for (const auto& row : rows) {
    if (row.i == i && row.n == n) cell.push_back(&row);
  }
  rep.expected = static_cast<int>(cell.size());
  rep.found = static_cast<int>(batch.size());

  // Bipartite matching records -> rows by augmenting paths.
  std::vector<int> row_owner(cell.size(), -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t rec,
                                                                   std::vector<char>& used) {
    for (std::size_t k = 0; k < cell.size(); ++k) {
      if (used[k] || !row_matches(*cell[k], batch[rec].point_group, batch[rec].cc_vector)) continue;
      used[k] = 1;
      if (row_owner[k] < 0 || augment(row_owner[k], used)) {
        row_owner[k] = static_cast<int>(rec);
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t rec = 0; rec < batch.size(); ++rec) {
    std::vector<char> used(cell.size(), 0);
    if (augment(rec, used)) {
      ++matched;
    } else {
      rep.unmatched.push_back("found " + to_string(batch[rec].point_group) + " " +
                              batch[rec].cc_vector.to_string());
    }
  }
  for (std::size_t k = 0; k < cell.size(); ++k) {
    if (row_owner[k] < 0) {
      rep.unmatched.push_back("missing " + cell[k]->id + " " + to_string(cell[k]->group) + " " +
                              cell[k]->cc_printed);
    }
  }
  rep.signatures_match = matched == rep.expected && matched == rep.found;
  return rep;
}

}  // namespace hedrite
