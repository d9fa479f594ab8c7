#pragma once

#include "hedrite/circuits.hpp"
#include "hedrite/enumerate.hpp"
#include "hedrite/symmetry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hedrite {

// One catalog row: CC-vector kept exactly as printed.
struct GoldenRow {
  int i = 0;
  int n = 0;
  std::string id;
  PointGroup group = PointGroup::C1;
  std::string cc_printed;
  bool reducible = false;
  bool starred = false;
};

// Tab/space separated: i n id group cc reducible starred; '#' starts a comment.
std::vector<GoldenRow> parse_golden(std::string_view text);
const std::vector<GoldenRow>& embedded_golden();

// Printed CC-vectors with a ';' must match exactly; a lone length L means the
// single circuit ";L"; anything else is compared on the length multiset only.
bool cc_matches(const std::string& printed, const CCVector& cc);
bool row_matches(const GoldenRow& row, PointGroup group, const CCVector& cc);

std::optional<std::string> match_catalog(const HedriteRecord& r,
                                         const std::vector<GoldenRow>& rows = embedded_golden());

// Per (i, n) comparison of a census batch with the catalog rows.
struct CellReport {
  int i = 0;
  int n = 0;
  int expected = 0;
  int found = 0;
  bool signatures_match = false;  // a perfect group/CC matching exists
  std::vector<std::string> unmatched;
  bool pass() const { return expected == found && signatures_match; }
};

CellReport compare_cell(int i, int n, const std::vector<HedriteRecord>& batch,
                        const std::vector<GoldenRow>& rows);

}  // namespace hedrite
