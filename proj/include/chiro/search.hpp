#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/enumerate.hpp"
#include "chiro/poly.hpp"

namespace chiro {

enum class SearchMetric { Weak, Count };

struct SearchOptions {
  int levels = 6;  // 3 = the seed itself, at most 8
  SearchMetric metric = SearchMetric::Weak;
  int threads = 1;
  EnumOptions enumeration;
};

struct SearchRow {
  std::size_t record;
  Label root;
  mpz_class score;

  friend bool operator==(const SearchRow&, const SearchRow&) = default;
};

/// Score of the Koch-style chain seeded with (chi, root) at level 3:
/// even levels meet, odd levels join two copies of the previous one.
mpz_class koch_variant_score(const RootedChirotope& seed, const SearchOptions& opt);

/// Scores every record at every extreme root. Rows are sorted by score
/// descending, ties by (record, root); identical for any thread count.
std::vector<SearchRow> koch_variant_search(const std::vector<Chirotope>& records, const SearchOptions& opt);

/// "record,root,score" header plus the first `top` rows (all if top <= 0).
std::string search_csv(const std::vector<SearchRow>& rows, int top = 0);

}  // namespace chiro
