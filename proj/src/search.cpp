#include "chiro/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "chiro/polycalc.hpp"

namespace chiro {

namespace {
CompositionKind kind_for(int level) { return level % 2 == 1 ? CompositionKind::Join : CompositionKind::Meet; }
}  // namespace

mpz_class koch_variant_score(const RootedChirotope& seed, const SearchOptions& opt) {
  if (opt.levels < 3 || opt.levels > 8) fail(Errc::OutOfRange, "search levels must be within 3..8");
  BivarPoly p = brute_P(seed, opt.enumeration);
  const int last = opt.metric == SearchMetric::Weak ? opt.levels - 1 : opt.levels;
  for (int level = 4; level <= last; ++level)
    p = kind_for(level) == CompositionKind::Join ? join_P(p, p) : meet_P(p, p);
  if (opt.metric == SearchMetric::Count) return q_from_p(p).at_one();
  if (opt.levels == 3) return p.at_one();
  return count_weak_join(p, p, kind_for(opt.levels));
}

std::vector<SearchRow> koch_variant_search(const std::vector<Chirotope>& records, const SearchOptions& opt) {
  std::vector<std::vector<SearchRow>> per_record(records.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < records.size();) {
      try {
        for (Label r : extreme_elements(records[i]))
          per_record[i].push_back({i, r, koch_variant_score(RootedChirotope(records[i], r), opt)});
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(records.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<SearchRow> rows;
  for (auto& v : per_record) rows.insert(rows.end(), v.begin(), v.end());
  std::stable_sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.record != b.record) return a.record < b.record;
    return a.root < b.root;
  });
  return rows;
}

std::string search_csv(const std::vector<SearchRow>& rows, int top) {
  std::ostringstream out;
  out << "record,root,score\n";
  const std::size_t limit = top > 0 ? std::min<std::size_t>(rows.size(), static_cast<std::size_t>(top)) : rows.size();
  for (std::size_t i = 0; i < limit; ++i) out << rows[i].record << ',' << rows[i].root << ',' << rows[i].score.get_str() << '\n';
  return out.str();
}

}  // namespace chiro
