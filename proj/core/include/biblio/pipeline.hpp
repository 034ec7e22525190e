#ifndef BIBLIO_PIPELINE_HPP
#define BIBLIO_PIPELINE_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "biblio/coword.hpp"
#include "biblio/pri.hpp"
#include "biblio/rational.hpp"
#include "biblio/svg.hpp"

namespace biblio {

// Stage wiring shared by the CLI subcommands. Defaults are the standard
// analysis thresholds: keyword frequency >= 4, cosine >= 0.2, cluster sizes
// 3..10, home country NORWAY.
struct PipelineOptions {
  std::vector<std::filesystem::path> corpus_files;
  std::filesystem::path peers_dir;
  std::filesystem::path out_dir = "out";
  std::filesystem::path stoplist_file;
  std::filesystem::path countries_file;

  std::string home_country = "NORWAY";
  int year_min = 1900;
  int year_max = 2100;
  int pri_year_max = -1;  // -1: same as year_max

  std::size_t min_frequency = 4;
  Rational min_cosine = Rational(1, 5);
  std::size_t min_size = 3;
  std::size_t max_size = 10;
  std::size_t top_categories = 10;

  bool strict = false;
  LinkAggregate link_aggregate = LinkAggregate::mean;
  unsigned threads = 0;  // 0: hardware concurrency

  ChartStyle chart;
  std::string bars_title = "Publications per year";
  std::string scatter_title = "Percentile rank index per paper";
  std::string diagram_title = "Keyword clusters: centrality vs density";

  int effective_pri_year_max() const { return pri_year_max < 0 ? year_max : pri_year_max; }
};

// Each runner loads what it needs, writes its files under out_dir and logs
// warnings to `log`. File writing is serialized; parsing and scoring use the
// configured thread count. Throws biblio::Error subclasses on data problems.
void run_parse(const PipelineOptions& opts, std::ostream& log);
void run_stats(const PipelineOptions& opts, std::ostream& log);
void run_pri(const PipelineOptions& opts, std::ostream& log);
void run_coword(const PipelineOptions& opts, std::ostream& log);
void run_report(const PipelineOptions& opts, std::ostream& log);
void run_all(const PipelineOptions& opts, std::ostream& log);

// Shared helpers (also used by tests).
Corpus load_corpus(const PipelineOptions& opts, std::ostream& log);
PeerIndex load_peers(const PipelineOptions& opts, std::ostream& log);

}  // namespace biblio

#endif  // BIBLIO_PIPELINE_HPP
