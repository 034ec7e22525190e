#include "biblio/pipeline.hpp"

#include <algorithm>

#include "biblio/csv.hpp"
#include "biblio/errors.hpp"
#include "biblio/io.hpp"
#include "biblio/parallel.hpp"
#include "biblio/parser.hpp"
#include "biblio/report.hpp"

namespace biblio {

namespace {

void log_report(const ParseReport& report, std::ostream& log) {
  for (const std::string& w : report.warnings) log << "warning: " << w << "\n";
}

CountryTable load_country_table(const PipelineOptions& opts) {
  if (opts.countries_file.empty()) return CountryTable::builtin();
  return CountryTable::load(opts.countries_file);
}

std::set<std::string> load_stoplist(const PipelineOptions& opts) {
  if (opts.stoplist_file.empty()) return {};
  return parse_stoplist(read_file(opts.stoplist_file));
}

struct PipelineData {
  Corpus corpus;
  CountryTable countries;
};

PipelineData load_data(const PipelineOptions& opts, std::ostream& log) {
  PipelineData data{Corpus{}, load_country_table(opts)};
  if (opts.corpus_files.empty()) throw Error("no corpus files given");

  const std::size_t n = opts.corpus_files.size();
  std::vector<Corpus> parts(n);
  std::vector<ParseReport> reports(n);
  parallel_chunks(n, opts.threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) {
      ParseOptions popts;
      popts.strict = opts.strict;
      popts.countries = &data.countries;
      parts[i] = parse_export_file(opts.corpus_files[i], popts, &reports[i]);
    }
  });
  for (const ParseReport& r : reports) log_report(r, log);

  ParseReport merge_report;
  data.corpus = merge_corpora(std::move(parts), opts.strict, &merge_report);
  log_report(merge_report, log);
  return data;
}

std::vector<std::filesystem::path> peer_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error("peer directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

PeerIndex load_peer_index(const PipelineOptions& opts, const CountryTable& countries,
                          std::ostream& log) {
  if (opts.peers_dir.empty()) throw Error("no peer directory given (--peers)");
  const auto files = peer_files(opts.peers_dir);

  struct PeerPart {
    bool csv = false;
    Corpus corpus;
    std::string csv_text;
    std::string source;
  };
  std::vector<PeerPart> parts(files.size());
  std::vector<ParseReport> reports(files.size());
  parallel_chunks(files.size(), opts.threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) {
      parts[i].source = files[i].filename().string();
      if (files[i].extension() == ".csv") {
        parts[i].csv = true;
        parts[i].csv_text = read_file(files[i]);
      } else {
        ParseOptions popts;
        popts.strict = opts.strict;
        popts.countries = &countries;
        parts[i].corpus = parse_export_file(files[i], popts, &reports[i]);
      }
    }
  });
  for (const ParseReport& r : reports) log_report(r, log);

  PeerIndex index;
  for (PeerPart& part : parts) {
    if (part.csv)
      index.add_csv(part.csv_text, part.source);
    else
      index.add_corpus(part.corpus);
  }
  return index;
}

struct PriStage {
  ScoreResult result;
  Rational global_mean;
};

PriStage compute_pri(const Corpus& corpus, const PeerIndex& peers,
                     const PipelineOptions& opts) {
  PriStage stage;
  const Corpus targets =
      filter_research_articles(corpus, opts.year_min, opts.effective_pri_year_max());
  stage.result = score_corpus(targets, peers, opts.threads);
  if (!stage.result.scores.empty()) {
    std::vector<std::size_t> sizes;
    sizes.reserve(stage.result.scores.size());
    for (const PriScore& s : stage.result.scores) sizes.push_back(s.peer_count);
    stage.global_mean = global_average_pri(sizes);
  }
  return stage;
}

std::vector<Rational> summary_thresholds(const Rational& global_mean) {
  std::vector<Rational> thresholds = {Rational(99), Rational(90), Rational(75)};
  thresholds.push_back(global_mean);
  std::sort(thresholds.begin(), thresholds.end(), std::greater<Rational>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  return thresholds;
}

void write_stats_outputs(const Corpus& corpus, const PipelineOptions& opts, std::ostream& log) {
  const Corpus windowed = filter_year_range(corpus, opts.year_min, opts.year_max);
  if (windowed.empty()) throw DomainError("no records in the year window");
  write_file(opts.out_dir / "doc_types.csv", to_csv(doc_type_distribution(windowed), "doc_type"));
  write_file(opts.out_dir / "yearly_counts.csv", to_csv(yearly_counts(windowed), "year"));

  const Corpus articles = filter_research_articles(corpus, opts.year_min, opts.year_max);
  if (articles.empty()) {
    log << "warning: no research articles in the year window; article statistics skipped\n";
    return;
  }
  std::vector<std::string> warnings;
  write_file(opts.out_dir / "authorship.csv", to_csv(authorship_summary(articles, &warnings)));
  const CooperationTable coop = cooperation_table(articles, opts.home_country, &warnings);
  write_file(opts.out_dir / "cooperation.csv", to_csv(coop));
  write_file(opts.out_dir / "cooperation_summary.csv", cooperation_summary_csv(coop));
  write_file(opts.out_dir / "journals.csv",
             to_csv(field_distribution(articles, RecordField::journal), "journal"));
  write_file(opts.out_dir / "categories.csv",
             to_csv(field_distribution(articles, RecordField::category), "category"));
  for (const std::string& w : warnings) log << "warning: " << w << "\n";
}

void write_pri_outputs(const PriStage& stage, const PipelineOptions& opts) {
  write_file(opts.out_dir / "scores.csv", to_csv(stage.result.scores));
  write_file(opts.out_dir / "unscored.csv", to_csv(stage.result.unscored));
  std::vector<PriRangeRow> rows;
  if (!stage.result.scores.empty())
    rows = pri_range_summary(stage.result.scores, summary_thresholds(stage.global_mean), true);
  write_file(opts.out_dir / "pri_summary.csv", to_csv(rows));
}

struct CowordStage {
  CooccurrenceGraph graph;
  ClusterSet clusters;
};

CowordStage compute_coword(const Corpus& corpus, const PipelineOptions& opts) {
  CowordStage stage;
  const Corpus articles = filter_research_articles(corpus, opts.year_min, opts.year_max);
  if (articles.empty()) throw DomainError("no research articles in the year window");
  stage.graph = build_graph(articles, opts.min_frequency, opts.threads);
  stage.clusters = cluster_graph(stage.graph, opts.min_cosine, opts.min_size, opts.max_size,
                                 opts.link_aggregate);
  return stage;
}

void write_coword_outputs(const Corpus& corpus, const CowordStage& stage,
                          const PipelineOptions& opts) {
  write_file(opts.out_dir / "keywords.csv", to_csv_terms(stage.graph));
  write_file(opts.out_dir / "cooccurrence.csv", to_csv_edges(stage.graph));
  write_file(opts.out_dir / "clusters.csv", to_csv(stage.clusters));
  const Corpus articles = filter_research_articles(corpus, opts.year_min, opts.year_max);
  write_file(opts.out_dir / "category_keywords.csv",
             to_csv(category_keywords(articles, opts.top_categories, load_stoplist(opts))));
}

void write_report_outputs(const Corpus& corpus, const PriStage& pri, const CowordStage& coword,
                          const PipelineOptions& opts, std::ostream& log) {
  const Corpus windowed = filter_year_range(corpus, opts.year_min, opts.year_max);
  if (!windowed.empty())
    write_file(opts.out_dir / "fig_yearly_output.svg",
               emit_yearly_bars(yearly_counts(windowed), opts.chart, opts.bars_title));

  if (pri.result.scores.empty()) {
    log << "warning: no scored papers; PRI scatter skipped\n";
  } else {
    write_file(opts.out_dir / "fig_pri_scatter.svg",
               emit_pri_scatter(pri.result.scores, pri.global_mean, opts.chart,
                                opts.scatter_title));
  }

  if (coword.clusters.clusters.empty()) {
    log << "warning: no clusters; strategic diagram skipped\n";
    return;
  }
  const StrategicDiagram diagram = strategic_diagram(coword.clusters);
  write_file(opts.out_dir / "fig_strategic_diagram.svg",
             emit_strategic_diagram(diagram, opts.chart, opts.diagram_title));
  const auto tables = emit_quadrant_tables(diagram, coword.clusters);
  for (std::size_t i = 0; i < tables.size(); ++i)
    write_file(opts.out_dir / ("quadrant_" + std::string(kQuadrantNames[i]) + ".csv"),
               tables[i]);
}

}  // namespace

Corpus load_corpus(const PipelineOptions& opts, std::ostream& log) {
  return load_data(opts, log).corpus;
}

PeerIndex load_peers(const PipelineOptions& opts, std::ostream& log) {
  const CountryTable countries = load_country_table(opts);
  return load_peer_index(opts, countries, log);
}

void run_parse(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  write_file(opts.out_dir / "corpus.jsonl", dump_jsonl(data.corpus));
}

void run_stats(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  write_stats_outputs(data.corpus, opts, log);
}

void run_pri(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  const PeerIndex peers = load_peer_index(opts, data.countries, log);
  write_pri_outputs(compute_pri(data.corpus, peers, opts), opts);
}

void run_coword(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  write_coword_outputs(data.corpus, compute_coword(data.corpus, opts), opts);
}

void run_report(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  const PeerIndex peers = load_peer_index(opts, data.countries, log);
  write_report_outputs(data.corpus, compute_pri(data.corpus, peers, opts),
                       compute_coword(data.corpus, opts), opts, log);
}

void run_all(const PipelineOptions& opts, std::ostream& log) {
  const PipelineData data = load_data(opts, log);
  const PeerIndex peers = load_peer_index(opts, data.countries, log);

  write_file(opts.out_dir / "corpus.jsonl", dump_jsonl(data.corpus));
  write_stats_outputs(data.corpus, opts, log);
  const PriStage pri = compute_pri(data.corpus, peers, opts);
  write_pri_outputs(pri, opts);
  const CowordStage coword = compute_coword(data.corpus, opts);
  write_coword_outputs(data.corpus, coword, opts);
  write_report_outputs(data.corpus, pri, coword, opts, log);
}

}  // namespace biblio
