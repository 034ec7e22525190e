// bibliotk: bibliometric analysis of field-tagged bibliographic exports.
//
// Subcommands wire the pipeline stages: parse -> stats -> pri -> coword ->
// report; `all` runs everything. A key=value config file can set any flag;
// command line flags win.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biblio/errors.hpp"
#include "biblio/io.hpp"
#include "biblio/pipeline.hpp"
#include "biblio/text.hpp"

namespace {

struct Flags {
  std::vector<std::string> corpus;
  std::string peers;
  std::string out = "out";
  std::string home_country = "NORWAY";
  int year_min = 1900;
  int year_max = 2100;
  int pri_year_max = -1;
  unsigned min_freq = 4;
  std::string min_cos = "0.2";
  unsigned min_size = 3;
  unsigned max_size = 10;
  unsigned top_categories = 10;
  std::string stoplist;
  std::string countries;
  bool strict = false;
  std::string density_mode = "mean";
  unsigned threads = 0;
  double chart_margin = 60.0;
  std::string chart_dash = "6,4";
  std::string bars_title = "Publications per year";
  std::string scatter_title = "Percentile rank index per paper";
  std::string diagram_title = "Keyword clusters: centrality vs density";
  std::string config;
};

struct Options {
  std::map<std::string, CLI::Option*> by_key;
};

void add_options(CLI::App* cmd, Flags& f, Options& opts) {
  auto add = [&](CLI::Option* opt, const std::string& key) { opts.by_key[key] = opt; };
  add(cmd->add_option("--corpus", f.corpus, "Tagged export file(s)"), "corpus");
  add(cmd->add_option("--peers", f.peers, "Directory of peer-set files (tagged or CSV)"),
      "peers");
  add(cmd->add_option("--out", f.out, "Output directory"), "out");
  add(cmd->add_option("--home-country", f.home_country, "Home country for cooperation stats"),
      "home-country");
  add(cmd->add_option("--year-min", f.year_min, "Lower year bound (inclusive)"), "year-min");
  add(cmd->add_option("--year-max", f.year_max, "Upper year bound (inclusive)"), "year-max");
  add(cmd->add_option("--pri-year-max", f.pri_year_max,
                      "Upper year bound for PRI scoring (defaults to --year-max)"),
      "pri-year-max");
  add(cmd->add_option("--min-freq", f.min_freq, "Minimum keyword frequency"), "min-freq");
  add(cmd->add_option("--min-cos", f.min_cos, "Minimum cosine similarity"), "min-cos");
  add(cmd->add_option("--min-size", f.min_size, "Minimum cluster size"), "min-size");
  add(cmd->add_option("--max-size", f.max_size, "Maximum cluster size"), "max-size");
  add(cmd->add_option("--top-categories", f.top_categories,
                      "Categories in the category-keyword table"),
      "top-categories");
  add(cmd->add_option("--stoplist", f.stoplist, "Stop list for category keyword tables"),
      "stoplist");
  add(cmd->add_option("--countries", f.countries, "Country table override file"), "countries");
  add(cmd->add_flag("--strict", f.strict, "Abort on malformed records"), "strict");
  add(cmd->add_option("--density-mode", f.density_mode, "Link aggregation: mean or sum")
          ->check(CLI::IsMember({"mean", "sum"})),
      "density-mode");
  add(cmd->add_option("--threads", f.threads, "Worker threads (0 = hardware)"), "threads");
  add(cmd->add_option("--chart-margin", f.chart_margin, "Chart margin in px"), "chart-margin");
  add(cmd->add_option("--chart-dash", f.chart_dash, "Dash pattern for median lines"),
      "chart-dash");
  add(cmd->add_option("--bars-title", f.bars_title, "Caption of the yearly bar chart"),
      "bars-title");
  add(cmd->add_option("--scatter-title", f.scatter_title, "Caption of the PRI scatter"),
      "scatter-title");
  add(cmd->add_option("--diagram-title", f.diagram_title, "Caption of the cluster diagram"),
      "diagram-title");
  cmd->add_option("--config", f.config, "key=value config file; flags override");
}

// key=value lines, '#' comments. Keys are the long flag names without "--".
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  const std::string content = biblio::read_file(path);
  std::size_t start = 0;
  std::size_t line_no = 0;
  for (std::size_t i = 0; i <= content.size(); ++i) {
    if (i != content.size() && content[i] != '\n') continue;
    ++line_no;
    std::string_view line(content.data() + start, i - start);
    start = i + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string trimmed = biblio::text::trim(line);
    if (trimmed.empty()) continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw biblio::Error(path + ":" + std::to_string(line_no) + ": expected key=value");
    kv[biblio::text::trim(trimmed.substr(0, eq))] = biblio::text::trim(trimmed.substr(eq + 1));
  }
  return kv;
}

bool parse_bool(const std::string& v) {
  const std::string lower = biblio::text::to_lower(v);
  if (lower == "1" || lower == "true" || lower == "yes" || lower == "on") return true;
  if (lower == "0" || lower == "false" || lower == "no" || lower == "off") return false;
  throw biblio::Error("bad boolean value: " + v);
}

// Applies config values for options that were not given on the command line.
void apply_config(const std::map<std::string, std::string>& kv, const Options& opts, Flags& f) {
  for (const auto& [key, value] : kv) {
    auto it = opts.by_key.find(key);
    if (it == opts.by_key.end()) throw biblio::Error("unknown config key: " + key);
    if (it->second->count() > 0) continue;  // flag given, flag wins
    if (key == "corpus") {
      f.corpus = biblio::text::split_trim(value, ',');
    } else if (key == "peers") {
      f.peers = value;
    } else if (key == "out") {
      f.out = value;
    } else if (key == "home-country") {
      f.home_country = value;
    } else if (key == "year-min") {
      f.year_min = std::stoi(value);
    } else if (key == "year-max") {
      f.year_max = std::stoi(value);
    } else if (key == "pri-year-max") {
      f.pri_year_max = std::stoi(value);
    } else if (key == "min-freq") {
      f.min_freq = static_cast<unsigned>(std::stoul(value));
    } else if (key == "min-cos") {
      f.min_cos = value;
    } else if (key == "min-size") {
      f.min_size = static_cast<unsigned>(std::stoul(value));
    } else if (key == "max-size") {
      f.max_size = static_cast<unsigned>(std::stoul(value));
    } else if (key == "top-categories") {
      f.top_categories = static_cast<unsigned>(std::stoul(value));
    } else if (key == "stoplist") {
      f.stoplist = value;
    } else if (key == "countries") {
      f.countries = value;
    } else if (key == "strict") {
      f.strict = parse_bool(value);
    } else if (key == "density-mode") {
      if (value != "mean" && value != "sum")
        throw biblio::Error("density-mode must be mean or sum");
      f.density_mode = value;
    } else if (key == "threads") {
      f.threads = static_cast<unsigned>(std::stoul(value));
    } else if (key == "chart-margin") {
      f.chart_margin = std::stod(value);
    } else if (key == "chart-dash") {
      f.chart_dash = value;
    } else if (key == "bars-title") {
      f.bars_title = value;
    } else if (key == "scatter-title") {
      f.scatter_title = value;
    } else if (key == "diagram-title") {
      f.diagram_title = value;
    }
  }
}

biblio::PipelineOptions to_pipeline_options(const Flags& f) {
  biblio::PipelineOptions p;
  for (const std::string& c : f.corpus) p.corpus_files.emplace_back(c);
  if (!f.peers.empty()) p.peers_dir = f.peers;
  p.out_dir = f.out;
  if (!f.stoplist.empty()) p.stoplist_file = f.stoplist;
  if (!f.countries.empty()) p.countries_file = f.countries;
  p.home_country = f.home_country;
  p.year_min = f.year_min;
  p.year_max = f.year_max;
  p.pri_year_max = f.pri_year_max;
  p.min_frequency = f.min_freq;
  p.min_cosine = biblio::Rational::from_decimal(f.min_cos);
  p.min_size = f.min_size;
  p.max_size = f.max_size;
  p.top_categories = f.top_categories;
  p.strict = f.strict;
  p.link_aggregate =
      f.density_mode == "sum" ? biblio::LinkAggregate::sum : biblio::LinkAggregate::mean;
  p.threads = f.threads;
  p.chart.margin = f.chart_margin;
  p.chart.dash = f.chart_dash;
  p.bars_title = f.bars_title;
  p.scatter_title = f.scatter_title;
  p.diagram_title = f.diagram_title;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bibliometric analysis of field-tagged bibliographic exports"};
  app.require_subcommand(1);

  Flags flags;
  std::map<std::string, Options> option_refs;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"parse", "Parse exports and dump the canonical corpus (corpus.jsonl)"},
      {"stats", "Document type, yearly, authorship, cooperation and field tables"},
      {"pri", "Percentile rank index scores and range summary"},
      {"coword", "Keyword co-occurrence graph and cluster tables"},
      {"report", "SVG figures and quadrant tables"},
      {"all", "Full pipeline: parse, stats, pri, coword, report"},
  };
  for (const auto& [name, desc] : commands)
    add_options(app.add_subcommand(name, desc), flags, option_refs[name]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!flags.config.empty())
      apply_config(read_config(flags.config), option_refs[command], flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (flags.corpus.empty()) {
    std::cerr << "error: --corpus is required\n";
    return 2;
  }
  const bool needs_peers = command == "pri" || command == "report" || command == "all";
  if (needs_peers && flags.peers.empty()) {
    std::cerr << "error: --peers is required for '" << command << "'\n";
    return 2;
  }
  if (flags.min_size < 1 || flags.min_size > flags.max_size) {
    std::cerr << "error: need 1 <= min-size <= max-size\n";
    return 2;
  }
  if (flags.year_min > flags.year_max) {
    std::cerr << "error: year-min greater than year-max\n";
    return 2;
  }

  try {
    const biblio::PipelineOptions opts = to_pipeline_options(flags);
    if (command == "parse") biblio::run_parse(opts, std::cerr);
    else if (command == "stats") biblio::run_stats(opts, std::cerr);
    else if (command == "pri") biblio::run_pri(opts, std::cerr);
    else if (command == "coword") biblio::run_coword(opts, std::cerr);
    else if (command == "report") biblio::run_report(opts, std::cerr);
    else biblio::run_all(opts, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
