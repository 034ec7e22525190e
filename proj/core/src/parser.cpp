#include "biblio/parser.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "biblio/errors.hpp"

namespace biblio {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t cont;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c >> 5) == 0x6) {
      cont = 1;
    } else if ((c >> 4) == 0xE) {
      cont = 2;
    } else if ((c >> 3) == 0x1E) {
      cont = 3;
    } else {
      return false;
    }
    if (i + cont >= s.size()) return false;
    for (std::size_t j = 1; j <= cont; ++j)
      if ((static_cast<unsigned char>(s[i + j]) >> 6) != 0x2) return false;
    i += cont + 1;
  }
  return true;
}

std::string latin1_to_utf8(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c < 0x80) {
      out.push_back(ch);
    } else {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

bool parse_uint(const std::string& s, int* out) {
  if (s.empty() || s.size() > 9) return false;
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  *out = static_cast<int>(v);
  return true;
}

std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RawField {
  std::string tag;
  std::string value;
  std::size_t line;
};

bool is_list_tag(const std::string& tag) {
  return tag == "AU" || tag == "DE" || tag == "ID" || tag == "C1" || tag == "WC";
}

class ExportParser {
 public:
  ExportParser(const ParseOptions& opts, ParseReport* report)
      : opts_(opts),
        table_(opts.countries ? *opts.countries : CountryTable::builtin()),
        report_(report) {}

  Corpus run(std::string_view bytes) {
    if (bytes.find_first_not_of(" \t\r\n") == std::string_view::npos)
      throw ParseError(opts_.source_name + ": empty input", 0);

    std::string decoded;
    std::string_view content = bytes;
    if (!valid_utf8(bytes)) {
      decoded = latin1_to_utf8(bytes);
      content = decoded;
      warn("not valid UTF-8; decoded as Latin-1", 0);
    }

    std::size_t line_no = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= content.size() && !done_; ++i) {
      if (i != content.size() && content[i] != '\n') continue;
      if (i == content.size() && start == i) break;
      ++line_no;
      std::string_view line = content.substr(start, i - start);
      start = i + 1;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
      handle_line(line, line_no);
    }
    if (in_record_) fail("record without ER", line_no);
    if (!saw_ef_) warn_or_fail("missing EF terminator", line_no);

    Corpus corpus;
    corpus.records = std::move(records_);
    corpus.sources = {opts_.source_name};
    corpus.parsed_at = now_iso8601();
    return corpus;
  }

 private:
  void handle_line(std::string_view line, std::size_t n) {
    if (saw_ef_) {
      if (!line.empty()) {
        warn_or_fail("content after EF ignored", n);
        done_ = true;
      }
      return;
    }
    if (line.empty()) {
      // Stray blank lines are common in real exports; strict mode rejects
      // them inside a record.
      if (in_record_ && opts_.strict)
        throw ParseError(opts_.source_name + ": blank line inside record", n);
      return;
    }
    if (line.size() >= 3 && line.substr(0, 3) == "   ") {
      if (!in_record_ || fields_.empty()) {
        fail("continuation line outside a record", n);
        return;
      }
      if (!skipping_) {
        std::string rest = text::trim(line);
        if (!rest.empty()) fields_.back().value += " " + rest;
      }
      return;
    }
    if (line.size() < 2 || line[0] == ' ') {
      fail("tag line shorter than 2 chars", n);
      return;
    }
    if (line.size() > 2 && line[2] != ' ') {
      fail("missing separator after tag", n);
      return;
    }
    std::string tag(line.substr(0, 2));
    std::string value = line.size() > 3 ? text::trim(line.substr(3)) : std::string();

    if (tag == "ER") {
      if (!value.empty()) {
        fail("ER with trailing content", n);
        return;
      }
      if (!in_record_) {
        fail("ER without an open record", n);
        return;
      }
      if (skipping_) {
        if (report_) ++report_->records_skipped;
      } else {
        finish_record(n);
      }
      in_record_ = false;
      skipping_ = false;
      fields_.clear();
      return;
    }
    if (tag == "EF") {
      if (!value.empty()) {
        fail("EF with trailing content", n);
        return;
      }
      if (in_record_) {
        fail("record without ER", n);
        if (report_) ++report_->records_skipped;
        in_record_ = false;
        fields_.clear();
      }
      saw_ef_ = true;
      return;
    }
    if (!in_record_) {
      if (tag == "FN" || tag == "VR") return;  // file header
      in_record_ = true;
      skipping_ = false;
      fields_.clear();
    }
    if (!skipping_) fields_.push_back({std::move(tag), std::move(value), n});
  }

  void finish_record(std::size_t end_line) {
    std::map<std::string, std::string> scalar;
    std::map<std::string, std::string> lists;
    for (const RawField& f : fields_) {
      if (is_list_tag(f.tag)) {
        std::string& v = lists[f.tag];
        if (!v.empty()) v += "; ";
        v += f.value;
      } else if (f.tag == "UT" || f.tag == "DT" || f.tag == "SO" || f.tag == "PY" ||
                 f.tag == "TC") {
        auto [it, fresh] = scalar.emplace(f.tag, f.value);
        if (!fresh) warn("duplicate tag " + f.tag + " ignored", f.line);
      }
      // All other tags (PT, TI, AB, ...) are not part of the record model.
    }

    BiblioRecord rec;
    rec.id = text::trim(scalar["UT"]);
    if (rec.id.empty()) {
      std::string stem = std::filesystem::path(opts_.source_name).stem().string();
      if (stem.empty()) stem = "record";
      char buf[16];
      std::snprintf(buf, sizeof buf, "-%05zu", records_.size() + 1);
      rec.id = stem + buf;
    }
    rec.doc_type = text::to_upper(text::collapse_ws(scalar["DT"]));
    rec.journal = normalize_journal(scalar["SO"]);

    int year = 0;
    if (!parse_uint(text::collapse_ws(scalar["PY"]), &year)) {
      fail("record " + rec.id + " has no usable PY", end_line);
      if (report_) ++report_->records_skipped;
      return;
    }
    if (year < 1900 || year > 2100) {
      fail("record " + rec.id + " year outside [1900, 2100]", end_line);
      if (report_) ++report_->records_skipped;
      return;
    }
    rec.year = year;

    if (auto it = scalar.find("TC"); it != scalar.end() && !it->second.empty()) {
      int tc = 0;
      if (!parse_uint(text::collapse_ws(it->second), &tc)) {
        fail("record " + rec.id + " has non-numeric TC", end_line);
        if (report_) ++report_->records_skipped;
        return;
      }
      rec.times_cited = tc;
    }

    for (const std::string& a : text::split_trim(lists["AU"], ';'))
      rec.authors.push_back(normalize_author(a));
    for (const std::string& k : text::split_trim(lists["DE"], ';'))
      rec.author_keywords.push_back(normalize_keyword(k));
    for (const std::string& k : text::split_trim(lists["ID"], ';'))
      rec.keywords_plus.push_back(normalize_keyword(k));
    for (const std::string& c : text::split_trim(lists["WC"], ';'))
      rec.categories.push_back(text::to_upper(text::collapse_ws(c)));
    for (const std::string& seg : text::split_trim_bracket_aware(lists["C1"], ';')) {
      bool known = true;
      std::string country = table_.resolve(seg, &known);
      if (!known) warn("unresolved country for record " + rec.id + ": \"" + seg + "\"", end_line);
      rec.countries.insert(std::move(country));
    }

    if (!seen_ids_.insert(rec.id).second) {
      fail("duplicate record id " + rec.id, end_line);
      if (report_) ++report_->records_skipped;
      return;
    }
    records_.push_back(std::move(rec));
  }

  // Malformed record content: throw in strict mode, otherwise warn and skip.
  void fail(const std::string& msg, std::size_t line) {
    if (opts_.strict) throw ParseError(opts_.source_name + ": " + msg, line);
    warn(msg + "; record skipped", line);
    if (in_record_) skipping_ = true;
  }

  void warn_or_fail(const std::string& msg, std::size_t line) {
    if (opts_.strict) throw ParseError(opts_.source_name + ": " + msg, line);
    warn(msg, line);
  }

  void warn(const std::string& msg, std::size_t line) {
    if (!report_) return;
    std::string full = opts_.source_name;
    if (line) full += ":" + std::to_string(line);
    report_->warnings.push_back(full + ": " + msg);
  }

  const ParseOptions& opts_;
  const CountryTable& table_;
  ParseReport* report_;

  std::vector<BiblioRecord> records_;
  std::set<std::string> seen_ids_;
  std::vector<RawField> fields_;
  bool in_record_ = false;
  bool skipping_ = false;
  bool saw_ef_ = false;
  bool done_ = false;
};

}  // namespace

Corpus parse_export(std::string_view bytes, const ParseOptions& opts, ParseReport* report) {
  return ExportParser(opts, report).run(bytes);
}

Corpus parse_export_file(const std::filesystem::path& file, const ParseOptions& opts,
                         ParseReport* report) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseOptions local = opts;
  local.source_name = file.filename().string();
  return parse_export(buf.str(), local, report);
}

Corpus merge_corpora(std::vector<Corpus> parts, bool strict, ParseReport* report) {
  Corpus merged;
  std::set<std::string> seen;
  for (Corpus& part : parts) {
    for (BiblioRecord& rec : part.records) {
      if (!seen.insert(rec.id).second) {
        if (strict) throw ParseError("duplicate record id across inputs: " + rec.id, 0);
        if (report)
          report->warnings.push_back("duplicate record id across inputs skipped: " + rec.id);
        if (report) ++report->records_skipped;
        continue;
      }
      merged.records.push_back(std::move(rec));
    }
    for (std::string& s : part.sources) merged.sources.push_back(std::move(s));
    if (merged.parsed_at.empty()) merged.parsed_at = part.parsed_at;
  }
  return merged;
}

namespace {

void emit_list(std::string& out, const char* tag, const std::vector<std::string>& values) {
  if (values.empty()) return;
  out += tag;
  out += ' ';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += "; ";
    out += values[i];
  }
  out += '\n';
}

}  // namespace

std::string serialize_tagged(const Corpus& corpus) {
  std::string out;
  out += "FN bibliotk corpus export\nVR 1.0\n\n";
  for (const BiblioRecord& rec : corpus.records) {
    out += "UT " + rec.id + "\n";
    if (!rec.doc_type.empty()) out += "DT " + rec.doc_type + "\n";
    emit_list(out, "AU", rec.authors);
    if (!rec.journal.empty()) out += "SO " + rec.journal + "\n";
    out += "PY " + std::to_string(rec.year) + "\n";
    emit_list(out, "DE", rec.author_keywords);
    emit_list(out, "ID", rec.keywords_plus);
    emit_list(out, "C1",
              std::vector<std::string>(rec.countries.begin(), rec.countries.end()));
    emit_list(out, "WC", rec.categories);
    out += "TC " + std::to_string(rec.times_cited) + "\n";
    out += "ER\n\n";
  }
  out += "EF\n";
  return out;
}

std::string dump_jsonl(const Corpus& corpus) {
  std::string out;
  for (const BiblioRecord& rec : corpus.records) {
    nlohmann::ordered_json j;
    j["id"] = rec.id;
    j["doc_type"] = rec.doc_type;
    j["year"] = rec.year;
    j["journal"] = rec.journal;
    j["authors"] = rec.authors;
    j["author_keywords"] = rec.author_keywords;
    j["keywords_plus"] = rec.keywords_plus;
    j["countries"] = rec.countries;
    j["categories"] = rec.categories;
    j["times_cited"] = rec.times_cited;
    out += j.dump();
    out += '\n';
  }
  return out;
}

Corpus filter_research_articles(const Corpus& corpus, int year_min, int year_max) {
  if (year_min > year_max) throw DomainError("year_min greater than year_max");
  Corpus out;
  out.sources = corpus.sources;
  out.parsed_at = corpus.parsed_at;
  for (const BiblioRecord& rec : corpus.records)
    if (rec.doc_type == "ARTICLE" && rec.year >= year_min && rec.year <= year_max)
      out.records.push_back(rec);
  return out;
}

Corpus filter_year_range(const Corpus& corpus, int year_min, int year_max) {
  if (year_min > year_max) throw DomainError("year_min greater than year_max");
  Corpus out;
  out.sources = corpus.sources;
  out.parsed_at = corpus.parsed_at;
  for (const BiblioRecord& rec : corpus.records)
    if (rec.year >= year_min && rec.year <= year_max) out.records.push_back(rec);
  return out;
}

}  // namespace biblio
