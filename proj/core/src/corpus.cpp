#include "kstate/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kstate/diagram.hpp"

namespace kstate {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (quoted)
    fail(ErrorKind::CsvError, "line " + std::to_string(line_number) + ": unterminated quote");
  fields.push_back(std::move(current));
  return fields;
}

bool parse_bool(const std::string& text, int line_number) {
  if (text == "true") return true;
  if (text == "false") return false;
  fail(ErrorKind::CsvError,
       "line " + std::to_string(line_number) + ": expected true/false, got '" + text + "'");
}

} // namespace

std::vector<CorpusEntry> parse_corpus_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "name,pd,alternating,fibered,alexander")
        fail(ErrorKind::CsvError, "line 1: bad header '" + line + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(line, line_number);
    if (fields.size() != 5)
      fail(ErrorKind::CsvError, "line " + std::to_string(line_number) + ": expected 5 fields, got " +
                                    std::to_string(fields.size()));
    CorpusEntry entry;
    entry.name = fields[0];
    entry.pd = fields[1];
    entry.alternating_diagram = parse_bool(fields[2], line_number);
    entry.fibered = parse_bool(fields[3], line_number);
    if (!names.insert(entry.name).second)
      fail(ErrorKind::CsvError,
           "line " + std::to_string(line_number) + ": duplicate name '" + entry.name + "'");
    try {
      (void)parse_pd(entry.pd);
    } catch (const Error& e) {
      fail(ErrorKind::CsvError,
           "line " + std::to_string(line_number) + ": invalid pd: " + e.what());
    }
    if (!fields[4].empty()) {
      try {
        entry.alexander = LaurentPolynomial::parse(fields[4]).normalized();
      } catch (const Error& e) {
        fail(ErrorKind::CsvError,
             "line " + std::to_string(line_number) + ": invalid polynomial: " + e.what());
      }
    }
    entries.push_back(std::move(entry));
  }
  if (!header_seen) fail(ErrorKind::CsvError, "empty file (header required)");
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::CsvError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus_csv(buffer.str());
}

} // namespace kstate
