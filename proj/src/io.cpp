#include "pia/io.hpp"

#include <cstdint>
#include <sstream>

#include <json.hpp>

#include "pia/errors.hpp"

namespace pia {

namespace {

struct LineReader {
  std::vector<std::string> lines;
  size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }
  bool done() const { return pos >= lines.size(); }
  const std::string& peek() const { return lines[pos]; }
  std::string next(const char* what) {
    if (done()) fail(Errc::parse, std::string("unexpected end of input, expected ") + what);
    return lines[pos++];
  }
  void skip_blank() {
    while (!done() && lines[pos].find_first_not_of(" \t\r") == std::string::npos) ++pos;
  }
};

std::vector<int> parse_ints(const std::string& line, int expected, size_t line_no) {
  std::istringstream is(line);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  std::string rest;
  if (is.clear(), is >> rest)
    fail(Errc::parse, "line " + std::to_string(line_no) + ": unexpected token '" + rest + "'");
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    fail(Errc::parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                          " entries, found " + std::to_string(out.size()));
  return out;
}

int parse_count(LineReader& r, const char* what) {
  size_t line_no = r.pos + 1;
  auto vals = parse_ints(r.next(what), -1, line_no);
  if (vals.size() != 1 || vals[0] <= 0)
    fail(Errc::parse, "line " + std::to_string(line_no) + ": expected a positive " + what);
  return vals[0];
}

// rows of a Cayley block, leaving the reader after the last row
FiniteSemigroup parse_table_block(LineReader& r) {
  r.skip_blank();
  int n = parse_count(r, "carrier size");
  std::vector<int> table;
  table.reserve(n * n);
  for (int row = 0; row < n; ++row) {
    size_t line_no = r.pos + 1;
    auto vals = parse_ints(r.next("table row"), n, line_no);
    table.insert(table.end(), vals.begin(), vals.end());
  }
  std::vector<std::string> labels;
  if (!r.done() && r.peek().rfind("# labels:", 0) == 0) {
    std::istringstream is(r.next("labels"));
    std::string tok;
    is >> tok >> tok; // "#", "labels:"
    while (is >> tok) labels.push_back(tok);
    if (static_cast<int>(labels.size()) != n)
      fail(Errc::parse, "label line must name all " + std::to_string(n) + " elements");
  }
  return validate(n, std::move(table), std::move(labels));
}

} // namespace

FiniteSemigroup parse_table(const std::string& text) {
  LineReader r(text);
  FiniteSemigroup s = parse_table_block(r);
  r.skip_blank();
  if (!r.done()) fail(Errc::parse, "line " + std::to_string(r.pos + 1) + ": trailing content");
  return s;
}

std::string format_table(const FiniteSemigroup& s) {
  std::ostringstream os;
  os << s.n << '\n';
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (b) os << ' ';
      os << s.at(a, b);
    }
    os << '\n';
  }
  if (!s.labels.empty()) {
    os << "# labels:";
    for (const auto& l : s.labels) os << ' ' << l;
    os << '\n';
  }
  return os.str();
}

GSet parse_gset(const std::string& text) {
  LineReader r(text);
  FiniteSemigroup group = parse_table_block(r);
  r.skip_blank();
  int x_size = parse_count(r, "carrier size");
  std::vector<int> action;
  action.reserve(group.n * x_size);
  for (int k = 0; k < group.n; ++k) {
    size_t line_no = r.pos + 1;
    auto vals = parse_ints(r.next("action row"), x_size, line_no);
    action.insert(action.end(), vals.begin(), vals.end());
  }
  r.skip_blank();
  if (!r.done()) fail(Errc::parse, "line " + std::to_string(r.pos + 1) + ": trailing content");
  return make_gset(std::move(group), x_size, std::move(action));
}

std::string format_gset(const GSet& gs) {
  std::ostringstream os;
  os << format_table(gs.group) << '\n' << gs.x_size << '\n';
  for (int k = 0; k < gs.group.n; ++k) {
    for (int x = 0; x < gs.x_size; ++x) {
      if (x) os << ' ';
      os << gs.act(k, x);
    }
    os << '\n';
  }
  return os.str();
}

ReesSpec parse_rees(const std::string& text) {
  LineReader r(text);
  FiniteSemigroup group = parse_table_block(r);
  r.skip_blank();
  size_t line_no = r.pos + 1;
  auto sizes = parse_ints(r.next("|I| |Lambda| line"), 2, line_no);
  if (sizes[0] <= 0 || sizes[1] <= 0)
    fail(Errc::parse, "line " + std::to_string(line_no) + ": index set sizes must be positive");
  std::vector<std::vector<int>> sandwich;
  for (int l = 0; l < sizes[1]; ++l) {
    line_no = r.pos + 1;
    sandwich.push_back(parse_ints(r.next("sandwich row"), sizes[0], line_no));
  }
  r.skip_blank();
  if (!r.done()) fail(Errc::parse, "line " + std::to_string(r.pos + 1) + ": trailing content");
  return make_rees_spec(std::move(group), sizes[0], sizes[1], std::move(sandwich));
}

std::string format_rees(const ReesSpec& spec) {
  std::ostringstream os;
  os << format_table(spec.group) << '\n' << spec.i_size << ' ' << spec.lambda_size << '\n';
  for (const auto& row : spec.sandwich) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ' ';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

FiniteSemigroup semigroup_from_name_or_table(const std::string& input) {
  if (auto s = catalog_lookup(input)) return *s;
  return parse_table(input);
}

std::string input_digest(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  os << "digest: " << r.digest << '\n';
  for (const auto& [k, v] : r.fields) os << k << ": " << v << '\n';
  return os.str();
}

std::string emit_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["digest"] = r.digest;
  nlohmann::json results = nlohmann::json::object();
  for (const auto& [k, v] : r.fields) results[k] = v;
  j["results"] = results;
  return j.dump(2) + "\n";
}

} // namespace pia
