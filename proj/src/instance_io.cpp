#include "mcmgr/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "mcmgr/error.hpp"
#include "mcmgr/parse.hpp"

namespace mcmgr {

namespace {

struct Field {
  std::string value;
  std::size_t line;
  std::size_t column;  // of the first value character
};

struct Row {
  std::vector<Field> cells;
  std::size_t line;
};

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Trims in place and reports how many leading characters were dropped.
std::size_t trim(std::string& s) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  s = s.substr(a, b - a);
  return a;
}

std::vector<Field> split_list(const Field& f) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= f.value.size(); ++i) {
    if (i == f.value.size() || f.value[i] == ',') {
      std::string piece = f.value.substr(start, i - start);
      const std::size_t lead = trim(piece);
      if (piece.empty()) throw ParseError("empty list element", f.line, f.column + start);
      out.push_back(Field{piece, f.line, f.column + start + lead});
      start = i + 1;
    }
  }
  return out;
}

std::uint64_t parse_uint(const Field& f, const std::string& what) {
  if (f.value.empty()) throw ParseError(what + " is missing", f.line, f.column);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < f.value.size(); ++i) {
    const char c = f.value[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(what + " must be a non-negative integer", f.line, f.column + i);
    }
    const std::uint64_t next = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (next / 10 != v) throw ParseError(what + " is too large", f.line, f.column);
    v = next;
  }
  return v;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Poly parse_at(const Field& f, const std::vector<std::string>& vars, const PrimeField& field) {
  try {
    return parse_poly(f.value, vars, field);
  } catch (const ParseError& e) {
    std::string message = e.what();
    message = message.substr(message.find(": ") + 2);
    throw ParseError(message, f.line, f.column + e.column() - 1);
  }
}

}  // namespace

Instance parse_instance(std::string_view text, std::optional<std::uint64_t> characteristic) {
  std::map<std::string, Field> keys;
  std::vector<Row> rows;
  std::optional<std::size_t> matrix_line;
  bool in_matrix = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (is_blank(raw)) continue;
    std::string body = raw;
    const std::size_t lead = trim(body);

    if (body[0] == '[') {
      if (!in_matrix) throw ParseError("matrix row outside the matrix section", line, lead + 1);
      if (body.back() != ']') throw ParseError("matrix row must end with ']'", line, lead + body.size());
      Field inner{body.substr(1, body.size() - 2), line, lead + 2};
      if (is_blank(inner.value)) throw ParseError("empty matrix row", line, lead + 1);
      rows.push_back(Row{split_list(inner), line});
      continue;
    }
    in_matrix = false;

    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, lead + 1);
    std::string key = body.substr(0, colon);
    trim(key);
    std::string value = body.substr(colon + 1);
    const std::size_t value_lead = trim(value);
    const std::size_t value_column = lead + colon + 2 + value_lead;
    static const char* known[] = {"characteristic", "variables", "matrix", "hypersurface",
                                  "truncation", "seed", "extra-variables"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("unknown key '" + key + "'", line, lead + 1);
    if (keys.count(key)) throw ParseError("duplicate key '" + key + "'", line, lead + 1);
    if (key == "matrix") {
      if (!value.empty()) throw ParseError("matrix rows go on the following lines", line, value_column);
      in_matrix = true;
      matrix_line = line;
    }
    keys.emplace(key, Field{value, line, value_column});
  }

  std::uint64_t p = PrimeField::kDefaultCharacteristic;
  if (auto it = keys.find("characteristic"); it != keys.end()) p = parse_uint(it->second, "characteristic");
  if (characteristic) p = *characteristic;
  std::optional<PrimeField> field;
  try {
    field.emplace(p);
  } catch (const InputError& e) {
    auto it = keys.find("characteristic");
    if (it != keys.end() && !characteristic) throw ParseError(e.what(), it->second.line, it->second.column);
    throw;
  }

  auto vit = keys.find("variables");
  if (vit == keys.end()) throw ParseError("missing 'variables'", 1, 1);
  std::vector<std::string> vars;
  for (const Field& f : split_list(vit->second)) {
    if (!valid_name(f.value)) throw ParseError("invalid variable name '" + f.value + "'", f.line, f.column);
    for (const auto& v : vars) {
      if (v == f.value) throw ParseError("duplicate variable '" + f.value + "'", f.line, f.column);
    }
    vars.push_back(f.value);
  }

  if (!matrix_line) throw ParseError("missing 'matrix'", 1, 1);
  if (rows.empty()) throw ParseError("matrix has no rows", *matrix_line, 1);
  PolyMatrix phi;
  for (const Row& row : rows) {
    if (row.cells.size() != rows.size()) {
      throw ParseError("matrix must be square: row has " + std::to_string(row.cells.size()) + " entries, expected " +
                           std::to_string(rows.size()),
                       row.line, 1);
    }
    auto& out = phi.emplace_back();
    for (const Field& cell : row.cells) out.push_back(parse_at(cell, vars, *field));
  }

  std::optional<Poly> g;
  std::size_t g_line = *matrix_line;
  if (auto it = keys.find("hypersurface"); it != keys.end()) {
    g = parse_at(it->second, vars, *field);
    g_line = it->second.line;
  }
  if (auto problem = Presentation::check(*field, vars, phi, g)) {
    const bool about_g = problem->find("hypersurface") != std::string::npos;
    throw ParseError(*problem, about_g ? g_line : *matrix_line, 1);
  }

  Instance out{Presentation(*field, vars, std::move(phi), std::move(g)), std::nullopt, std::nullopt, std::nullopt};
  if (auto it = keys.find("truncation"); it != keys.end()) {
    const auto n = parse_uint(it->second, "truncation");
    if (n < 1 || n > 60) throw ParseError("truncation must be between 1 and 60", it->second.line, it->second.column);
    out.truncation = static_cast<unsigned>(n);
  }
  if (auto it = keys.find("seed"); it != keys.end()) out.seed = parse_uint(it->second, "seed");
  if (auto it = keys.find("extra-variables"); it != keys.end()) {
    const Field& f = it->second;
    const auto dots = f.value.find("..");
    if (dots == std::string::npos) {
      const auto n = static_cast<unsigned>(parse_uint(f, "extra-variables"));
      out.extra_variables = {n, n};
    } else {
      std::string a = f.value.substr(0, dots), b = f.value.substr(dots + 2);
      const std::size_t la = trim(a), lb = trim(b);
      const auto lo = static_cast<unsigned>(parse_uint(Field{a, f.line, f.column + la}, "extra-variables"));
      const auto hi =
          static_cast<unsigned>(parse_uint(Field{b, f.line, f.column + dots + 2 + lb}, "extra-variables"));
      if (lo > hi) throw ParseError("empty extra-variables range", f.line, f.column);
      out.extra_variables = {lo, hi};
    }
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

Instance load_instance(const std::string& path, std::optional<std::uint64_t> characteristic) {
  return parse_instance(read_file(path), characteristic);
}

std::vector<Instance> parse_instances(std::string_view text, std::optional<std::uint64_t> characteristic) {
  std::vector<Instance> out;
  std::string doc;
  std::size_t offset = 0;  // blank lines keep reported line numbers file-relative
  std::size_t line_no = 0;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) out.push_back(parse_instance(std::string(offset, '\n') + doc, characteristic));
    doc.clear();
    has_content = false;
    offset = line_no;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line.substr(first).starts_with("---")) {
      flush();
    } else {
      doc.append(line);
      doc.push_back('\n');
      if (first != std::string_view::npos && line[first] != '#') has_content = true;
    }
    pos = end + 1;
  }
  flush();
  if (out.empty()) throw InputError("no instances in input");
  return out;
}

std::vector<Instance> load_instances(const std::string& path, std::optional<std::uint64_t> characteristic) {
  return parse_instances(read_file(path), characteristic);
}

std::string dump_instance(const Presentation& pres, std::optional<unsigned> truncation,
                          std::optional<std::uint64_t> seed, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  out << "characteristic: " << pres.field().characteristic() << '\n';
  out << "variables: ";
  for (std::size_t i = 0; i < pres.nvars(); ++i) out << (i ? ", " : "") << pres.vars()[i];
  out << "\nmatrix:\n";
  for (const auto& row : pres.entry_strings()) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
    out << "]\n";
  }
  if (pres.hypersurface()) out << "hypersurface: " << pres.hypersurface()->to_string(pres.vars()) << '\n';
  if (truncation) out << "truncation: " << *truncation << '\n';
  if (seed) out << "seed: " << *seed << '\n';
  return out.str();
}

}  // namespace mcmgr
