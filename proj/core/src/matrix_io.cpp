#include "jetscheme/io/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace jetscheme {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first < line.size() && line[first] != '#') lines.push_back({line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

FieldTag field_from_header(std::uint64_t p, std::size_t line, std::size_t column) {
  if (p == 0) return FieldTag::rationals();
  try {
    return FieldTag::prime(p);
  } catch (const Error& e) {
    throw ParseError(e.what(), line, column);
  }
}

template <ExactField K>
JetMatrix<K> read_entries(const std::vector<Line>& lines, std::size_t a, std::size_t b, int m,
                          FieldTag tag) {
  std::vector<JetScalar<K>> entries;
  entries.reserve(a * b);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      entries.push_back(JetScalar<K>::parse(lines[i].text, m, tag));
    } catch (const ParseError& e) {
      throw ParseError(std::string("malformed entry: ") + e.what(), lines[i].number, e.column());
    }
  }
  return JetMatrix<K>::from_entries(a, b, m, tag, std::move(entries));
}

template <ExactField K>
JetMatrix<K> read_json_entries(const nlohmann::json& rows, std::size_t a, std::size_t b, int m,
                               FieldTag tag) {
  if (!rows.is_array() || rows.size() != a) throw ParseError("\"entries\" must hold one array per row", 0, 0);
  std::vector<JetScalar<K>> entries;
  entries.reserve(a * b);
  std::vector<K> coeffs;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != b) throw ParseError("each row must hold one array per column", 0, 0);
    for (const auto& entry : row) {
      if (!entry.is_array() || entry.size() != static_cast<std::size_t>(m) + 1) {
        throw ParseError("each entry must hold order+1 coefficients", 0, 0);
      }
      coeffs.clear();
      for (const auto& c : entry) {
        if (c.is_number_integer()) {
          coeffs.push_back(K::from_int(c.get<std::int64_t>(), tag));
        } else if (c.is_string()) {
          coeffs.push_back(K::parse(c.get<std::string>(), tag));
        } else {
          throw ParseError("coefficients must be integers or strings", 0, 0);
        }
      }
      entries.push_back(JetScalar<K>::from_coefficients(coeffs, m, tag));
    }
  }
  return JetMatrix<K>::from_entries(a, b, m, tag, std::move(entries));
}

}  // namespace

AnyJetMatrix parse_matrix(std::string_view input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  if (i < input.size() && input[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
    }
    return parse_matrix_json(j);
  }
  return parse_matrix_text(input);
}

AnyJetMatrix parse_matrix_text(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("missing header 'a b m p'", 1, 1);

  const Line& header = lines.front();
  std::uint64_t fields[4] = {};
  std::size_t pos = 0;
  for (int f = 0; f < 4; ++f) {
    while (pos < header.text.size() && std::isspace(static_cast<unsigned char>(header.text[pos]))) ++pos;
    const char* first = header.text.data() + pos;
    const char* last = header.text.data() + header.text.size();
    auto [ptr, ec] = std::from_chars(first, last, fields[f]);
    if (ec != std::errc() || ptr == first) {
      throw ParseError("header must be four non-negative integers 'a b m p'", header.number, pos + 1);
    }
    pos = static_cast<std::size_t>(ptr - header.text.data());
  }
  while (pos < header.text.size() && std::isspace(static_cast<unsigned char>(header.text[pos]))) ++pos;
  if (pos != header.text.size()) throw ParseError("trailing characters in header", header.number, pos + 1);

  const std::uint64_t a = fields[0];
  const std::uint64_t b = fields[1];
  const std::uint64_t m = fields[2];
  if (a == 0 || b == 0) throw ParseError("matrix dimensions must be positive", header.number, 1);
  if (a > 64 || b > 64 || m > 64) throw ParseError("matrix header exceeds supported size", header.number, 1);
  const FieldTag tag = field_from_header(fields[3], header.number, 1);

  if (lines.size() - 1 != a * b) {
    const std::size_t where = lines.size() > a * b + 1 ? lines[a * b + 1].number : lines.back().number + 1;
    throw ParseError("expected " + std::to_string(a * b) + " entry lines, found " +
                         std::to_string(lines.size() - 1),
                     where, 1);
  }
  if (tag.is_rational()) return read_entries<Rational>(lines, a, b, static_cast<int>(m), tag);
  return read_entries<ModP>(lines, a, b, static_cast<int>(m), tag);
}

AnyJetMatrix parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object", 0, 0);
  for (const char* key : {"rows", "cols", "order", "field", "entries"}) {
    if (!j.contains(key)) throw ParseError(std::string("matrix JSON lacks \"") + key + "\"", 0, 0);
  }
  for (const char* key : {"rows", "cols", "order", "field"}) {
    if (!j.at(key).is_number_unsigned()) {
      throw ParseError(std::string("\"") + key + "\" must be a non-negative integer", 0, 0);
    }
  }
  const auto a = j.at("rows").get<std::uint64_t>();
  const auto b = j.at("cols").get<std::uint64_t>();
  const auto m = j.at("order").get<std::uint64_t>();
  if (a == 0 || b == 0 || a > 64 || b > 64 || m > 64) throw ParseError("unsupported matrix shape", 0, 0);
  const FieldTag tag = field_from_header(j.at("field").get<std::uint64_t>(), 0, 0);
  try {
    if (tag.is_rational()) return read_json_entries<Rational>(j.at("entries"), a, b, static_cast<int>(m), tag);
    return read_json_entries<ModP>(j.at("entries"), a, b, static_cast<int>(m), tag);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

template <ExactField K>
std::string emit_matrix_text(const JetMatrix<K>& A) {
  std::string out = std::to_string(A.rows()) + " " + std::to_string(A.cols()) + " " +
                    std::to_string(A.order()) + " " + std::to_string(A.tag().p) + "\n";
  for (const auto& e : A.entries()) {
    out += e.to_literal();
    out += "\n";
  }
  return out;
}

template <ExactField K>
nlohmann::json matrix_to_json(const JetMatrix<K>& A) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : A(i, j).coefficients()) {
        if constexpr (std::same_as<K, ModP>) {
          coeffs.push_back(c.value());
        } else {
          coeffs.push_back(c.to_string());
        }
      }
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"order", A.order()}, {"field", A.tag().p},
          {"entries", std::move(rows)}};
}

template std::string emit_matrix_text(const JetMatrix<ModP>&);
template std::string emit_matrix_text(const JetMatrix<Rational>&);
template nlohmann::json matrix_to_json(const JetMatrix<ModP>&);
template nlohmann::json matrix_to_json(const JetMatrix<Rational>&);

std::string emit_matrix_text(const AnyJetMatrix& A) {
  return std::visit([](const auto& m) { return emit_matrix_text(m); }, A);
}

nlohmann::json matrix_to_json(const AnyJetMatrix& A) {
  return std::visit([](const auto& m) { return matrix_to_json(m); }, A);
}

}  // namespace jetscheme
