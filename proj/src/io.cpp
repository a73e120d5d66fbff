#include "semirings/io.hpp"

#include <fstream>
#include <sstream>

namespace semirings {

namespace {

constexpr int kMaxParsedOrder = 32;

}  // namespace

std::pair<OpTable, OpTable> parse_tables(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  if (!(in >> token))
    throw SemiringError(ErrorCode::ParseError, "empty input");
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw SemiringError(ErrorCode::ParseError,
                        "expected the order on line 1, got '" + token + "'");
  }
  if (n < 1 || n > kMaxParsedOrder)
    throw SemiringError(ErrorCode::ParseError,
                        "order must be in 1.." + std::to_string(kMaxParsedOrder));
  OpTable add(n, 0), mul(n, 0);
  for (OpTable* t : {&add, &mul}) {
    for (int i = 0; i < n * n; ++i) {
      if (!(in >> token))
        throw SemiringError(ErrorCode::ParseError,
                            "expected 2*" + std::to_string(n * n) +
                                " entries after the order");
      int v = 0;
      try {
        size_t pos = 0;
        v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw SemiringError(ErrorCode::ParseError,
                            "non-integer entry '" + token + "'");
      }
      if (v < 0 || v >= n)
        throw SemiringError(ErrorCode::ParseError,
                            "entry " + std::to_string(v) + " outside 0.." +
                                std::to_string(n - 1));
      t->entries[i] = v;
    }
  }
  if (in >> token)
    throw SemiringError(ErrorCode::ParseError,
                        "trailing content after the tables: '" + token + "'");
  return {std::move(add), std::move(mul)};
}

std::string format_tables(const OpTable& add, const OpTable& mul) {
  std::ostringstream out;
  out << add.order << '\n';
  for (const OpTable* t : {&add, &mul}) {
    for (int i = 0; i < t->order; ++i) {
      for (int j = 0; j < t->order; ++j) {
        if (j) out << ' ';
        out << t->at(i, j);
      }
      out << '\n';
    }
    if (t == &add) out << '\n';
  }
  return out.str();
}

std::string format_semiring(const FiniteSemiring& s) {
  return format_tables(s.add, s.mul);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw SemiringError(ErrorCode::ParseError, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw SemiringError(ErrorCode::ParseError, "cannot write file: " + path);
  out << content;
}

}  // namespace semirings
