#include "symdet/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace symdet {
namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Next whitespace-delimited token on the current line; empty at end of line.
  std::string_view next_in_line() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
    if (pos_ >= text_.size() || text_[pos_] == '\n') return {};
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Advance to the next non-blank line; false at end of input.
  bool next_line() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        std::size_t probe = pos_;
        while (probe < text_.size() && (text_[probe] == ' ' || text_[probe] == '\t' || text_[probe] == '\r'))
          ++probe;
        if (probe < text_.size() && text_[probe] != '\n') return true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        throw ParseError("line " + std::to_string(line_) + ": unexpected trailing token");
      }
    }
    return false;
  }

  std::size_t line() const { return line_; }

  bool at_end_of_input() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ >= text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ": invalid number '" + std::string(token) + "'");
  }
  return value;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

template <Scalar T>
Matrix<T> parse_body(Tokenizer& tok, std::size_t n) {
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!tok.next_line()) throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const std::string_view token = tok.next_in_line();
      if (token.empty()) {
        throw ParseError("line " + std::to_string(tok.line()) + ": expected " + std::to_string(n) + " entries");
      }
      if constexpr (is_complex_v<T>) {
        const auto comma = token.find(',');
        if (comma == std::string_view::npos) {
          throw ParseError("line " + std::to_string(tok.line()) + ": complex entry must be 're,im'");
        }
        m(i, j) = Complex{parse_double(token.substr(0, comma), tok.line()),
                          parse_double(token.substr(comma + 1), tok.line())};
      } else {
        m(i, j) = parse_double(token, tok.line());
      }
    }
  }
  return m;
}

template <Scalar T>
std::string format_any(const Matrix<T>& m) {
  std::string out = std::to_string(m.size()) + (is_complex_v<T> ? " C\n" : " R\n");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      if constexpr (is_complex_v<T>) {
        out += format_double(m(i, j).real());
        out += ',';
        out += format_double(m(i, j).imag());
      } else {
        out += format_double(m(i, j));
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

AnyMatrix parse_matrix(std::string_view text) {
  Tokenizer tok(text);
  // Allow leading blank lines.
  if (tok.at_end_of_input()) throw ParseError("empty input");
  const std::string_view dim = tok.next_in_line();
  const std::string_view kind = tok.next_in_line();
  if (dim.empty() || kind.empty()) throw ParseError("header must be '<n> <R|C>'");
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), n);
  if (ec != std::errc{} || ptr != dim.data() + dim.size() || n == 0) {
    throw ParseError("invalid dimension '" + std::string(dim) + "'");
  }
  AnyMatrix result;
  if (kind == "R") {
    result = parse_body<double>(tok, n);
  } else if (kind == "C") {
    result = parse_body<Complex>(tok, n);
  } else {
    throw ParseError("unknown scalar kind '" + std::string(kind) + "' (expected R or C)");
  }
  if (!tok.at_end_of_input()) throw ParseError("unexpected content after " + std::to_string(n) + " rows");
  return result;
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::string format_matrix(const RealMatrix& m) { return format_any(m); }
std::string format_matrix(const ComplexMatrix& m) { return format_any(m); }

void write_matrix_file(const std::string& path, const AnyMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << std::visit([](const auto& x) { return format_matrix(x); }, m);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace symdet
