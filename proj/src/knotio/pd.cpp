#include "gamma4/knotio.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace gamma4::knotio {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  PDCode run() {
    PDCode pd;
    expect_word("PD");
    expect('[');
    if (peek() == ']') {
      ++pos_;
      finish();
      return pd;
    }
    for (;;) {
      pd.crossings.push_back(crossing());
      char c = peek();
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']' after crossing");
    }
    finish();
    return pd;
  }

private:
  Crossing crossing() {
    expect_word("X");
    expect('[');
    Crossing x{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      x[k] = label();
    }
    expect(']');
    return x;
  }

  int label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected edge label");
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || v < 1) {
      pos_ = start;
      fail("edge label must be a positive integer");
    }
    return v;
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after PD code");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw PDSyntaxError("PD syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string at(std::size_t i) { return "crossing " + std::to_string(i + 1); }

}  // namespace

void validate(const PDCode& pd) {
  const int m = pd.edge_count();
  std::map<int, int> seen;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    for (int e : pd.crossings[i]) {
      if (e < 1 || e > m)
        throw PDSemanticError(at(i) + ": label " + std::to_string(e) + " outside 1.." +
                                  std::to_string(m),
                              i);
      if (++seen[e] > 2)
        throw PDSemanticError(at(i) + ": label " + std::to_string(e) + " occurs more than twice",
                              i);
    }
  }
  for (int e = 1; e <= m; ++e)
    if (seen[e] != 2)
      throw PDSemanticError("label " + std::to_string(e) + " occurs " + std::to_string(seen[e]) +
                                " times, expected 2",
                            PDSemanticError::npos);

  for (std::size_t i = 0; i < pd.size(); ++i) {
    const auto& [a, b, c, d] = pd.crossings[i];
    if (c != pd.next(a))
      throw PDSemanticError(at(i) + ": under-strand " + std::to_string(a) + " -> " +
                                std::to_string(c) + " breaks edge succession",
                            i);
    if (d != pd.next(b) && b != pd.next(d))
      throw PDSemanticError(at(i) + ": over-strand labels " + std::to_string(b) + ", " +
                                std::to_string(d) + " are not consecutive",
                            i);
  }
}

PDCode parse_pd(std::string_view text) {
  PDCode pd = Parser(text).run();
  validate(pd);
  return pd;
}

std::string render(const PDCode& pd) {
  std::string out = "PD[";
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (i) out += ", ";
    const auto& x = pd.crossings[i];
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
  }
  out += "]";
  return out;
}

}  // namespace gamma4::knotio
