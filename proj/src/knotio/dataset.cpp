#include "gamma4/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gamma4::knotio {

std::vector<std::vector<std::string>> read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;  // current record has content

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    any = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        end_field();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any || !field.empty() || !row.empty()) end_row();
        break;
      default:
        field += c;
        any = true;
    }
  }
  if (quoted) throw DatasetError("unterminated quoted field", rows.size());
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      auto x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

// Column lookup over one data row.
class Row {
public:
  Row(const std::map<std::string, std::size_t>& cols, const std::vector<std::string>& cells,
      std::size_t number)
      : cols_(cols), cells_(cells), number_(number) {}

  std::string text(const std::string& col) const {
    auto it = cols_.find(col);
    if (it == cols_.end() || it->second >= cells_.size()) return {};
    return trim(cells_[it->second]);
  }

  std::optional<long> opt_int(const std::string& col) const {
    std::string s = text(col);
    if (s.empty()) return std::nullopt;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (*b == '+') ++b;
    long v = 0;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e) fail("column '" + col + "': '" + s + "' is not an integer");
    return v;
  }

  long req_int(const std::string& col) const {
    auto v = opt_int(col);
    if (!v) fail("column '" + col + "' is empty");
    return *v;
  }

  std::optional<Interval> opt_interval(const std::string& lo, const std::string& hi) const {
    auto a = opt_int(lo), b = opt_int(hi);
    if (!a && !b) return std::nullopt;
    if (!a || !b) fail("columns '" + lo + "'/'" + hi + "' must both be present or both empty");
    if (*a > *b) fail(lo + " > " + hi);
    return Interval{static_cast<int>(*a), static_cast<int>(*b)};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DatasetError("row " + std::to_string(number_) + ": " + msg, number_);
  }

private:
  const std::map<std::string, std::size_t>& cols_;
  const std::vector<std::string>& cells_;
  std::size_t number_;
};

std::map<std::string, std::size_t> header_index(const std::vector<std::string>& header,
                                                std::initializer_list<const char*> required) {
  std::map<std::string, std::size_t> cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string h = trim(header[i]);
    if (i == 0 && h.rfind("\xEF\xBB\xBF", 0) == 0) h.erase(0, 3);
    if (!cols.emplace(h, i).second) throw DatasetError("duplicate column '" + h + "'", 0);
  }
  for (const char* r : required)
    if (!cols.count(r)) throw DatasetError(std::string("missing mandatory column '") + r + "'", 0);
  return cols;
}

bool blank(const std::vector<std::string>& cells) {
  return std::all_of(cells.begin(), cells.end(), [](const std::string& s) { return trim(s).empty(); });
}

KnotRecord parse_record(const Row& r) {
  KnotRecord k;
  k.name = r.text("name");
  if (k.name.empty()) r.fail("empty knot name");
  k.crossings = static_cast<int>(r.req_int("crossings"));
  if (k.crossings < 0) r.fail("negative crossing number");

  std::string pd = r.text("pd");
  if (!pd.empty()) {
    try {
      k.pd = parse_pd(pd);
    } catch (const std::exception& e) {
      r.fail(std::string("pd: ") + e.what());
    }
  }

  k.signature = static_cast<int>(r.req_int("signature"));
  if (k.signature % 2 != 0) r.fail("signature must be even");
  k.arf = static_cast<int>(r.req_int("arf"));
  if (k.arf != 0 && k.arf != 1) r.fail("arf must be 0 or 1");
  k.g4 = static_cast<int>(r.req_int("g4"));
  if (k.g4 < 0) r.fail("negative g4");
  auto u = r.opt_interval("u_lo", "u_hi");
  if (!u) r.fail("unknotting range u_lo/u_hi is mandatory");
  k.u = *u;
  k.us = r.opt_interval("us_lo", "us_hi");
  k.c4 = r.opt_interval("c4_lo", "c4_hi");
  if (auto c = r.opt_int("crosscap_hi")) {
    if (*c < 1) r.fail("crosscap_hi must be positive");
    k.crosscap_hi = static_cast<int>(*c);
  }

  std::string s = r.text("slice");
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1")
    k.slice = true;
  else if (s == "false" || s == "0")
    k.slice = false;
  else
    r.fail("slice must be true or false");

  k.determinant = r.req_int("determinant");
  if (k.determinant < 1 || k.determinant % 2 == 0) r.fail("determinant must be a positive odd integer");

  if (auto d = r.opt_int("definiteness")) {
    if (*d != 1 && *d != -1) r.fail("definiteness must be +1, -1 or empty");
    k.definiteness = static_cast<int>(*d);
  }

  // g4 <= c4 <= us <= u
  if (k.slice && k.g4 != 0) r.fail("slice knot with g4 != 0");
  if (k.g4 > k.u.hi) r.fail("ladder violated: g4 > u_hi");
  if (k.c4) {
    if (k.g4 > k.c4->hi) r.fail("ladder violated: g4 > c4_hi");
    if (k.c4->lo > k.u.hi) r.fail("ladder violated: c4_lo > u_hi");
    if (k.us && k.c4->lo > k.us->hi) r.fail("ladder violated: c4_lo > us_hi");
  }
  if (k.us) {
    if (k.g4 > k.us->hi) r.fail("ladder violated: g4 > us_hi");
    if (k.us->lo > k.u.hi) r.fail("ladder violated: us_lo > u_hi");
  }
  if (k.pd && static_cast<int>(k.pd->size()) < k.crossings)
    r.fail("pd has fewer crossings than the crossing number");
  return k;
}

}  // namespace

std::vector<KnotRecord> parse_dataset(std::string_view csv_text) {
  auto rows = read_csv(csv_text);
  std::vector<KnotRecord> out;
  if (rows.empty()) throw DatasetError("dataset has no header", 0);
  auto cols = header_index(rows[0], {"name", "crossings", "signature", "arf", "g4", "u_lo", "u_hi",
                                     "slice", "determinant"});
  std::set<std::string> names;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (blank(rows[i])) continue;
    Row r(cols, rows[i], i);
    KnotRecord k = parse_record(r);
    if (!names.insert(k.name).second) r.fail("duplicate knot name " + k.name);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KnotRecord> load_dataset(const std::string& path) { return parse_dataset(read_file(path)); }

std::vector<BandMoveCertificate> parse_certificates(std::string_view csv_text) {
  auto rows = read_csv(csv_text);
  std::vector<BandMoveCertificate> out;
  if (rows.empty()) throw DatasetError("certificate file has no header", 0);
  auto cols = header_index(rows[0], {"source", "h", "target", "target_gamma4"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (blank(rows[i])) continue;
    Row r(cols, rows[i], i);
    BandMoveCertificate c;
    c.source = r.text("source");
    c.target = r.text("target");
    if (c.source.empty() || c.target.empty()) r.fail("source and target are mandatory");
    long h = r.req_int("h");
    if (h < -1 || h > 1) r.fail("h must be -1, 0 or 1");
    c.h = static_cast<int>(h);
    std::string g = r.text("target_gamma4");
    if (g == "slice") {
      c.target_gamma4 = {true, 0};
    } else if (g == "1") {
      c.target_gamma4 = {false, 1};
    } else {
      r.fail("target_gamma4 must be 1 or slice");
    }
    c.figure_ref = r.text("figure_ref");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BandMoveCertificate> load_certificates(const std::string& path) {
  return parse_certificates(read_file(path));
}

}  // namespace gamma4::knotio

namespace gamma4::knotio {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string render_dataset(std::vector<KnotRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const KnotRecord& a, const KnotRecord& b) { return natural_less(a.name, b.name); });
  std::string out =
      "name,crossings,pd,signature,arf,g4,u_lo,u_hi,us_lo,us_hi,c4_lo,c4_hi,crosscap_hi,slice,"
      "determinant,definiteness\n";
  for (const auto& k : records) {
    std::vector<std::string> cells = {
        k.name,
        std::to_string(k.crossings),
        k.pd ? render(*k.pd) : std::string(),
        std::to_string(k.signature),
        std::to_string(k.arf),
        std::to_string(k.g4),
        std::to_string(k.u.lo),
        std::to_string(k.u.hi),
        k.us ? std::to_string(k.us->lo) : std::string(),
        k.us ? std::to_string(k.us->hi) : std::string(),
        k.c4 ? std::to_string(k.c4->lo) : std::string(),
        k.c4 ? std::to_string(k.c4->hi) : std::string(),
        opt(k.crosscap_hi),
        k.slice ? "true" : "false",
        std::to_string(k.determinant),
        k.definiteness ? (*k.definiteness > 0 ? "+1" : "-1") : std::string(),
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_certificates(std::vector<BandMoveCertificate> certs) {
  std::sort(certs.begin(), certs.end(), [](const BandMoveCertificate& a, const BandMoveCertificate& b) {
    if (a.source != b.source) return natural_less(a.source, b.source);
    if (a.target != b.target) return natural_less(a.target, b.target);
    if (a.h != b.h) return a.h < b.h;
    return a.figure_ref < b.figure_ref;
  });
  std::string out = "source,h,target,target_gamma4,figure_ref\n";
  for (const auto& c : certs) {
    out += csv_field(c.source) + ',' + std::to_string(c.h) + ',' + csv_field(c.target) + ',' +
           (c.target_gamma4.slice ? std::string("slice") : std::to_string(c.target_gamma4.value)) +
           ',' + csv_field(c.figure_ref) + '\n';
  }
  return out;
}

}  // namespace gamma4::knotio
