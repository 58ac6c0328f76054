// gamma4: Goeritz matrices, linking forms and non-orientable 4-genus bounds.
//
// Exit codes: 0 ok, 2 diagram rejected, 3 unknown knot, 4 inconsistent data,
// 5 verify-theorem count mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gamma4/report.hpp"

namespace {

using namespace gamma4;

enum Exit { kOk = 0, kDiagram = 2, kLookup = 3, kInconsistent = 4, kMismatch = 5 };

struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string dataset = std::string(GAMMA4_DATA_DIR) + "/knots.csv";
  std::string certificates = std::string(GAMMA4_DATA_DIR) + "/certificates.csv";
  std::string sign = "auto";
  bool klein = false;
};

struct DiagramArgs {
  std::string pd;
  std::string pd_file;
  std::string knot;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

const knotio::KnotRecord& find_knot(const std::vector<knotio::KnotRecord>& recs, const std::string& name) {
  for (const auto& r : recs)
    if (r.name == name) return r;
  throw LookupError("unknown knot '" + name + "'");
}

// Diagram from inline text, a file, or a dataset row; the convention comes
// from --sign-convention (auto calibrates only when a dataset is at hand).
struct Diagram {
  std::string label;
  knotio::PDCode pd;
  planar::GoeritzConvention conv = planar::kCalibratedConvention;
  std::optional<knotio::KnotRecord> record;
};

Diagram resolve_diagram(const DiagramArgs& d, const Common& c) {
  Diagram out;
  auto sign = report::parse_sign_convention(c.sign);
  std::optional<std::vector<knotio::KnotRecord>> recs;
  if (!d.knot.empty() || sign == report::SignConvention::Auto) {
    if (!d.knot.empty() || std::ifstream(c.dataset)) recs = knotio::load_dataset(c.dataset);
  }
  if (recs)
    out.conv = report::choose_convention(*recs, sign);
  else if (sign != report::SignConvention::Auto)
    out.conv = report::choose_convention({}, sign);

  if (!d.pd.empty()) {
    out.label = "inline";
    out.pd = knotio::parse_pd(d.pd);
  } else if (!d.pd_file.empty()) {
    out.label = d.pd_file;
    out.pd = knotio::parse_pd(knotio::read_file(d.pd_file));
  } else if (!d.knot.empty()) {
    const auto& r = find_knot(*recs, d.knot);
    if (!r.pd) throw LookupError("knot '" + d.knot + "' has no PD code");
    out.label = r.name;
    out.pd = *r.pd;
    out.record = r;
  } else {
    throw CLI::ValidationError("give a PD code, --pd-file or --knot");
  }
  return out;
}

void print_matrix(std::ostream& os, const std::string& title, const exact::IntMatrix& m) {
  os << title << " (" << m.rows() << "x" << m.cols() << ")\n";
  if (m.rows() == 0) {
    os << "  []\n";
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
}

void print_form(std::ostream& os, const linkform::LinkingForm& f) {
  os << "H1 = " << f.group().to_string() << '\n';
  if (f.group().trivial()) return;
  os << "linking form (+G^-1 on invariant-factor generators):\n";
  for (std::size_t i = 0; i < f.group().rank(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < f.group().rank(); ++j)
      os << (j ? " " : "") << exact::to_string(f.value(i, j));
    os << '\n';
  }
  if (f.group().cyclic()) {
    os << "generator values:";
    for (const auto& v : linkform::generator_values(f)) os << ' ' << exact::to_string(v);
    os << '\n';
  }
}

int cmd_goeritz(const DiagramArgs& d, const Common& c, const std::string& csv_prefix) {
  Diagram dg = resolve_diagram(d, c);
  auto gd = planar::goeritz(dg.pd, dg.conv);
  std::cout << "diagram: " << dg.label << " (" << dg.pd.size() << " crossings)\n";
  std::cout << "convention: " << dg.conv.name() << '\n';
  print_matrix(std::cout, "G'", gd.full);
  print_matrix(std::cout, "G", gd.reduced);
  std::cout << "mu = " << gd.mu << '\n';
  std::cout << "det G = " << exact::det(gd.reduced).get_str() << '\n';
  auto snf = exact::smith_normal_form(gd.reduced).diagonal();
  std::cout << "SNF diagonal:";
  for (const auto& v : snf) std::cout << ' ' << v.get_str();
  std::cout << (snf.empty() ? " (empty)\n" : "\n");
  std::cout << "signature = sig(G) - mu = " << planar::signature_via_goeritz(gd) << '\n';
  if (!csv_prefix.empty()) {
    write_file(csv_prefix + "_full.csv", planar::matrix_csv(gd.full));
    write_file(csv_prefix + "_reduced.csv", planar::matrix_csv(gd.reduced));
  }
  return kOk;
}

int cmd_linkform(const DiagramArgs& d, const Common& c) {
  Diagram dg = resolve_diagram(d, c);
  auto gd = planar::goeritz(dg.pd, dg.conv);
  auto f = linkform::linking_form(gd).with_sign(+1);
  std::cout << "diagram: " << dg.label << '\n';
  print_form(std::cout, f);
  auto met = linkform::metabolic_test(f);
  std::cout << "metabolic: " << (met.metabolic ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_obstruct(const std::string& knot, const std::string& override_pd, const Common& c) {
  auto recs = knotio::load_dataset(c.dataset);
  knotio::KnotRecord rec = find_knot(recs, knot);
  if (!override_pd.empty()) rec.pd = knotio::parse_pd(override_pd);
  auto conv = report::choose_convention(recs, report::parse_sign_convention(c.sign));
  auto ka = report::analyze(rec, conv);
  if (ka.diagram_error) {
    std::cerr << knot << ": " << *ka.diagram_error << '\n';
    return kDiagram;
  }
  std::cout << rec.name << '\n';
  int m8 = (((rec.signature + 4 * rec.arf) % 8) + 8) % 8;
  std::cout << "sigma+4Arf: " << (ka.sig_arf ? "Obstructed" : "NotObstructed") << " (sigma = "
            << rec.signature << ", Arf = " << rec.arf << ", sigma+4Arf = " << m8 << " mod 8"
            << (ka.sig_arf ? "" : ", not 4") << ")\n";
  if (ka.form) {
    print_form(std::cout, *ka.form);
    for (const auto& rv : ka.verdicts) {
      if (rv.rule == "klein" && !c.klein && !rv.verdict.obstructed() &&
          rv.verdict.result == linkform::Result::Inapplicable)
        continue;
      std::cout << rv.rule << ": " << linkform::to_string(rv.verdict.result) << " (" << rv.verdict.detail
                << ")\n";
    }
  } else {
    std::cout << "no PD code: linking-form tests skipped\n";
  }
  return kOk;
}

struct Loaded {
  std::vector<knotio::KnotRecord> records;
  std::vector<knotio::BandMoveCertificate> certs;
};

Loaded load_inputs(const Common& c, const std::string& replay) {
  Loaded in;
  if (!replay.empty()) {
    auto j = report::Json::parse(knotio::read_file(replay));
    in.records = knotio::parse_dataset(j.at("inputs").at("dataset").get<std::string>());
    in.certs = knotio::parse_certificates(j.at("inputs").at("certificates").get<std::string>());
  } else {
    in.records = knotio::load_dataset(c.dataset);
    in.certs = knotio::load_certificates(c.certificates);
  }
  return in;
}

void print_summary(std::ostream& os, const report::Counts& k) {
  os << "knots: " << k.knots << '\n';
  for (const auto& [v, n] : k.determined) os << "determined gamma4 = " << v << ": " << n << '\n';
  os << "undetermined: " << k.undetermined << '\n';
  if (k.inconsistent) os << "inconsistent: " << k.inconsistent << '\n';
  if (k.unclassified) os << "unclassified: " << k.unclassified << '\n';
}

report::Analysis classify(const Common& c, const std::string& replay, const std::string& out,
                          const std::string& csv) {
  Loaded in = load_inputs(c, replay);
  report::Settings s{report::parse_sign_convention(c.sign), c.klein};
  report::Analysis a = report::run(in.records, in.certs, s);
  if (!out.empty()) {
    auto j = report::to_json(a, knotio::render_dataset(in.records), knotio::render_certificates(in.certs));
    write_file(out, j.dump(2) + "\n");
  }
  if (!csv.empty()) write_file(csv, report::summary_csv(a));
  return a;
}

int report_inconsistencies(const report::Analysis& a) {
  for (const auto& msg : a.inconsistencies) std::cerr << "inconsistency: " << msg << '\n';
  return a.inconsistencies.empty() ? kOk : kInconsistent;
}

int cmd_classify(const Common& c, const std::string& replay, const std::string& out, const std::string& csv) {
  auto a = classify(c, replay, out, csv);
  print_summary(std::cout, report::tally(a));
  return report_inconsistencies(a);
}

int cmd_verify(const Common& c, const std::string& out, const std::vector<std::size_t>& expect) {
  auto a = classify(c, "", out, "");
  auto k = report::tally(a);
  print_summary(std::cout, k);
  std::size_t one = k.determined.count(1) ? k.determined.at(1) : 0;
  std::size_t two = k.determined.count(2) ? k.determined.at(2) : 0;
  bool ok = one == expect[0] && two == expect[1] && k.undetermined == expect[2] && k.inconsistent == 0 &&
            k.unclassified == 0;
  std::cout << "expected " << expect[0] << " at 1, " << expect[1] << " at 2, " << expect[2]
            << " undetermined: " << (ok ? "MATCH" : "MISMATCH") << '\n';
  if (!ok) {
    std::cout << "undetermined knots:";
    for (const auto& ka : a.knots) {
      auto it = a.run.bounds.find(ka.record.name);
      if (it != a.run.bounds.end() && it->second.status() == bounds::Status::Undetermined)
        std::cout << ' ' << ka.record.name << " [" << it->second.lower << ","
                  << (it->second.upper ? std::to_string(*it->second.upper) : "?") << "]";
    }
    std::cout << '\n';
  }
  int rc = report_inconsistencies(a);
  if (rc != kOk) return rc;
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-orientable 4-genus bounds from planar diagrams and invariant tables"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool certs) {
    sub->add_option("--dataset", common.dataset, "knot invariant CSV")->capture_default_str();
    if (certs) sub->add_option("--certificates", common.certificates, "band-move CSV")->capture_default_str();
    sub->add_option("--sign-convention", common.sign, "Goeritz eta convention")
        ->check(CLI::IsMember({"auto", "fixed+", "fixed-"}))
        ->capture_default_str();
    sub->add_flag("--enable-klein", common.klein, "use the Klein-bottle test in classification");
  };

  DiagramArgs diag;
  std::string csv_prefix;
  auto* g = app.add_subcommand("goeritz", "print G', G, mu, det and Smith form of a diagram");
  g->add_option("pd", diag.pd, "inline PD code");
  g->add_option("--pd-file", diag.pd_file, "file holding a PD code");
  g->add_option("--knot", diag.knot, "take the PD code from the dataset");
  g->add_option("--csv", csv_prefix, "write <prefix>_full.csv and <prefix>_reduced.csv");
  add_common(g, false);

  auto* l = app.add_subcommand("linkform", "print H1 and the linking form of a diagram");
  l->add_option("pd", diag.pd, "inline PD code");
  l->add_option("--pd-file", diag.pd_file, "file holding a PD code");
  l->add_option("--knot", diag.knot, "take the PD code from the dataset");
  add_common(l, false);

  std::string knot, override_pd;
  auto* o = app.add_subcommand("obstruct", "run every obstruction on one knot");
  o->add_option("--knot", knot, "knot name")->required();
  o->add_option("--pd-override", override_pd, "use this PD code instead of the dataset's");
  add_common(o, false);

  std::string out, csv, replay;
  auto* c = app.add_subcommand("classify", "classify the dataset and write a JSON report");
  c->add_option("--out", out, "JSON report path");
  c->add_option("--csv", csv, "CSV summary path");
  c->add_option("--replay", replay, "re-run on the inputs echoed in an earlier report");
  add_common(c, true);

  std::vector<std::size_t> expect{121, 58, 6};
  auto* v = app.add_subcommand("verify-theorem", "check the classification counts");
  v->add_option("--out", out, "JSON report path");
  v->add_option("--expect", expect, "determined-at-1, determined-at-2, undetermined")
      ->expected(3)
      ->capture_default_str();
  add_common(v, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_goeritz(diag, common, csv_prefix);
    if (l->parsed()) return cmd_linkform(diag, common);
    if (o->parsed()) return cmd_obstruct(knot, override_pd, common);
    if (c->parsed()) return cmd_classify(common, replay, out, csv);
    if (v->parsed()) return cmd_verify(common, out, expect);
  } catch (const knotio::PDSyntaxError& e) {
    std::cerr << e.what() << '\n';
    return kDiagram;
  } catch (const knotio::PDSemanticError& e) {
    std::cerr << "PD rejected: " << e.what() << '\n';
    return kDiagram;
  } catch (const planar::DiagramError& e) {
    std::cerr << "diagram rejected: " << e.what() << '\n';
    return kDiagram;
  } catch (const LookupError& e) {
    std::cerr << e.what() << '\n';
    return kLookup;
  } catch (const knotio::DatasetError& e) {
    std::cerr << e.what() << '\n';
    return kInconsistent;
  } catch (const bounds::InconsistentDataError& e) {
    std::cerr << e.what() << '\n';
    return kInconsistent;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
