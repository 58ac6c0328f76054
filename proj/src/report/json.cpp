#include "gamma4/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace gamma4::report {

namespace {

Json matrix_json(const exact::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json element_json(const linkform::Element& x) {
  Json a = Json::array();
  for (long v : x) a.push_back(v);
  return a;
}

Json verdict_json(const bounds::RuleVerdict& rv) {
  Json v;
  v["rule"] = rv.rule;
  v["result"] = linkform::to_string(rv.verdict.result);
  v["detail"] = rv.verdict.detail;
  v["witness"] = rv.verdict.witness ? element_json(*rv.verdict.witness) : Json(nullptr);
  return v;
}

Json form_json(const linkform::LinkingForm& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.group().rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.group().rank(); ++j) row.push_back(exact::to_string(f.value(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json knot_json(const KnotAnalysis& ka, const bounds::GammaBounds* b) {
  const auto& r = ka.record;
  Json k;
  k["name"] = r.name;
  k["crossings"] = r.crossings;
  k["determinant"] = r.determinant;
  k["signature"] = r.signature;
  k["arf"] = r.arf;
  k["g4"] = r.g4;
  k["slice"] = r.slice;
  if (ka.goeritz) {
    Json g;
    g["G"] = matrix_json(ka.goeritz->reduced);
    g["mu"] = ka.goeritz->mu;
    g["det"] = ka.goeritz_det->get_si();
    g["signature"] = *ka.goeritz_signature;
    k["goeritz"] = std::move(g);
  } else {
    k["goeritz"] = nullptr;
  }
  if (ka.diagram_error) k["diagram_error"] = *ka.diagram_error;
  if (ka.form) {
    const auto& f = *ka.form;
    Json h = Json::array();
    for (long d : f.group().factors()) h.push_back(d);
    k["h1"] = std::move(h);
    k["linking_form"] = form_json(f);
    if (f.group().cyclic()) {
      Json orbit = Json::array();
      for (const auto& v : linkform::generator_values(f)) orbit.push_back(exact::to_string(v));
      k["generator_values"] = std::move(orbit);
    }
    k["metabolic"] = *ka.metabolic;
  }
  k["sig_arf"] = ka.sig_arf;
  Json vs = Json::array();
  for (const auto& rv : ka.verdicts) vs.push_back(verdict_json(rv));
  k["verdicts"] = std::move(vs);
  if (b) {
    k["lower"] = b->lower;
    k["upper"] = b->upper ? Json(*b->upper) : Json(nullptr);
    k["gamma_bar_upper"] = b->gamma_bar_upper ? Json(*b->gamma_bar_upper) : Json(nullptr);
    k["status"] = bounds::to_string(b->status());
    Json rs = Json::array();
    for (const auto& reason : b->reasons)
      rs.push_back(Json{{"rule", reason.rule}, {"citation", reason.citation}, {"detail", reason.detail}});
    k["reasons"] = std::move(rs);
  } else {
    k["status"] = "Unclassified";
  }
  return k;
}

Json convention_json(const planar::GoeritzConvention& c) {
  return Json{{"name", c.name()},
              {"eta_sign", c.eta_sign},
              {"type_ii", c.parallel_is_type_ii ? "parallel" : "antiparallel"}};
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json to_json(const Analysis& a, const std::string& canonical_dataset,
             const std::string& canonical_certificates) {
  Json report;

  Json meta;
  meta["sign_convention"] = to_string(a.settings.sign);
  meta["goeritz_convention"] = convention_json(a.convention);
  if (a.calibration) {
    Json cal;
    cal["matches"] = a.calibration->matches;
    cal["total"] = a.calibration->total;
    Json trials = Json::array();
    for (const auto& [conv, hits] : a.calibration->trials)
      trials.push_back(Json{{"convention", conv.name()}, {"matches", hits}});
    cal["trials"] = std::move(trials);
    cal["mismatches"] = a.calibration->mismatches;
    meta["calibration"] = std::move(cal);
  } else {
    meta["calibration"] = nullptr;
  }
  meta["linking_form_sign"] = "+G^-1";
  meta["klein_enabled"] = a.settings.enable_klein;
  meta["fixed_point_passes"] = a.run.passes;
  meta["dataset_sha256"] = sha256_hex(canonical_dataset);
  meta["certificates_sha256"] = sha256_hex(canonical_certificates);
  report["metadata"] = std::move(meta);

  Counts c = tally(a);
  Json summary;
  summary["knots"] = c.knots;
  Json det = Json::object();
  for (const auto& [v, n] : c.determined) det[std::to_string(v)] = n;
  summary["determined"] = std::move(det);
  summary["undetermined"] = c.undetermined;
  summary["inconsistent"] = c.inconsistent;
  summary["unclassified"] = c.unclassified;
  report["summary"] = std::move(summary);

  Json knots = Json::array();
  for (const auto& ka : a.knots) {
    auto it = a.run.bounds.find(ka.record.name);
    knots.push_back(knot_json(ka, it == a.run.bounds.end() ? nullptr : &it->second));
  }
  report["knots"] = std::move(knots);
  report["inconsistencies"] = a.inconsistencies;
  Json unused = Json::array();
  for (const auto& cert : a.run.unused) unused.push_back(cert.source + " -> " + cert.target);
  report["unused_certificates"] = std::move(unused);
  report["inputs"] = Json{{"dataset", canonical_dataset}, {"certificates", canonical_certificates}};
  return report;
}

std::string summary_csv(const Analysis& a) {
  std::string out = "name,h1,linking_form,lower,upper,status,rules\n";
  for (const auto& ka : a.knots) {
    std::string h1, lf;
    if (ka.form) {
      h1 = ka.form->group().to_string();
      for (std::size_t i = 0; i < ka.form->group().rank(); ++i) {
        if (i) lf += ' ';
        lf += exact::to_string(ka.form->value(i, i));
      }
    }
    out += ka.record.name + ',' + h1 + ',' + lf + ',';
    auto it = a.run.bounds.find(ka.record.name);
    if (it == a.run.bounds.end()) {
      out += ",,Unclassified,\n";
      continue;
    }
    const auto& b = it->second;
    std::vector<std::string> seen;
    std::string rules;
    for (const auto& r : b.reasons) {
      if (std::find(seen.begin(), seen.end(), r.rule) != seen.end()) continue;
      seen.push_back(r.rule);
      if (!rules.empty()) rules += ';';
      rules += r.rule;
    }
    out += std::to_string(b.lower) + ',' + (b.upper ? std::to_string(*b.upper) : "") + ',' +
           bounds::to_string(b.status()) + ',' + rules + '\n';
  }
  return out;
}

}  // namespace gamma4::report
