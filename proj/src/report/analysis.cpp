#include "gamma4/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace gamma4::report {

using linkform::ObstructionVerdict;
using linkform::Result;

SignConvention parse_sign_convention(const std::string& s) {
  if (s == "auto") return SignConvention::Auto;
  if (s == "fixed+") return SignConvention::FixedPlus;
  if (s == "fixed-") return SignConvention::FixedMinus;
  throw std::invalid_argument("unknown sign convention '" + s + "'");
}

std::string to_string(SignConvention s) {
  switch (s) {
    case SignConvention::FixedPlus:
      return "fixed+";
    case SignConvention::FixedMinus:
      return "fixed-";
    case SignConvention::Auto:
      break;
  }
  return "auto";
}

std::vector<bounds::RuleVerdict> linking_verdicts(const linkform::LinkingForm& f,
                                                  std::optional<int> required_sign) {
  std::vector<bounds::RuleVerdict> out;
  const auto& g = f.group();
  out.push_back({"mobius-cyclic", linkform::mobius_obstruction_cyclic(f)});

  std::optional<std::pair<long, long>> pq;
  if (g.cyclic() && !g.trivial()) pq = linkform::p2q_split(g.order());
  if (pq)
    out.push_back({"mobius-p2q", linkform::mobius_obstruction_p2q(f, pq->first, pq->second)});
  else
    out.push_back({"mobius-p2q", {Result::Inapplicable, std::nullopt, "order is not p^2 q"}});

  out.push_back({"definiteness", linkform::definiteness_consistency(f, required_sign)});

  if (auto p = linkform::klein_prime(g))
    out.push_back({"klein", linkform::klein_discriminant(f, *p)});
  else
    out.push_back({"klein", {Result::Inapplicable, std::nullopt, g.to_string() + " is not Zp+Zp"}});
  return out;
}

KnotAnalysis analyze(const knotio::KnotRecord& rec, const planar::GoeritzConvention& conv) {
  KnotAnalysis a;
  a.record = rec;
  a.sig_arf = bounds::sig_arf_obstruction(rec.signature, rec.arf);
  if (!rec.pd) return a;
  try {
    a.goeritz = planar::goeritz(*rec.pd, conv);
    a.goeritz_det = exact::det(a.goeritz->reduced);
    a.goeritz_signature = planar::signature_via_goeritz(*a.goeritz);
    a.form = linkform::linking_form(*a.goeritz).with_sign(+1);
  } catch (const std::exception& e) {
    a.diagram_error = e.what();
    return a;
  }
  a.metabolic = linkform::metabolic_test(*a.form).metabolic;
  a.verdicts = linking_verdicts(*a.form, rec.definiteness);
  return a;
}

planar::GoeritzConvention choose_convention(const std::vector<knotio::KnotRecord>& records,
                                            SignConvention s,
                                            std::optional<planar::Calibration>* calibration) {
  if (s == SignConvention::FixedPlus) return {1, planar::kCalibratedConvention.parallel_is_type_ii};
  if (s == SignConvention::FixedMinus) return {-1, planar::kCalibratedConvention.parallel_is_type_ii};
  std::vector<planar::CalibrationSample> samples;
  for (const auto& r : records)
    if (r.pd && r.pd->size() > 0) samples.push_back({r.name, *r.pd, r.signature});
  if (samples.empty()) return planar::kCalibratedConvention;
  planar::Calibration c = planar::calibrate(samples);
  if (calibration) *calibration = c;
  return c.convention;
}

Analysis run(const std::vector<knotio::KnotRecord>& records,
             const std::vector<knotio::BandMoveCertificate>& certs, const Settings& settings) {
  Analysis an;
  an.settings = settings;
  an.convention = choose_convention(records, settings.sign, &an.calibration);

  std::vector<knotio::KnotRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return knotio::natural_less(x.name, y.name);
  });

  std::vector<bounds::KnotInput> inputs;
  for (const auto& rec : sorted) {
    KnotAnalysis ka = analyze(rec, an.convention);
    if (ka.diagram_error) an.inconsistencies.push_back(rec.name + ": diagram rejected: " + *ka.diagram_error);
    if (ka.goeritz_det && abs(*ka.goeritz_det) != rec.determinant)
      an.inconsistencies.push_back(rec.name + ": |det G| = " + exact::Integer(abs(*ka.goeritz_det)).get_str() +
                                   " but determinant is " + std::to_string(rec.determinant));
    if (ka.goeritz_signature && *ka.goeritz_signature != rec.signature)
      an.inconsistencies.push_back(rec.name + ": Goeritz signature " + std::to_string(*ka.goeritz_signature) +
                                   " but signature is " + std::to_string(rec.signature));
    inputs.push_back({rec, ka.verdicts});
    an.knots.push_back(std::move(ka));
  }

  an.run = bounds::classify_all(inputs, certs, {settings.enable_klein});
  for (const auto& [name, msg] : an.run.errors) an.inconsistencies.push_back(msg);
  for (const auto& ka : an.knots) {
    auto it = an.run.bounds.find(ka.record.name);
    if (it == an.run.bounds.end()) continue;
    const auto& b = it->second;
    if (b.status() == bounds::Status::Inconsistent)
      an.inconsistencies.push_back(ka.record.name + ": lower bound " + std::to_string(b.lower) +
                                   " exceeds upper bound " + std::to_string(*b.upper));
    else if (ka.record.slice && !(b.lower == 1 && b.upper == 1))
      an.inconsistencies.push_back(ka.record.name + ": slice knot not classified as [1,1]");
  }
  return an;
}

Counts tally(const Analysis& a) {
  Counts c;
  c.knots = a.knots.size();
  for (const auto& ka : a.knots) {
    auto it = a.run.bounds.find(ka.record.name);
    if (it == a.run.bounds.end()) {
      ++c.unclassified;
      continue;
    }
    switch (it->second.status()) {
      case bounds::Status::Determined:
        ++c.determined[it->second.lower];
        break;
      case bounds::Status::Undetermined:
        ++c.undetermined;
        break;
      case bounds::Status::Inconsistent:
        ++c.inconsistent;
        break;
    }
  }
  return c;
}

}  // namespace gamma4::report
