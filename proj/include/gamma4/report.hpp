#pragma once

// Whole-dataset pipeline: Goeritz data, linking forms, verdicts and bounds for
// every knot, serialised as a deterministic JSON report.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gamma4/bounds.hpp"
#include "gamma4/knotio.hpp"
#include "gamma4/linkform.hpp"
#include "gamma4/planar.hpp"

namespace gamma4::report {

using Json = nlohmann::ordered_json;

enum class SignConvention { Auto, FixedPlus, FixedMinus };
SignConvention parse_sign_convention(const std::string& s);
std::string to_string(SignConvention s);

struct Settings {
  SignConvention sign = SignConvention::Auto;
  bool enable_klein = false;
};

struct KnotAnalysis {
  knotio::KnotRecord record;
  std::optional<planar::GoeritzData> goeritz;
  std::optional<std::string> diagram_error;
  std::optional<int> goeritz_signature;
  std::optional<exact::Integer> goeritz_det;
  std::optional<linkform::LinkingForm> form;  // sign fixed: +G^{-1}
  std::optional<bool> metabolic;
  bool sig_arf = false;
  std::vector<bounds::RuleVerdict> verdicts;
};

/// Linking-form verdicts for one form: cyclic Mobius test, p^2 q test,
/// definiteness against `required_sign`, and the Klein-bottle test.
std::vector<bounds::RuleVerdict> linking_verdicts(const linkform::LinkingForm& f,
                                                  std::optional<int> required_sign);

KnotAnalysis analyze(const knotio::KnotRecord& rec, const planar::GoeritzConvention& conv);

struct Analysis {
  Settings settings;
  planar::GoeritzConvention convention;
  std::optional<planar::Calibration> calibration;  // present for SignConvention::Auto
  std::vector<KnotAnalysis> knots;                 // natural name order
  bounds::ClassificationRun run;
  std::vector<std::string> inconsistencies;
};

/// Convention for the given setting; Auto calibrates against the records
/// that carry a PD code.
planar::GoeritzConvention choose_convention(const std::vector<knotio::KnotRecord>& records,
                                            SignConvention s,
                                            std::optional<planar::Calibration>* calibration = nullptr);

Analysis run(const std::vector<knotio::KnotRecord>& records,
             const std::vector<knotio::BandMoveCertificate>& certs, const Settings& settings);

struct Counts {
  std::size_t knots = 0;
  std::map<int, std::size_t> determined;  // value -> count
  std::size_t undetermined = 0;
  std::size_t inconsistent = 0;
  std::size_t unclassified = 0;
};
Counts tally(const Analysis& a);

/// Report with echoed canonical inputs; identical inputs give identical bytes.
Json to_json(const Analysis& a, const std::string& canonical_dataset,
             const std::string& canonical_certificates);
std::string summary_csv(const Analysis& a);

std::string sha256_hex(const std::string& data);

}  // namespace gamma4::report
