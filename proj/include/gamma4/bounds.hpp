#pragma once

// Interval bounds on the non-orientable 4-genus, with the rule trail that
// produced them.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamma4/knotio.hpp"
#include "gamma4/linkform.hpp"

namespace gamma4::bounds {

using knotio::BandMoveCertificate;
using knotio::Interval;
using knotio::KnotRecord;

class InconsistentDataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Reason {
  std::string rule;      // short id, e.g. "sig-arf"
  std::string citation;  // the inequality the rule applies
  std::string detail;    // knot-specific evidence
};

enum class Status { Determined, Undetermined, Inconsistent };
std::string to_string(Status s);

struct GammaBounds {
  int lower = 1;
  std::optional<int> upper;
  std::optional<int> gamma_bar_upper;  // bound on min(2 g4, gamma4)
  std::vector<Reason> reasons;

  Status status() const;
  /// Tightening helpers; each records its reason, even when nothing changes.
  void raise_lower(int v, Reason why);
  void cut_upper(int v, Reason why);
  void cut_gamma_bar(int v);
};

/// sigma + 4 Arf = 4 (mod 8). Throws std::invalid_argument for odd sigma or
/// Arf outside {0,1}.
bool sig_arf_obstruction(int sigma, int arf);

/// [max(g4, c4_lo), min(u_hi, us_hi, c4_hi)]; throws InconsistentDataError if empty.
Interval clasp_number(const KnotRecord& rec);

struct ClaspUpper {
  int gamma_upper = 0;
  int gamma_bar_upper = 0;
};
/// Requires c4 >= 1.
ClaspUpper upper_from_clasp(int c4, int g4);

/// min(floor(n/2), 2 g4 + 1, crosscap); 1 for slice knots.
int upper_misc(const KnotRecord& rec);

/// A linking-form verdict tagged with the rule that produced it.
struct RuleVerdict {
  std::string rule;  // "mobius-cyclic", "mobius-p2q", "definiteness", "klein"
  linkform::ObstructionVerdict verdict;
};

/// Certificate whose target has been resolved: either slice, or a known
/// upper bound on the target's gamma4.
struct ResolvedCertificate {
  BandMoveCertificate cert;
  bool target_slice = false;
  std::optional<int> target_gamma;
};

/// Throws InconsistentDataError when the target is unresolved.
GammaBounds apply_certificate(GammaBounds b, const ResolvedCertificate& rc);

struct Options {
  bool enable_klein = false;
};

GammaBounds classify(const KnotRecord& rec, const std::vector<RuleVerdict>& verdicts,
                     const std::vector<ResolvedCertificate>& certs, const Options& opt = {});

struct KnotInput {
  KnotRecord record;
  std::vector<RuleVerdict> verdicts;
};

struct ClassificationRun {
  std::map<std::string, GammaBounds> bounds;
  std::size_t passes = 0;
  /// Certificates whose source is not in the dataset.
  std::vector<BandMoveCertificate> unused;
  /// Knots whose data could not be classified (name, message).
  std::vector<std::pair<std::string, std::string>> errors;
};

/// Classifies every knot; certificates whose target is itself in the input
/// are resolved from the target's current upper bound, iterating until the
/// bounds stop changing.
ClassificationRun classify_all(const std::vector<KnotInput>& knots,
                               const std::vector<BandMoveCertificate>& certs, const Options& opt = {});

}  // namespace gamma4::bounds
