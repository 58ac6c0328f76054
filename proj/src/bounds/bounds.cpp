#include "gamma4/bounds.hpp"

#include <algorithm>

namespace gamma4::bounds {

namespace {

const char* kSigArf = "sigma + 4 Arf = 4 (mod 8) implies gamma4 >= 2";
const char* kMobius = "an obstructed Mobius-band test implies gamma4 >= 2";
const char* kKlein = "an obstructed Klein-bottle test excludes gamma4 = 2";
const char* kCrossing = "gamma4 <= floor(n/2)";
const char* kGenus = "gamma4 <= 2 g4 + 1";
const char* kCrosscap = "gamma4 <= crosscap number";
const char* kSlice = "slice knots have gamma4 = 1";
const char* kClasp = "exact clasp number c4 bounds gamma4 and Gamma4";
const char* kBand = "band move K -> K' gives gamma4(K) <= gamma4(K') + 1, and 1 for slice K'";

std::string str(int v) { return std::to_string(v); }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Determined:
      return "Determined";
    case Status::Undetermined:
      return "Undetermined";
    case Status::Inconsistent:
      break;
  }
  return "Inconsistent";
}

Status GammaBounds::status() const {
  if (upper && *upper < lower) return Status::Inconsistent;
  if (upper && *upper == lower) return Status::Determined;
  return Status::Undetermined;
}

void GammaBounds::raise_lower(int v, Reason why) {
  lower = std::max(lower, v);
  reasons.push_back(std::move(why));
}

void GammaBounds::cut_upper(int v, Reason why) {
  upper = upper ? std::min(*upper, v) : v;
  reasons.push_back(std::move(why));
  cut_gamma_bar(*upper);
}

void GammaBounds::cut_gamma_bar(int v) { gamma_bar_upper = gamma_bar_upper ? std::min(*gamma_bar_upper, v) : v; }

bool sig_arf_obstruction(int sigma, int arf) {
  if (sigma % 2 != 0) throw std::invalid_argument("signature must be even");
  if (arf != 0 && arf != 1) throw std::invalid_argument("Arf invariant must be 0 or 1");
  return (((sigma + 4 * arf) % 8) + 8) % 8 == 4;
}

Interval clasp_number(const KnotRecord& rec) {
  Interval c{rec.g4, rec.u.hi};
  if (rec.us) c.hi = std::min(c.hi, rec.us->hi);
  if (rec.c4) {
    c.lo = std::max(c.lo, rec.c4->lo);
    c.hi = std::min(c.hi, rec.c4->hi);
  }
  if (c.empty())
    throw InconsistentDataError(rec.name + ": clasp number range [" + str(c.lo) + "," + str(c.hi) +
                                "] is empty");
  return c;
}

ClaspUpper upper_from_clasp(int c4, int g4) {
  if (c4 < 1) throw std::invalid_argument("clasp bound needs c4 >= 1");
  ClaspUpper r;
  const bool even = c4 % 2 == 0;
  r.gamma_bar_upper = even ? c4 : c4 + 1;
  r.gamma_upper = (even && c4 != 2) ? c4 : c4 + 1;
  if (g4 == c4) r.gamma_upper = std::min(r.gamma_upper, r.gamma_bar_upper);
  return r;
}

int upper_misc(const KnotRecord& rec) {
  if (rec.slice) return 1;
  if (rec.g4 == 0) throw InconsistentDataError(rec.name + ": g4 = 0 but the knot is not marked slice");
  int v = std::min(rec.crossings / 2, 2 * rec.g4 + 1);
  if (rec.crosscap_hi) v = std::min(v, *rec.crosscap_hi);
  return v;
}

GammaBounds apply_certificate(GammaBounds b, const ResolvedCertificate& rc) {
  const auto& c = rc.cert;
  std::string move = c.source + " -(" + str(c.h) + ")-> " + c.target;
  if (!c.figure_ref.empty()) move += " [" + c.figure_ref + "]";
  if (rc.target_slice) {
    b.cut_upper(1, {"band-move", kBand, move + ", target slice"});
    return b;
  }
  if (!rc.target_gamma)
    throw InconsistentDataError("certificate " + move + ": target gamma4 unresolved");
  b.cut_upper(*rc.target_gamma + 1, {"band-move", kBand, move + ", gamma4(target) <= " + str(*rc.target_gamma)});
  return b;
}

GammaBounds classify(const KnotRecord& rec, const std::vector<RuleVerdict>& verdicts,
                     const std::vector<ResolvedCertificate>& certs, const Options& opt) {
  GammaBounds b;

  // Lower bounds.
  if (sig_arf_obstruction(rec.signature, rec.arf))
    b.raise_lower(2, {"sig-arf", kSigArf,
                      "sigma = " + str(rec.signature) + ", Arf = " + str(rec.arf)});
  for (const auto& rv : verdicts)
    if (rv.rule != "klein" && rv.verdict.obstructed())
      b.raise_lower(2, {rv.rule, kMobius, rv.verdict.detail});
  if (opt.enable_klein && b.lower >= 2)
    for (const auto& rv : verdicts)
      if (rv.rule == "klein" && rv.verdict.obstructed()) b.raise_lower(3, {rv.rule, kKlein, rv.verdict.detail});

  // Upper bounds.
  b.cut_gamma_bar(2 * rec.g4);
  if (rec.slice) {
    b.cut_upper(1, {"slice", kSlice, "ingested slice flag"});
  } else {
    upper_misc(rec);  // rejects g4 = 0 without the slice flag
    b.cut_upper(rec.crossings / 2, {"crossing-bound", kCrossing, "n = " + str(rec.crossings)});
    b.cut_upper(2 * rec.g4 + 1, {"genus-bound", kGenus, "g4 = " + str(rec.g4)});
    if (rec.crosscap_hi)
      b.cut_upper(*rec.crosscap_hi, {"crosscap-bound", kCrosscap, "crosscap <= " + str(*rec.crosscap_hi)});
  }

  Interval c4 = clasp_number(rec);
  if (c4.exact() && c4.lo >= 1) {
    ClaspUpper cu = upper_from_clasp(c4.lo, rec.g4);
    b.cut_upper(cu.gamma_upper, {"clasp", kClasp,
                                 "c4 = " + str(c4.lo) + ", g4 = " + str(rec.g4) + ": gamma4 <= " +
                                     str(cu.gamma_upper) + ", Gamma4 <= " + str(cu.gamma_bar_upper)});
    b.cut_gamma_bar(cu.gamma_bar_upper);
  }

  for (const auto& rc : certs)
    if (rc.cert.source == rec.name) b = apply_certificate(std::move(b), rc);
  return b;
}

ClassificationRun classify_all(const std::vector<KnotInput>& knots,
                               const std::vector<BandMoveCertificate>& certs, const Options& opt) {
  ClassificationRun run;
  std::map<std::string, const KnotInput*> by_name;
  for (const auto& k : knots) by_name[k.record.name] = &k;
  for (const auto& c : certs)
    if (!by_name.count(c.source)) run.unused.push_back(c);

  // Certificates grouped by source.
  std::map<std::string, std::vector<const BandMoveCertificate*>> outgoing;
  for (const auto& c : certs)
    if (by_name.count(c.source)) outgoing[c.source].push_back(&c);

  std::map<std::string, GammaBounds> prev;
  for (;;) {
    ++run.passes;
    std::map<std::string, GammaBounds> cur;
    for (const auto& k : knots) {
      std::vector<ResolvedCertificate> resolved;
      for (const BandMoveCertificate* c : outgoing[k.record.name]) {
        ResolvedCertificate rc{*c, false, std::nullopt};
        auto t = by_name.find(c->target);
        if (t == by_name.end()) {
          rc.target_slice = c->target_gamma4.slice;
          if (!rc.target_slice) rc.target_gamma = c->target_gamma4.value;
        } else if (t->second->record.slice) {
          rc.target_slice = true;
        } else {
          auto p = prev.find(c->target);
          if (p == prev.end() || !p->second.upper) continue;  // resolved in a later pass
          rc.target_gamma = *p->second.upper;
        }
        resolved.push_back(std::move(rc));
      }
      try {
        cur[k.record.name] = classify(k.record, k.verdicts, resolved, opt);
      } catch (const InconsistentDataError& e) {
        if (run.passes == 1) run.errors.emplace_back(k.record.name, e.what());
      }
    }
    bool stable = cur.size() == prev.size() &&
                  std::all_of(cur.begin(), cur.end(), [&](const auto& kv) {
                    auto it = prev.find(kv.first);
                    if (it == prev.end()) return false;
                    const auto& p = it->second;
                    return p.lower == kv.second.lower && p.upper == kv.second.upper &&
                           p.reasons.size() == kv.second.reasons.size();
                  });
    prev = std::move(cur);
    if (stable || run.passes > knots.size() + 1) break;
  }
  run.bounds = std::move(prev);
  return run;
}

}  // namespace gamma4::bounds
