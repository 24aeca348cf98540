#include "cyclotoric/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace cyclo {

const char* kind_name(FindingKind k) {
  switch (k) {
    case FindingKind::theorem_oracle_discrepancy: return "theorem_oracle_discrepancy";
    case FindingKind::witness_verification_failure: return "witness_verification_failure";
    case FindingKind::conjecture45_unknown_instance: return "conjecture45_unknown_instance";
    case FindingKind::conjecture48_ci_instance: return "conjecture48_ci_instance";
  }
  return "unknown";
}

RingSelection parse_rings(const std::string& text) {
  if (text == "kp") return {true, false};
  if (text == "kq") return {false, true};
  if (text == "both") return {true, true};
  throw ValidationError("ring must be kp, kq or both, got '" + text + "'");
}

InstanceRecord classify_instance(const CycloParams& p, const ClassifyOptions& options) {
  InstanceRecord rec{p, false, {}, std::nullopt, std::nullopt, {}};
  if (options.rings.kp) {
    KpOptions kp_options;
    kp_options.oracle = options.oracle;
    kp_options.max_degree = options.max_degree;
    kp_options.budget = options.budget;
    rec.kp = classify_kp(p, kp_options);
  }
  if (options.rings.kq) rec.kq = classify_kq(p, options.oracle, options.max_degree, options.budget);
  rec.findings = derive_findings(p, rec.kp, rec.kq);
  return rec;
}

std::vector<Finding> derive_findings(const CycloParams& instance, const std::optional<RingReportKP>& kp,
                                     const std::optional<RingReportKQ>& kq) {
  std::vector<Finding> out;
  const CycloParams p = canonical_form(instance);
  if (kp) {
    if (kp->discrepancy) {
      Json ev;
      ev["ring"] = "kp";
      ev["gorenstein_theorem"] = kp->gorenstein_theorem;
      ev["gorenstein_oracle"] = status_name(kp->gorenstein_oracle.status);
      if (kp->gorenstein_oracle.generator) ev["generator"] = vec_json(*kp->gorenstein_oracle.generator);
      ev["h_star"] = vec_json(kp->h_star.h);
      out.push_back({FindingKind::theorem_oracle_discrepancy, p, *kp->discrepancy, ev});
    }
    if (kp->witnesses && !kp->witnesses->all_verified()) {
      Json ev;
      ev["branch"] = kp->witnesses->branch;
      Json pts = Json::array();
      for (const auto& x : kp->witnesses->points_moment) pts.push_back(vec_json(x));
      ev["points"] = pts;
      out.push_back({FindingKind::witness_verification_failure, p,
                     "Gorenstein witness points are not all strictly interior", ev});
    }
    if (!kp->r1) {
      Json ev;
      ev["failures"] = kp->r1_failures;
      out.push_back({FindingKind::witness_verification_failure, p, "(R1) certificate failed", ev});
    }
  }
  if (kq) {
    if (kq->discrepancy) {
      Json ev;
      ev["ring"] = "kq";
      ev["case"] = case_name(kq->kq_case);
      ev["normal"] = tri_name(kq->normal);
      out.push_back({FindingKind::theorem_oracle_discrepancy, p, *kq->discrepancy, ev});
    }
    const bool general = p.d() >= 2 && p.n() >= p.d() + 3;
    if (general && kq->normal == Tri::unknown) {
      Json ev;
      ev["divisibility_test"] = "silent";
      ev["bruteforce"] = kq->bruteforce ? tri_name(kq->bruteforce->normal) : "not_run";
      out.push_back({FindingKind::conjecture45_unknown_instance, p,
                     "K[Q] normality undecided: divisibility test silent and no brute-force verdict", ev});
    }
    if (general && kq->normal == Tri::yes) {
      // A normal affine semigroup ring is Cohen-Macaulay.
      Json ev;
      ev["evidence"] = evidence_name(kq->evidence);
      out.push_back({FindingKind::conjecture48_ci_instance, p,
                     "K[Q] is normal, hence Cohen-Macaulay, with d >= 2 and n >= d+3", ev});
    }
  }
  return out;
}

Json int_json(const Int& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(int_json(z));
  return a;
}

Json params_json(const CycloParams& p) {
  Json j;
  j["d"] = p.d();
  j["n"] = p.n();
  j["tau"] = vec_json(p.tau());
  j["gaps"] = vec_json(p.gaps());
  return j;
}

namespace {

Json optional_vec(const std::optional<IntVec>& v) { return v ? vec_json(*v) : Json(nullptr); }

Json optional_str(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json index_json(const IndexSet& s) { return Json(s); }

}  // namespace

Json to_json(const RingReportKP& r) {
  Json j;
  j["normal"] = r.normal;
  j["nonnormal_witness"] = optional_vec(r.nonnormal_witness);
  j["cohen_macaulay"] = r.cohen_macaulay;
  j["s2"] = r.s2;
  j["r1"] = r.r1;
  j["seminormal"] = r.seminormal;
  j["gorenstein_theorem"] = r.gorenstein_theorem;
  Json o;
  o["status"] = status_name(r.gorenstein_oracle.status);
  o["generator"] = optional_vec(r.gorenstein_oracle.generator);
  o["reason"] = r.gorenstein_oracle.reason;
  o["h_star_palindromic"] =
      r.gorenstein_oracle.h_star_palindromic ? Json(*r.gorenstein_oracle.h_star_palindromic) : Json(nullptr);
  j["gorenstein_oracle"] = o;
  if (r.witnesses) {
    const auto& w = *r.witnesses;
    Json wj;
    wj["branch"] = w.branch;
    wj["subset"] = index_json(w.subset);
    wj["reversed"] = w.reversed;
    wj["oracle_needed"] = w.oracle_needed;
    Json pts = Json::array();
    for (const auto& x : w.points_moment) pts.push_back(vec_json(x));
    wj["points"] = pts;
    wj["verified"] = w.all_verified();
    j["gorenstein_witnesses"] = wj;
  } else {
    j["gorenstein_witnesses"] = nullptr;
  }
  j["discrepancy"] = optional_str(r.discrepancy);
  j["h_star"] = vec_json(r.h_star.h);
  j["interior_k1"] = int_json(r.interior_k1);
  j["max_degree"] = r.max_degree;
  return j;
}

Json to_json(const RingReportKQ& r) {
  Json j;
  j["case"] = case_name(r.kq_case);
  j["normal"] = tri_name(r.normal);
  j["complete_intersection"] = r.complete_intersection;
  j["evidence"] = evidence_name(r.evidence);
  if (r.divisibility_index) j["divisibility_index"] = *r.divisibility_index;
  if (r.bruteforce && r.bruteforce->witness) j["bruteforce_witness"] = vec_json(*r.bruteforce->witness);
  if (r.kernel) {
    const auto& k = *r.kernel;
    j["kernel"] = vec_json(k.c);
    Json kb;
    kb["u_support"] = index_json(k.u_support);
    kb["v_support"] = index_json(k.v_support);
    kb["u_exponents"] = vec_json(k.u_exponents);
    kb["v_exponents"] = vec_json(k.v_exponents);
    kb["u_squarefree"] = k.u_squarefree;
    kb["v_squarefree"] = k.v_squarefree;
    kb["degree"] = int_json(k.degree);
    j["kernel_binomial"] = kb;
  } else {
    j["kernel"] = nullptr;
  }
  if (r.bruteforce) {
    Json b;
    b["normal"] = tri_name(r.bruteforce->normal);
    b["degrees_completed"] = r.bruteforce->degrees_completed;
    if (!r.bruteforce->note.empty()) b["note"] = r.bruteforce->note;
    j["bruteforce"] = b;
  }
  j["discrepancy"] = optional_str(r.discrepancy);
  return j;
}

Json to_json(const Finding& f) {
  Json j;
  j["kind"] = kind_name(f.kind);
  j["params"] = params_json(f.params);
  j["details"] = f.details;
  j["evidence"] = f.evidence.is_null() ? Json::object() : f.evidence;
  return j;
}

Json to_json(const InstanceRecord& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["params"] = params_json(r.params);
  j["status"] = r.skipped ? "skipped" : "ok";
  if (r.skipped) j["reason"] = r.skip_reason;
  if (r.kp) j["kp"] = to_json(*r.kp);
  if (r.kq) j["kq"] = to_json(*r.kq);
  Json fs = Json::array();
  for (const auto& f : r.findings) fs.push_back(to_json(f));
  j["findings"] = fs;
  return j;
}

void print_table(std::ostream& os, const InstanceRecord& r) {
  const auto& p = r.params;
  os << "d = " << p.d() << ", tau = " << to_string(p.tau()) << ", gaps = " << to_string(p.gaps()) << '\n';
  if (r.skipped) {
    os << "skipped: " << r.skip_reason << '\n';
    return;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (r.kp) {
    const auto& k = *r.kp;
    os << "K[P]\n";
    os << "  normal              " << yn(k.normal);
    if (k.nonnormal_witness) os << "  (gap " << to_string(*k.nonnormal_witness) << ")";
    os << '\n';
    os << "  Cohen-Macaulay      " << yn(k.cohen_macaulay) << '\n';
    os << "  (S2) / seminormal   " << yn(k.s2) << " / " << yn(k.seminormal) << '\n';
    os << "  (R1)                " << yn(k.r1) << '\n';
    os << "  h*                  " << to_string(k.h_star.h) << '\n';
    os << "  interior points     " << k.interior_k1 << '\n';
    os << "  Gorenstein (rule)   " << yn(k.gorenstein_theorem) << '\n';
    os << "  Gorenstein (oracle) " << status_name(k.gorenstein_oracle.status);
    if (k.gorenstein_oracle.generator) os << "  c = " << to_string(*k.gorenstein_oracle.generator);
    os << '\n';
    if (k.witnesses) {
      os << "  witness branch      " << k.witnesses->branch << '\n';
      for (const auto& x : k.witnesses->points_moment) os << "    point " << to_string(x) << '\n';
    }
    if (k.discrepancy) os << "  discrepancy         " << *k.discrepancy << '\n';
  }
  if (r.kq) {
    const auto& k = *r.kq;
    os << "K[Q]\n";
    os << "  case                " << case_name(k.kq_case) << '\n';
    os << "  normal              " << tri_name(k.normal) << '\n';
    os << "  evidence            " << evidence_name(k.evidence);
    if (k.divisibility_index) os << "  (s = " << *k.divisibility_index << ")";
    os << '\n';
    os << "  complete inters.    " << yn(k.complete_intersection) << '\n';
    if (k.kernel) os << "  kernel              " << to_string(k.kernel->c) << '\n';
    if (k.bruteforce && k.bruteforce->witness)
      os << "  brute-force gap     " << to_string(*k.bruteforce->witness) << '\n';
    if (k.discrepancy) os << "  discrepancy         " << *k.discrepancy << '\n';
  }
  for (const auto& f : r.findings) os << "finding: " << kind_name(f.kind) << ": " << f.details << '\n';
}

std::pair<int, int> parse_int_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ValidationError("malformed range '" + text + "'");
  }
}

namespace {

NBound parse_n_bound(const std::string& text) {
  NBound b;
  std::string t = text;
  if (t.rfind("d", 0) == 0) {
    b.relative = true;
    t = t.substr(1);
    if (t.empty()) return b;
    if (t[0] != '+') throw ValidationError("malformed n bound '" + text + "'");
    t = t.substr(1);
  }
  std::size_t used = 0;
  try {
    b.value = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed n bound '" + text + "'");
  }
  if (used != t.size()) throw ValidationError("malformed n bound '" + text + "'");
  return b;
}

}  // namespace

std::pair<NBound, NBound> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const NBound b = parse_n_bound(text);
    return {b, b};
  }
  return {parse_n_bound(text.substr(0, dots)), parse_n_bound(text.substr(dots + 2))};
}

void validate(const ScanSpec& spec) {
  if (spec.d_min < 1 || spec.d_min > spec.d_max) throw ValidationError("d range must be nonempty with d >= 1");
  if (spec.max_gap < 1) throw ValidationError("max_gap must be at least 1");
  if (!spec.options.rings.kp && !spec.options.rings.kq) throw ValidationError("no ring selected");
  bool any = false;
  for (int d = spec.d_min; d <= spec.d_max; ++d)
    if (spec.n_min.resolve(d) <= spec.n_max.resolve(d)) any = true;
  if (!any) throw ValidationError("n range is empty for every d");
}

std::vector<CycloParams> scan_instances(const ScanSpec& spec) {
  validate(spec);
  std::vector<CycloParams> out;
  for (int d = spec.d_min; d <= spec.d_max; ++d) {
    const int lo = std::max(spec.n_min.resolve(d), d + 1);
    const int hi = spec.n_max.resolve(d);
    for (int n = lo; n <= hi; ++n) {
      std::vector<Int> g(static_cast<std::size_t>(n - 1), 1);
      while (true) {
        const std::vector<Int> rev(g.rbegin(), g.rend());
        if (g <= rev) out.push_back(params_from_gaps(d, g));
        // odometer step, last coordinate fastest: lexicographic order
        int i = n - 2;
        while (i >= 0 && g[static_cast<std::size_t>(i)] == spec.max_gap) g[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++g[static_cast<std::size_t>(i)];
      }
    }
  }
  return out;
}

std::vector<InstanceRecord> run_scan(const ScanSpec& spec) {
  const std::vector<CycloParams> instances = scan_instances(spec);
  std::vector<std::optional<InstanceRecord>> slots(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size() && !failed; i = next++) {
      try {
        slots[i] = classify_instance(instances[i], spec.options);
      } catch (const BudgetExceeded& e) {
        InstanceRecord rec{instances[i], true, e.what(), std::nullopt, std::nullopt, {}};
        slots[i] = std::move(rec);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(instances.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<InstanceRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ScanSummary summarize(const std::vector<InstanceRecord>& records) {
  ScanSummary s;
  for (const auto& r : records) {
    ++s.instances;
    s.findings += r.findings.size();
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    if (r.kp) {
      s.kp_normal += r.kp->normal;
      s.kp_gorenstein_theorem += r.kp->gorenstein_theorem;
      s.kp_oracle_gorenstein += r.kp->gorenstein_oracle.status == GorensteinStatus::gorenstein;
    }
    if (r.kq) {
      switch (r.kq->normal) {
        case Tri::yes: ++s.kq_normal_yes; break;
        case Tri::no: ++s.kq_normal_no; break;
        case Tri::unknown: ++s.kq_normal_unknown; break;
      }
    }
  }
  return s;
}

void write_jsonl(std::ostream& os, const std::vector<InstanceRecord>& records) {
  for (const auto& r : records) os << to_json(r).dump() << '\n';
}

void write_findings(std::ostream& os, const std::vector<InstanceRecord>& records) {
  for (const auto& r : records)
    for (const auto& f : r.findings) os << to_json(f).dump() << '\n';
}

void write_csv(std::ostream& os, const std::vector<InstanceRecord>& records) {
  os << "d,n,gaps,normal,cm,gorenstein_theorem,gorenstein_oracle,kq_case,kq_normal,findings_count\n";
  for (const auto& r : records) {
    std::string gaps;
    for (const auto& g : r.params.gaps()) gaps += (gaps.empty() ? "" : " ") + g.get_str();
    os << r.params.d() << ',' << r.params.n() << ',' << gaps << ',';
    if (r.kp && !r.skipped) {
      os << (r.kp->normal ? "true" : "false") << ',' << (r.kp->cohen_macaulay ? "true" : "false") << ','
         << (r.kp->gorenstein_theorem ? "true" : "false") << ',' << status_name(r.kp->gorenstein_oracle.status);
    } else {
      os << ",,,";
    }
    os << ',';
    if (r.kq && !r.skipped) os << case_name(r.kq->kq_case) << ',' << tri_name(r.kq->normal);
    else os << ',';
    os << ',' << r.findings.size() << '\n';
  }
}

void print_summary(std::ostream& os, const ScanSummary& s) {
  os << "instances: " << s.instances << " (skipped " << s.skipped << ")\n"
     << "K[P] normal: " << s.kp_normal << ", Gorenstein by rule: " << s.kp_gorenstein_theorem
     << ", Gorenstein by oracle: " << s.kp_oracle_gorenstein << '\n'
     << "K[Q] normal yes/no/unknown: " << s.kq_normal_yes << '/' << s.kq_normal_no << '/' << s.kq_normal_unknown
     << '\n'
     << "findings: " << s.findings << '\n';
}

}  // namespace cyclo
