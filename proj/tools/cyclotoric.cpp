// Command-line front end: classify single instances, scan parameter
// families, and print witnesses and intermediate objects.

#include "cyclotoric/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cyclo;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::vector<Int> parse_tau(const std::string& text) {
  std::vector<Int> tau;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) tau.push_back(parse_int(item));
  if (tau.empty()) throw ValidationError("empty tau list");
  return tau;
}

IndexSet parse_indices(const std::string& text) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Int z = parse_int(item);
    if (!z.fits_sint_p()) throw ValidationError("index out of range: " + item);
    out.push_back(static_cast<int>(z.get_si()));
  }
  return out;
}

struct Instance {
  int d = 0;
  std::string tau;
  CycloParams params() const { return build_params(d, parse_tau(tau)); }
};

void add_instance_options(CLI::App* cmd, Instance& inst) {
  cmd->add_option("--d", inst.d, "dimension")->required();
  cmd->add_option("--tau", inst.tau, "comma-separated strictly increasing integers")->required();
}

std::uint64_t budget_or_default(const std::optional<std::uint64_t>& b) { return b.value_or(default_budget()); }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_r1(const R1Witness& w, const CycloParams& p) {
  const SupportForm sigma = support_form(w.facet, p);
  std::cout << "facet " << to_string(IntVec(w.facet.begin(), w.facet.end())) << ", apex " << w.apex << '\n'
            << "  parity subset " << to_string(IntVec(w.parity_subset.begin(), w.parity_subset.end())) << '\n'
            << "  support form  " << to_string(sigma.normal) << '\n'
            << "  x = " << to_string(w.x) << ", sigma = " << w.sigma << ", in_cone = " << (w.in_cone() ? "true" : "false")
            << '\n'
            << "  " << verdict(w.ok()) << '\n';
}

int run_witness_r1(const Instance& inst, const std::string& facet_text, std::optional<int> apex) {
  const CycloParams p = inst.params();
  const IndexSet w = normalize_subset(parse_indices(facet_text), p.n());
  if (static_cast<int>(w.size()) != p.d() || face_type(w, p.n()).s != 0)
    throw ValidationError("not a facet: " + facet_text);
  bool all = true;
  if (apex) {
    const R1Witness r = r1_witness(w, *apex, p);
    print_r1(r, p);
    all = r.ok();
  } else {
    for (int a = 1; a <= p.n(); ++a) {
      if (std::binary_search(w.begin(), w.end(), a)) continue;
      const R1Witness r = r1_witness(w, a, p);
      print_r1(r, p);
      all = all && r.ok();
    }
  }
  const FacetChainBasis chain = facet_chain_basis(w, p);
  std::cout << "facet lattice index " << chain.lattice_index << "  " << verdict(chain.lattice_index == 1) << '\n';
  return 0;
}

int run_witness_gorenstein(const Instance& inst) {
  const CycloParams p = inst.params();
  const GorensteinWitnesses w = gorenstein_witnesses(p);
  std::cout << "branch " << w.branch << '\n';
  if (w.oracle_needed) {
    std::cout << "no explicit points for this branch; run classify --oracle\n";
    return 0;
  }
  std::cout << "sub-simplex indices " << to_string(IntVec(w.subset.begin(), w.subset.end()))
            << (w.reversed ? " (reverse-negated)" : "") << ", parameters " << to_string(w.sub_tau) << '\n';
  const CycloParams sub(p.d(), w.sub_tau);
  const auto halfspaces = simplex_halfspaces(sub);
  const auto facet_planes = facet_hyperplanes(p, Frame::moment);
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    std::cout << "point " << to_string(w.points[i]) << " (moment " << to_string(w.points_moment[i]) << ")\n";
    std::cout << "  simplex slacks";
    for (const auto& h : halfspaces) std::cout << ' ' << h.slack(w.points[i], Frame::transformed);
    std::cout << "  " << verdict(w.interior_in_simplex[i]) << '\n';
    std::cout << "  facet slacks  ";
    for (const auto& h : facet_planes) std::cout << ' ' << h.slack(w.points_moment[i], Frame::moment);
    std::cout << "  " << verdict(w.interior_in_polytope[i]) << '\n';
  }
  std::cout << verdict(w.all_verified()) << '\n';
  return 0;
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  body(out);
  if (!out) throw ValidationError("error writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric rings of integral cyclic polytopes"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> budget;
  app.add_option("--budget", budget, "candidate-point cap per enumeration (default: CYCLOTORIC_BUDGET or 1e8)");

  // classify
  Instance ci;
  std::string ring = "both";
  bool oracle = false, as_json = false;
  std::optional<int> max_degree;
  auto* classify = app.add_subcommand("classify", "classify K[P] and K[Q] of one instance");
  add_instance_options(classify, ci);
  classify->add_option("--ring", ring, "kp, kq or both");
  classify->add_flag("--oracle", oracle, "run the Gorenstein oracle and the K[Q] brute force");
  classify->add_option("--max-degree", max_degree, "degree bound for normality searches");
  classify->add_flag("--json", as_json, "print one JSON object");

  // scan
  std::string d_range = "1..1", n_range = "d+1..d+1", scan_ring = "both";
  std::string output, findings_path, csv_path;
  int max_gap = 1;
  unsigned threads = 0;
  bool scan_oracle = false;
  std::optional<int> scan_max_degree;
  auto* scan = app.add_subcommand("scan", "classify every canonical instance of a family");
  scan->add_option("--d", d_range, "d range, e.g. 2..4")->required();
  scan->add_option("--n", n_range, "n range, absolute or d+k bounds, e.g. d+1..d+3");
  scan->add_option("--max-gap", max_gap, "largest gap")->required();
  scan->add_option("--ring", scan_ring, "kp, kq or both");
  scan->add_flag("--oracle", scan_oracle, "run the Gorenstein oracle and the K[Q] brute force");
  scan->add_option("--max-degree", scan_max_degree, "degree bound for normality searches");
  scan->add_option("--threads", threads, "worker threads (default: hardware concurrency)");
  scan->add_option("--output", output, "JSONL output path (default: stdout)");
  scan->add_option("--findings", findings_path, "findings JSONL path");
  scan->add_option("--csv", csv_path, "CSV summary path");

  // witness
  auto* witness = app.add_subcommand("witness", "construct and verify witnesses");
  witness->require_subcommand(1);
  Instance wr, wg;
  std::string facet_text;
  std::optional<int> apex;
  auto* r1 = witness->add_subcommand("r1", "height-one point over a facet");
  add_instance_options(r1, wr);
  r1->add_option("--facet", facet_text, "facet indices, comma-separated")->required();
  r1->add_option("--apex", apex, "vertex outside the facet (default: all)");
  auto* gor = witness->add_subcommand("gorenstein", "interior points ruling out Gorensteinness");
  add_instance_options(gor, wg);

  // printers
  Instance fi, bi, ki, hi, pi;
  std::string frame = "moment", set_text;
  auto* facets_cmd = app.add_subcommand("facets", "list facets and their hyperplanes");
  add_instance_options(facets_cmd, fi);
  facets_cmd->add_option("--frame", frame, "moment or transformed");
  auto* bvec_cmd = app.add_subcommand("bvec", "print b_S");
  add_instance_options(bvec_cmd, bi);
  bvec_cmd->add_option("--set", set_text, "index set S, comma-separated")->required();
  auto* kernel_cmd = app.add_subcommand("kernel", "kernel binomial for n = d+2");
  add_instance_options(kernel_cmd, ki);
  auto* hstar_cmd = app.add_subcommand("hstar", "Ehrhart counts and h*-vector");
  add_instance_options(hstar_cmd, hi);
  std::string k_text = "1";
  bool interior = false;
  auto* points_cmd = app.add_subcommand("points", "lattice points of degree k");
  add_instance_options(points_cmd, pi);
  points_cmd->add_option("--k", k_text, "degree");
  points_cmd->add_flag("--interior", interior, "interior points only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*classify) {
      ClassifyOptions opts;
      opts.rings = parse_rings(ring);
      opts.oracle = oracle;
      opts.max_degree = max_degree;
      opts.budget = budget_or_default(budget);
      const InstanceRecord rec = classify_instance(ci.params(), opts);
      if (as_json) std::cout << to_json(rec).dump(2) << '\n';
      else print_table(std::cout, rec);
    } else if (*scan) {
      ScanSpec spec;
      std::tie(spec.d_min, spec.d_max) = parse_int_range(d_range);
      std::tie(spec.n_min, spec.n_max) = parse_n_range(n_range);
      spec.max_gap = max_gap;
      spec.options.rings = parse_rings(scan_ring);
      spec.options.oracle = scan_oracle;
      spec.options.max_degree = scan_max_degree;
      spec.options.budget = budget_or_default(budget);
      spec.threads = threads;
      validate(spec);
      const auto records = run_scan(spec);
      write_to(output, [&](std::ostream& os) { write_jsonl(os, records); });
      if (!findings_path.empty()) write_to(findings_path, [&](std::ostream& os) { write_findings(os, records); });
      if (!csv_path.empty()) write_to(csv_path, [&](std::ostream& os) { write_csv(os, records); });
      print_summary(std::cerr, summarize(records));
    } else if (*r1) {
      return run_witness_r1(wr, facet_text, apex);
    } else if (*gor) {
      return run_witness_gorenstein(wg);
    } else if (*facets_cmd) {
      const CycloParams p = fi.params();
      const Frame f = frame == "moment" ? Frame::moment
                      : frame == "transformed" ? Frame::transformed
                                               : throw ValidationError("frame must be moment or transformed");
      for (const auto& h : facet_hyperplanes(p, f))
        std::cout << to_string(IntVec(h.facet_indices().begin(), h.facet_indices().end())) << "  normal "
                  << to_string(h.normal()) << " >= 0\n";
    } else if (*bvec_cmd) {
      const CycloParams p = bi.params();
      const BVector b = bvec(normalize_subset(parse_indices(set_text), p.n()), p);
      std::cout << to_string(b.value) << '\n';
    } else if (*kernel_cmd) {
      const KernelBinomial k = kernel_binomial(ki.params());
      std::cout << "c = " << to_string(k.c) << '\n'
                << "u support " << to_string(IntVec(k.u_support.begin(), k.u_support.end())) << " exponents "
                << to_string(k.u_exponents) << (k.u_squarefree ? " squarefree" : "") << '\n'
                << "v support " << to_string(IntVec(k.v_support.begin(), k.v_support.end())) << " exponents "
                << to_string(k.v_exponents) << (k.v_squarefree ? " squarefree" : "") << '\n'
                << "degree " << k.degree << '\n';
    } else if (*hstar_cmd) {
      const CycloParams p = hi.params();
      const auto counts = ehrhart_counts(p, p.d(), budget_or_default(budget));
      std::cout << "L(0.." << p.d() << ") = " << to_string(counts) << '\n'
                << "h* = " << to_string(h_star_from_counts(counts, p.d()).h) << '\n';
    } else if (*points_cmd) {
      const CycloParams p = pi.params();
      for (const auto& z : enumerate_points(p, parse_int(k_text), interior, Frame::transformed,
                                            budget_or_default(budget)))
        std::cout << to_string(z) << '\n';
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
