// nilred: construct the schemes, operators, and maps of the nilpotent
// matrix-scheme toolkit and run its exact verification suites.

#include <CLI11.hpp>
#include <iostream>

#include "nilred/checks.hpp"
#include "nilred/parse.hpp"

using namespace nilred;

namespace {

struct IdealArgs {
  std::string scheme;
  int n = 0, e = 0, blocks = 0, dim = 0;
  std::string type, chart, field = "Q", out, in;
  bool gb = false;
  double timeout_secs = 600;
  std::string file_text;  // body of --in when scheme == from-file
};

template <class K>
std::string build_ideal_text(const IdealArgs& a, const FieldSpec& f) {
  auto render = [&](const Ideal<K>& I) {
    if (!a.gb) return write_ideal_text(I.ring, I.gens);
    auto basis = groebner_basis(I, GroebnerOptions{a.timeout_secs});
    return write_ideal_text(basis.ring, basis.polys);
  };
  if (a.scheme == "from-file") {
    size_t nl = a.file_text.find('\n');
    auto [vars, spec] = parse_ring_header(a.file_text.substr(0, nl));
    RingPtr ring = make_ring(vars, spec);
    auto gens =
        parse_ideal_body<K>(nl == std::string::npos ? "" : a.file_text.substr(nl + 1), ring, 2);
    return render(make_ideal(ring, std::move(gens)));
  }
  if (a.scheme == "nilpotent") {
    if (a.n < 1 || a.e < 1) throw CLI::ValidationError("nilpotent needs --n and --e");
    return render(nilpotent_scheme_ideal<K>(NilpotentSchemeSpec(a.n, a.e), f));
  }
  if (a.scheme == "orbit-closure") {
    Partition sigma = a.type.empty() ? max_partition(a.n, a.e) : Partition::parse(a.type);
    return render(orbit_closure_ideal<K>(sigma, f));
  }
  if (a.scheme == "invariant-chart" || a.scheme == "shuffle-chart") {
    if (a.type.empty() || a.n < 1 || a.chart.empty())
      throw CLI::ValidationError(a.scheme + " needs --type, --n, and --chart");
    auto T = JordanOperator<K>::standard(Partition::parse(a.type), f);
    Partition rows = Partition::parse(a.chart);  // reused as an int-list parser
    IndexSet pivots(rows.parts().rbegin(), rows.parts().rend());
    std::sort(pivots.begin(), pivots.end());
    Chart chart(T.dim(), a.n, pivots);
    Ideal<K> I = a.scheme == "invariant-chart" ? invariant_chart_ideal(T, chart)
                                               : shuffle_chart_ideal(T, chart);
    return render(I);
  }
  if (a.scheme == "vee") {
    if (a.n < 1 || a.e < 1 || a.blocks < 1)
      throw CLI::ValidationError("vee needs --n, --e, and --blocks");
    auto T = JordanOperator<K>::standard(Partition::rectangle(a.e, a.blocks), f);
    return render(vee_scheme_ideal<K>(NilpotentSchemeSpec(a.n, a.e), T));
  }
  if (a.scheme == "plucker") {
    if (a.dim < 1 || a.n < 1) throw CLI::ValidationError("plucker needs --dim and --n");
    RingPtr pr = plucker_ring(a.dim, a.n, f);
    return write_ideal_text(pr, plucker_relations<K>(a.dim, a.n, pr));
  }
  throw CLI::ValidationError(
      "unknown scheme '" + a.scheme +
      "' (nilpotent|orbit-closure|invariant-chart|shuffle-chart|vee|plucker|from-file)");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for nilpotent matrix schemes"};
  app.require_subcommand(1);

  // --- list ---------------------------------------------------------------
  auto* list = app.add_subcommand("list", "list registered checks");

  // --- run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "run one check");
  std::string check_name, run_field, run_type, run_out;
  CheckParams params;
  int pn = 0, pe = 0, pa = 0, pb = 0, ptrials = 0, porder = 0, pdeg = 0;
  long long pseed = 0;
  double ptimeout = 600;
  run->add_option("check", check_name, "registered check name")->required();
  auto* on = run->add_option("--n", pn, "matrix size / grid parameter");
  auto* oe = run->add_option("--e", pe, "nilpotency order");
  auto* oa = run->add_option("--a", pa, "lattice parameter a");
  auto* ob = run->add_option("--b", pb, "lattice parameter b");
  auto* ofield = run->add_option("--field", run_field, "Q or Fp:<p>");
  auto* oseed = run->add_option("--seed", pseed, "deterministic seed (default 0)");
  auto* otrials = run->add_option("--trials", ptrials, "sample count");
  auto* otimeout = run->add_option("--timeout-secs", ptimeout, "groebner budget per call");
  auto* oorder = run->add_option("--order", porder, "series truncation order");
  auto* odeg = run->add_option("--deg", pdeg, "polynomial degree bound");
  auto* otype = run->add_option("--type", run_type, "Jordan type, e.g. 2,2");
  run->add_option("--out", run_out, "write the report as a JSON array");

  // --- suite ---------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "run a named suite");
  std::string suite_name, suite_out;
  long long suite_seed = 0;
  double suite_timeout = 600;
  suite->add_option("name", suite_name, "core|reducedness|surjectivity|laurent|all")->required();
  suite->add_option("--out", suite_out, "write the reports as a JSON array");
  suite->add_option("--seed", suite_seed, "deterministic seed (default 0)");
  suite->add_option("--timeout-secs", suite_timeout, "groebner budget per call");

  // --- ideal ----------------------------------------------------------------
  auto* ideal = app.add_subcommand("ideal", "print a constructed ideal in the ideal file format");
  IdealArgs ia;
  ideal->add_option("scheme", ia.scheme,
                    "nilpotent|orbit-closure|invariant-chart|shuffle-chart|vee|plucker")
      ->required();
  ideal->add_option("--n", ia.n, "matrix size / plane dimension");
  ideal->add_option("--e", ia.e, "nilpotency order");
  ideal->add_option("--blocks", ia.blocks, "Jordan block count of T");
  ideal->add_option("--dim", ia.dim, "ambient dimension N");
  ideal->add_option("--type", ia.type, "Jordan type, e.g. 2,2");
  ideal->add_option("--chart", ia.chart, "pivot rows, e.g. 1,3");
  ideal->add_option("--field", ia.field, "Q or Fp:<p> (default Q)");
  ideal->add_option("--in", ia.in, "ideal file to read (scheme from-file)");
  ideal->add_flag("--gb", ia.gb, "print the reduced Groebner basis instead of the generators");
  ideal->add_option("--timeout-secs", ia.timeout_secs, "groebner budget when --gb is set");
  ideal->add_option("--out", ia.out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (auto& d : check_registry()) {
        std::string ps;
        for (auto& k : d.allowed) ps += (ps.empty() ? "" : ", ") + k;
        std::cout << d.name << "\n    " << d.description << "\n    parameters: " << ps << "\n";
      }
      return 0;
    }
    if (*run) {
      if (on->count()) { params.n = pn; params.provided.insert("n"); }
      if (oe->count()) { params.e = pe; params.provided.insert("e"); }
      if (oa->count()) { params.a = pa; params.provided.insert("a"); }
      if (ob->count()) { params.b = pb; params.provided.insert("b"); }
      if (otrials->count()) { params.trials = ptrials; params.provided.insert("trials"); }
      if (oorder->count()) { params.order = porder; params.provided.insert("order"); }
      if (odeg->count()) { params.deg = pdeg; params.provided.insert("deg"); }
      if (otype->count()) { params.type = Partition::parse(run_type); params.provided.insert("type"); }
      if (ofield->count()) { params.field = FieldSpec::parse(run_field); params.provided.insert("field"); }
      if (oseed->count()) { params.provided.insert("seed"); }
      if (otimeout->count()) { params.provided.insert("timeout_secs"); }
      params.seed = static_cast<uint64_t>(pseed);
      params.timeout_secs = ptimeout;
      Report r = run_check(check_name, params);
      std::cout << report_line(r) << "\n";
      if (!run_out.empty()) emit_reports({r}, run_out);
      return r.status == CheckStatus::fail ? 1 : 0;
    }
    if (*suite) {
      auto reports = run_suite(suite_name, static_cast<uint64_t>(suite_seed), suite_timeout);
      int npass = 0, nfail = 0, ntimeout = 0, ninc = 0;
      for (auto& r : reports) {
        std::cout << report_line(r) << "\n";
        switch (r.status) {
          case CheckStatus::pass: ++npass; break;
          case CheckStatus::fail: ++nfail; break;
          case CheckStatus::timeout: ++ntimeout; break;
          case CheckStatus::inconclusive: ++ninc; break;
        }
      }
      std::cout << reports.size() << " checks: " << npass << " pass, " << nfail << " fail, "
                << ntimeout << " timeout, " << ninc << " inconclusive\n";
      if (!suite_out.empty()) emit_reports(reports, suite_out);
      return nfail ? 1 : 0;
    }
    if (*ideal) {
      FieldSpec f = FieldSpec::parse(ia.field);
      if (ia.scheme == "from-file") {
        if (ia.in.empty()) throw CLI::ValidationError("from-file needs --in");
        std::ifstream src(ia.in);
        if (!src) throw std::runtime_error("cannot open '" + ia.in + "'");
        ia.file_text.assign(std::istreambuf_iterator<char>(src), std::istreambuf_iterator<char>());
        f = parse_ring_header(ia.file_text.substr(0, ia.file_text.find('\n'))).second;
      }
      std::string text = with_field(f, [&]<class K>() { return build_ideal_text<K>(ia, f); });
      write_output(text, ia.out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
