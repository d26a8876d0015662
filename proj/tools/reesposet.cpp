#include "reesposet/csigma.hpp"
#include "reesposet/derange.hpp"
#include "reesposet/flag_weights.hpp"
#include "reesposet/labeling.hpp"
#include "reesposet/poset_json.hpp"
#include "reesposet/rees.hpp"
#include "reesposet/skew_hooks.hpp"
#include "reesposet/verify.hpp"
#include "reesposet/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace reesposet;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string out;
  int max_n = -1;
  bool slow = false;
  std::string method;
};

Json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

GradedPoset load_poset(const std::string& ref) {
  if (ref.rfind("zoo:", 0) == 0) return zoo_poset(ref);
  Json j;
  try {
    if (ref == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(ref);
      if (!in) throw UsageError("cannot open " + ref);
      j = Json::parse(in);
    }
  } catch (const Json::exception& e) {
    throw UsageError("invalid poset JSON in " + ref + ": " + e.what());
  }
  return poset_from_json(j);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("--format " + o.format + " is not supported by this command");
}

void require_range(const char* what, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw UsageError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

/// Text for a list of reports, or the JSON document; returns whether all passed.
bool emit_reports(std::ostream& os, const Options& o, const std::string& name, const std::vector<Report>& reports) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    os << Json{{"suite", name}, {"passed", ok}, {"reports", arr}}.dump(2) << "\n";
  } else {
    require_format(o, {"text"});
    for (const auto& r : reports) os << report_to_text(r);
    os << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok;
}

void emit_value(std::ostream& os, const Options& o, const std::string& key, const Integer& v) {
  if (o.format == "json")
    os << Json{{key, int_json(v)}}.dump() << "\n";
  else if (o.format == "csv")
    os << key << "\n" << v << "\n";
  else
    os << v << "\n";
}

Integer mobius_by_method(const GradedPoset& p, const std::string& method) {
  require_bounded(p, "mobius");
  const ElementId lo = *p.bottom(), hi = *p.top();
  if (method.empty() || method == "oracle") return p.mobius(lo, hi);
  if (method == "zeta") return mobius_by_zeta_inversion(p, lo, hi);
  if (method == "chains") return mobius_by_chain_count(p, lo, hi);
  throw UsageError("unknown --method " + method + " (oracle, zeta, chains; compositions/closed/formula need --rees-chain on a cube)");
}

class Timer {
 public:
  Timer(bool slow, std::string budget) : slow_(slow), budget_(std::move(budget)) {}
  ~Timer() {
    if (!slow_) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s;
    std::cerr << "slow tier: " << os.str() << " s elapsed (budget " << budget_ << ")\n";
  }

 private:
  bool slow_;
  std::string budget_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees products of posets, Mobius functions, falling chains, derangement bijections and homology checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out, "Write output to FILE instead of stdout");
  app.add_flag("--slow", o.slow, "Enable the slow tier");

  std::ostringstream os;
  int status = 0;

  // zoo
  auto* zoo = app.add_subcommand("zoo", "Emit a zoo poset as JSON");
  std::string zoo_family;
  std::vector<int> zoo_args;
  zoo->add_option("family", zoo_family, "chain, tree, boolean, cube, crosspoly, asym")->required();
  zoo->add_option("params", zoo_args, "Family parameters (tree takes t n)");
  zoo->callback([&] {
    std::string ref = "zoo:" + zoo_family;
    for (int a : zoo_args) ref += ":" + std::to_string(a);
    require_format(o, {"text", "json"});
    os << poset_to_json(zoo_poset(ref)).dump() << "\n";
  });

  // rees
  auto* rees = app.add_subcommand("rees", "Rees(P, Q) as poset JSON");
  std::string rees_p, rees_q;
  bool rees_minus_flag = false;
  rees->add_option("P", rees_p, "Poset reference (zoo:..., file, -)")->required();
  rees->add_option("Q", rees_q, "Poset reference")->required();
  rees->add_flag("--minus", rees_minus_flag, "Remove the top of P first");
  rees->callback([&] {
    require_format(o, {"text", "json"});
    auto p = load_poset(rees_p);
    auto q = load_poset(rees_q);
    os << poset_to_json(rees_minus_flag ? rees_minus(p, q) : rees_bounded(p, q)).dump() << "\n";
  });

  // mobius
  auto* mob = app.add_subcommand("mobius", "Mobius value mu(0^, 1^) of a bounded poset");
  std::string mob_ref, mob_poset;
  int rees_chain = 0;
  mob->add_option("P", mob_ref, "Poset reference (zoo:..., file, -)");
  mob->add_option("--poset", mob_poset, "Poset reference");
  mob->add_option("--rees-chain", rees_chain, "Take Rees(P, C_k) first");
  mob->add_option("--method", o.method, "oracle, zeta, chains; compositions, closed, formula for cubes");
  mob->callback([&] {
    const std::string ref = !mob_poset.empty() ? mob_poset : mob_ref;
    if (ref.empty()) throw UsageError("mobius needs a poset");
    if (!mob_poset.empty() && !mob_ref.empty()) throw UsageError("give the poset once");
    GradedPoset p = load_poset(ref);
    Integer mu;
    const std::string& m = o.method;
    if (m == "compositions" || m == "closed" || m == "formula") {
      if (rees_chain < 1) throw UsageError("--method " + m + " needs --rees-chain");
      const int n = p.bottom() && p.top() ? p.rank(*p.top()) - 1 : -1;
      if (m == "formula") {
        if (rees_chain != n + 1) throw UsageError("--method formula needs --rees-chain equal to rank of P");
        mu = mobius_rees_formula(p, 1);
      } else {
        if (n < 1 || !isomorphic(p, cubical_lattice(n)) || rees_chain != n + 1)
          throw UsageError("--method " + m + " applies to zoo:cube:n with --rees-chain n+1");
        mu = m == "closed" ? mobius_cube_closed_form(n) : mobius_by_compositions(n);
      }
    } else {
      if (rees_chain > 0) p = rees_bounded(p, chain(rees_chain));
      mu = mobius_by_method(p, m);
    }
    emit_value(os, o, "mobius", mu);
  });

  // weights
  auto* weights = app.add_subcommand("weights", "Flag-weight formulas for Rees(P, T_{t,n+1})");
  weights->require_subcommand(1);
  auto* wmu = weights->add_subcommand("mu", "Mobius value from the weight formula");
  std::string w_ref;
  bool t_poly = false;
  int t_value = 1;
  wmu->add_option("poset", w_ref, "Poset reference")->required();
  auto* tpoly_flag = wmu->add_flag("--t-poly", t_poly, "Print the polynomial in t");
  wmu->add_option("--t", t_value, "Evaluate at t")->excludes(tpoly_flag);
  wmu->callback([&] {
    auto p = load_poset(w_ref);
    if (t_poly) {
      const TPoly mu = mobius_rees_formula(p);
      if (o.format == "json") {
        Json coeffs = Json::array();
        for (int k = 0; k <= mu.degree(); ++k) coeffs.push_back(int_json(mu.coeff(k)));
        os << Json{{"coefficients", coeffs}, {"polynomial", mu.to_string()}}.dump() << "\n";
      } else {
        require_format(o, {"text"});
        os << mu.to_string() << "\n";
      }
    } else {
      if (t_value < 1) throw UsageError("--t must be at least 1");
      emit_value(os, o, "mobius", mobius_rees_formula(p, t_value));
    }
  });
  auto* wver = weights->add_subcommand("verify", "Flag transfer, duality and divisibility for one poset");
  wver->add_option("poset", w_ref, "Poset reference")->required();
  wver->callback([&] {
    auto p = load_poset(w_ref);
    std::vector<Report> reports{check_flag_transfer(p, {1, 2}, w_ref), check_duality(p, {1, 2}, w_ref),
                                check_parity_divisibility(p, w_ref)};
    status = emit_reports(os, o, "weights verify", reports) ? 0 : 1;
  });

  // falling
  auto* falling = app.add_subcommand("falling", "Falling words of Rees(cube_n, C_{n+1})");
  int fall_n = 0;
  bool fall_list = false, fall_count = false;
  falling->add_option("n", fall_n)->required();
  auto* list_flag = falling->add_flag("--list", fall_list, "List the words");
  falling->add_flag("--count", fall_count, "Print only the count (default)")->excludes(list_flag);
  falling->callback([&] {
    require_range("n", fall_n, 1, o.slow ? 9 : 7);
    Timer timer(o.slow, "1 h");
    if (!fall_list) {
      emit_value(os, o, "count", Integer(falling_words(fall_n).size()));
      return;
    }
    const auto words = falling_words(fall_n);
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& w : words) {
        Json letters = Json::array();
        for (int i = 1; i <= fall_n; ++i) letters.push_back({{"value", w[i].value}, {"bar", w[i].bar}});
        arr.push_back({{"word", w.to_string()}, {"letters", letters}});
      }
      os << Json{{"n", fall_n}, {"count", words.size()}, {"words", arr}}.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "word\n";
      for (const auto& w : words) os << w.to_string() << "\n";
    } else {
      for (const auto& w : words) os << w.to_string() << "\n";
    }
  });

  // mobius-cube
  auto* mcube = app.add_subcommand("mobius-cube", "mu(Rees(cube_n, C_{n+1}))");
  int mc_n = 0;
  mcube->add_option("n", mc_n)->required();
  mcube->add_option("--method", o.method, "oracle, closed, compositions, chains");
  mcube->callback([&] {
    const std::string m = o.method.empty() ? "closed" : o.method;
    Integer mu;
    if (m == "closed") {
      require_range("n", mc_n, 1, 1000);
      mu = mobius_cube_closed_form(mc_n);
    } else if (m == "compositions") {
      require_range("n", mc_n, 1, 60);
      mu = mobius_by_compositions(mc_n);
    } else if (m == "oracle") {
      require_range("n", mc_n, 1, 6);
      mu = CubeRees(mc_n).poset().mobius();
    } else if (m == "chains") {
      require_range("n", mc_n, 1, 5);
      CubeRees cr(mc_n);
      mu = sign_power(mc_n) * Integer(count_falling_chains(cr.poset(), cr.labeling()));
    } else {
      throw UsageError("unknown --method " + m);
    }
    emit_value(os, o, "mobius", mu);
  });

  // verify-rlabel
  auto* vr = app.add_subcommand("verify-rlabel", "Check the edge labeling of Rees(cube_n, C_{n+1}) is an R-labeling");
  int vr_n = 0;
  vr->add_option("n", vr_n)->required();
  vr->callback([&] {
    require_range("n", vr_n, 1, 5);
    auto reports = suite_rlabel(vr_n);
    reports.erase(reports.begin(), reports.end() - 2);
    status = emit_reports(os, o, "verify-rlabel", reports) ? 0 : 1;
  });

  // derange
  auto* der = app.add_subcommand("derange", "Derangement numbers D_n or signed D+-_n");
  int der_n = 0;
  bool der_signed = false;
  der->add_option("n", der_n)->required();
  der->add_flag("--signed", der_signed, "Signed derangements (permanent)");
  der->callback([&] {
    require_range("n", der_n, 0, der_signed ? 25 : 1000);
    emit_value(os, o, der_signed ? "signed_derangements" : "derangements",
               der_signed ? signed_derangement_count(der_n) : derangement_count(der_n));
  });

  // bijection
  auto* bij = app.add_subcommand("bijection", "Fixed-point-free permutations and skew hook diagrams");
  bij->require_subcommand(1);
  std::string bij_arg;
  auto* fwd = bij->add_subcommand("forward", "Cycles to diagram word");
  fwd->add_option("cycles", bij_arg, "e.g. \"(135764928)\"")->required();
  fwd->callback([&] {
    auto pi = PermutationCycles::parse(bij_arg);
    BarredWord w = cycles_to_diagram(pi);
    auto shape = hook_shape(w);
    if (o.format == "json")
      os << Json{{"cycles", pi.canonical().to_string()}, {"diagram", format_barred_word(w)},
                 {"shape", shape ? shape->to_string() : ""}}
                .dump()
         << "\n";
    else
      os << format_barred_word(w) << "\n";
  });
  auto* inv = bij->add_subcommand("inverse", "Diagram word to cycles");
  inv->add_option("word", bij_arg, "e.g. \"8 |7| |2| 6 |1| 9 |5| 4 |3|\"")->required();
  inv->callback([&] {
    BarredWord w = parse_barred_word(bij_arg);
    auto pi = diagram_to_cycles(w);
    if (o.format == "json")
      os << Json{{"diagram", format_barred_word(w)}, {"cycles", pi.to_string()}}.dump() << "\n";
    else
      os << pi.to_string() << "\n";
  });

  // table
  auto* table = app.add_subcommand("table", "Mobius values of Rees(cube_n, C_{n+1}) with D_n");
  int oracle_max = 0;
  table->add_option("--max-n", o.max_n, "Largest n (default 10)");
  table->add_option("--oracle-max", oracle_max, "Cross-check rows up to this n with the poset oracle");
  table->callback([&] {
    const int max_n = o.max_n < 0 ? 10 : o.max_n;
    require_range("--max-n", max_n, 0, o.slow ? 200 : 30);
    require_range("--oracle-max", oracle_max, 0, 5);
    const auto rows = mobius_table(max_n, oracle_max);
    for (const auto& r : rows)
      if (r.oracle && *r.oracle != r.value) status = 1;
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row{{"n", r.n}, {"D_n", int_json(r.derangements)}, {"abs_mobius", int_json(r.value)},
                 {"factorization", table_factorization(r)}};
        if (r.oracle) row["oracle"] = int_json(*r.oracle);
        arr.push_back(row);
      }
      os << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "n,D_n,abs_mobius,factorization\n";
      for (const auto& r : rows)
        os << r.n << "," << r.derangements << "," << r.value << "," << table_factorization(r) << "\n";
    } else {
      os << "n\tD_n\t(-1)^n mu\tfactorization\n";
      for (const auto& r : rows)
        os << r.n << "\t" << r.derangements << "\t" << r.value << "\t" << table_factorization(r) << "\n";
    }
  });

  // homology
  auto* hom = app.add_subcommand("homology", "Integral homology checks");
  hom->require_subcommand(1);
  int hom_n = 0;
  bool dump = false;
  auto homology_range = [&] {
    require_range("n", hom_n, 1, o.slow ? 4 : 3);
  };
  auto* hrc = hom->add_subcommand("rees-cube", "Reduced homology of the order complex of Rees(cube_n, C_{n+1})");
  hrc->add_option("n", hom_n)->required();
  hrc->callback([&] {
    homology_range();
    Timer timer(o.slow, "1 h");
    status = emit_reports(os, o, "homology rees-cube", {rees_cube_homology_report(hom_n)}) ? 0 : 1;
  });
  auto* hcs = hom->add_subcommand("csigma", "C_sigma isomorphism and sphere homology for every falling word");
  hcs->add_option("n", hom_n)->required();
  hcs->callback([&] {
    homology_range();
    Timer timer(o.slow, "1 h");
    CubeRees cr(hom_n);
    std::vector<Report> reports;
    for (const auto& w : falling_words(hom_n)) reports.push_back(check_c_sigma_iso(cr, w));
    status = emit_reports(os, o, "homology csigma", reports) ? 0 : 1;
  });
  auto* hb = hom->add_subcommand("basis", "Fundamental cycles as a basis of top homology");
  hb->add_option("n", hom_n)->required();
  hb->add_flag("--dump", dump, "Print the cycle matrix as sorted (row, col, value) triplets");
  hb->callback([&] {
    homology_range();
    Timer timer(o.slow, "1 h");
    if (dump) {
      ReesCubeComplex amb(hom_n);
      const auto basis = cycle_basis(amb);
      const auto triplets = basis.matrix.triplets();
      if (o.format == "json") {
        Json rows = Json::array(), entries = Json::array();
        for (const auto& w : basis.words) rows.push_back(w.to_string());
        for (const auto& t : triplets) entries.push_back({t.row, t.col, t.value});
        os << Json{{"rows", basis.matrix.rows()}, {"cols", basis.matrix.cols()}, {"row_words", rows},
                   {"triplets", entries}}
                  .dump()
           << "\n";
      } else {
        if (o.format == "csv") os << "row,col,value\n";
        const char* sep = o.format == "csv" ? "," : " ";
        for (const auto& t : triplets) os << t.row << sep << t.col << sep << t.value << "\n";
      }
      return;
    }
    status = emit_reports(os, o, "homology basis", {basis_rank_check(hom_n)}) ? 0 : 1;
  });

  // rep-dim
  auto* rep = app.add_subcommand("rep-dim", "Dimension count over skew hook shapes");
  int rep_n = 0;
  rep->add_option("n", rep_n)->required();
  rep->callback([&] {
    require_range("n", rep_n, 1, 7);
    status = emit_reports(os, o, "rep-dim", {representation_dimension_check(rep_n)}) ? 0 : 1;
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::vector<std::string> all_suites = suite_names();
  all_suites.push_back("all");
  ver->add_option("suite", suite, "flag-weights, rlabel, falling, bijection, homology, rep-dim, all")
      ->required()
      ->check(CLI::IsMember(all_suites));
  ver->add_option("--max-n", o.max_n, "Largest n (default 4)");
  ver->callback([&] {
    const int max_n = o.max_n < 0 ? 4 : o.max_n;
    require_range("--max-n", max_n, 1, o.slow ? 8 : 7);
    Timer timer(o.slow, "1 h");
    status = emit_reports(os, o, "verify " + suite, run_suite(suite, max_n, o.slow)) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << os.str();
  }
  return status;
}
