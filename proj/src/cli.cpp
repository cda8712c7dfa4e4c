#include "qaffin/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qaffin/json_io.hpp"
#include "qaffin/kostant.hpp"

namespace qaffin {

namespace {

struct Options {
  std::string format = "json";  // json | csv | text
  std::string out_path;
  int depth = -1;  // -1: rank-derived default (env QAFFIN_DEPTH overrides)
  bool no_meta = false;
};

Json parse_payload(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open payload file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("payload is not valid JSON");
  return j;
}

Diagram parse_diagram(const std::string& name) {
  auto d = Diagram::parse(name);
  if (!d) throw std::invalid_argument("unknown diagram: " + name);
  return *d;
}

int default_depth(const Diagram& d, const Options& opt) {
  if (opt.depth >= 0) return opt.depth;
  if (const char* env = std::getenv("QAFFIN_DEPTH")) return std::atoi(env);
  return d.rank() + 2;
}

void emit(const Options& opt, std::ostream& out, const std::string& meta,
          const Json& payload, const std::vector<std::string>& csv_rows) {
  std::ostream* os = &out;
  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    os = &file;
  }
  if (!opt.no_meta) *os << "# qaffin " << meta << "\n";
  if (opt.format == "json") {
    *os << payload.dump(2) << "\n";
    return;
  }
  if (csv_rows.empty())
    throw std::invalid_argument("csv/text output is only available for tabular subcommands");
  for (const auto& row : csv_rows) {
    std::string r = row;
    if (opt.format == "text")
      for (auto& ch : r)
        if (ch == ',') ch = ' ';
    *os << r << "\n";
  }
}

std::string rootvec_row(const RootVector& v) {
  std::string s;
  for (int i = 1; i <= v.rank(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_roots(const Diagram& d, const Options& opt, std::ostream& out) {
  Json roots = Json::array();
  std::vector<std::string> rows;
  for (const RootVector& a : d.positive_roots()) {
    Json r = Json::array();
    for (int i = 1; i <= d.rank(); ++i) r.push_back(a[i]);
    roots.push_back(r);
    rows.push_back(rootvec_row(a));
  }
  emit(opt, out, "roots " + d.name(),
       Json{{"diagram", d.name()},
            {"count", d.positive_roots().size()},
            {"roots", roots}},
       rows);
  return 0;
}

int cmd_kostant(const Diagram& d, const Json& eta_j, const Options& opt,
                std::ostream& out) {
  RootVector eta = rootvec_from_json(d, eta_j);
  long long p = kostant_p(d, eta);
  emit(opt, out, "kostant " + d.name(),
       Json{{"diagram", d.name()}, {"eta", rootvec_to_json(eta)}, {"p", p}},
       {"p," + std::to_string(p)});
  return 0;
}

int cmd_dimtable(const Diagram& d, const Json& lam_j, const Options& opt,
                 std::ostream& out) {
  Weight lam = weight_from_json(d, lam_j);
  if (!lam.dominant()) throw std::invalid_argument("lambda must be dominant");
  if (!lam.support().subset_of(d.extremal()))
    throw std::invalid_argument("dimtable needs supp(lambda) inside the extremal nodes");

  RootVector th = theta(d, d.all_nodes());
  int depth = std::max(default_depth(d, opt), static_cast<int>(th.ht()));

  long long parts = static_cast<long long>(restricted_partitions(d, th, lam).size());
  TruncatedCharacter full = freudenthal(d, lam, depth);
  long long dim_v = static_cast<long long>(full.at(th));

  std::vector<TruncatedCharacter> factors;
  for (int i : lam.support().to_vector()) {
    Weight w(d.rank());
    w[i] = lam[i];
    factors.push_back(freudenthal(d, w, depth));
  }
  long long dim_w =
      factors.empty() ? 0 : static_cast<long long>(tensor_truncated(d, factors).at(th));
  long long families =
      static_cast<long long>(branch_families(d, lam, th).size());

  Json j{{"diagram", d.name()},
         {"lambda", weight_to_json(lam)},
         {"partitions_theta", parts},
         {"dim_V_lambda_minus_theta", dim_v},
         {"dim_W_lambda_minus_theta", dim_w},
         {"gap", dim_w - dim_v},
         {"branch_families", families}};
  std::vector<std::string> rows{
      "partitions_theta," + std::to_string(parts),
      "dim_V_lambda_minus_theta," + std::to_string(dim_v),
      "dim_W_lambda_minus_theta," + std::to_string(dim_w),
      "gap," + std::to_string(dim_w - dim_v),
      "branch_families," + std::to_string(families)};

  if (d.has_trivalent() && lam.support() == d.extremal()) {
    Json wings = Json::object();
    for (int k : d.extremal().to_vector()) {
      NodeSet wk = wing(d, k);
      Weight nu_k = lam - theta(d, wk).to_weight(d);
      RootVector drop = th - theta(d, wk);
      long long v = static_cast<long long>(
          freudenthal(d, nu_k, static_cast<int>(drop.ht())).at(drop));
      wings[std::to_string(k)] = v;
      rows.push_back("dim_V_nuk_nu_" + std::to_string(k) + "," + std::to_string(v));
    }
    j["dim_V_nuk_nu"] = wings;
  }
  emit(opt, out, "dimtable " + d.name(), j, rows);
  return 0;
}

int cmd_classify(const Diagram& d, const Json& spec_j, const Options& opt,
                 std::ostream& out) {
  DrinfeldSpec spec = spec_from_json(spec_j);
  Classification cls = classify(d, spec);
  emit(opt, out, "classify " + d.name(), classification_to_json(cls), {});
  return 0;
}

int cmd_kr_lweights(const Diagram& d, int l, int r, long long m, const Options& opt,
                    std::ostream& out) {
  Json list = Json::array();
  std::vector<std::string> rows;
  for (const KRFragment& f : kr_top_lweights(d, l, r, m)) {
    Json nodes = Json::array();
    for (int u : f.J.to_vector()) nodes.push_back(u);
    list.push_back({{"J", nodes}, {"monomial", f.monomial.str()}});
    std::string jtxt;
    for (int u : f.J.to_vector()) {
      if (!jtxt.empty()) jtxt += " ";
      jtxt += std::to_string(u);
    }
    rows.push_back("{" + jtxt + "}," + f.monomial.str());
  }
  emit(opt, out, "kr-lweights " + d.name(),
       Json{{"diagram", d.name()},
            {"node", l},
            {"r", r},
            {"m", m},
            {"lweights", list}},
       rows);
  return 0;
}

int cmd_tpa(int n, const std::string& lambda_payload, long long s, long long eta,
            const Options& opt, std::ostream& out) {
  Diagram a = Diagram::make(Kind::A, n);
  Weight lam = weight_from_json(a, parse_payload(lambda_payload));
  TpaResult res = typeA_tensor_reducible(n, lam, s, eta);
  Json j{{"mode", "tpa"}, {"rank", n}, {"s", s}, {"eta", eta},
         {"reducible", res.reducible}};
  if (res.witness)
    j["witness"] = {{"condition", res.witness->condition},
                    {"support_node", res.witness->support_node},
                    {"eta_prime", res.witness->eta_prime}};
  emit(opt, out, "tensor-check tpa", j, {});
  return 0;
}

int cmd_tpd(int n, int i, int j, long long mi, long long mj, long long e,
            const Options& opt, std::ostream& out) {
  Diagram d = Diagram::make(Kind::D, n);
  bool irr = typeD_tensor_irreducible(d, i, j, mi, mj, e);
  emit(opt, out, "tensor-check tpd",
       Json{{"mode", "tpd"}, {"rank", n}, {"i", i}, {"j", j},
            {"m_i", mi}, {"m_j", mj}, {"exponent", e}, {"irreducible", irr}},
       {});
  return 0;
}

int cmd_replay(const Json& cfg_j, const Options& opt, std::ostream& out) {
  TripleConfig cfg = triple_config_from_json(cfg_j);
  ReplayReport rep = replay_outer(cfg);
  Json j = replay_report_to_json(rep);
  j["config"] = triple_config_to_json(cfg);
  emit(opt, out, "replay", j, {});
  return 0;
}

int cmd_theorem(const Diagram& d, const Json& spec_j, int m_choice, const Options& opt,
                std::ostream& out) {
  DrinfeldSpec spec = spec_from_json(spec_j);
  Certificate cert = comparison_certificate(d, spec, m_choice);
  emit(opt, out, "theorem " + d.name(), certificate_to_json(cert), {});
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact combinatorics of boundary KR tensor products and "
               "order-2 affinization classes"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out_path, "write output to a file");
  app.add_option("--depth", opt.depth, "truncation depth override");
  app.add_flag("--no-meta", opt.no_meta, "suppress the metadata header line");

  std::string diagram_name, payload;
  int node = 0, shift = 0, m_choice = 0;
  long long length = 0;

  auto* roots = app.add_subcommand("roots", "positive roots of a diagram");
  roots->add_option("diagram", diagram_name)->required();

  auto* kost = app.add_subcommand("kostant", "partition count of a root-lattice element");
  kost->add_option("diagram", diagram_name)->required();
  kost->add_option("eta", payload)->required();

  auto* dimt = app.add_subcommand("dimtable", "weight-space dimension table at the full drop");
  dimt->add_option("diagram", diagram_name)->required();
  dimt->add_option("lambda", payload)->required();

  auto* clas = app.add_subcommand("classify", "classify a Drinfeld spec");
  clas->add_option("diagram", diagram_name)->required();
  clas->add_option("spec", payload)->required();

  auto* krlw = app.add_subcommand("kr-lweights", "near-top l-weights of a KR module");
  krlw->add_option("diagram", diagram_name)->required();
  krlw->add_option("node", node)->required();
  krlw->add_option("r", shift)->required();
  krlw->add_option("m", length)->required();

  auto* tens = app.add_subcommand("tensor-check", "tensor irreducibility criteria");
  tens->require_subcommand(1);
  int tpa_n = 0, tpd_n = 0, tpd_i = 0, tpd_j = 0;
  long long tpa_s = 0, tpa_eta = 0, tpd_mi = 0, tpd_mj = 0, tpd_e = 0;
  std::string tpa_lambda;
  auto* tpa = tens->add_subcommand("tpa", "type A reducibility (exact)");
  tpa->add_option("n", tpa_n)->required();
  tpa->add_option("lambda", tpa_lambda)->required();
  tpa->add_option("s", tpa_s)->required();
  tpa->add_option("eta", tpa_eta)->required();
  auto* tpd = tens->add_subcommand("tpd", "type D irreducibility (sufficient)");
  tpd->add_option("n", tpd_n)->required();
  tpd->add_option("i", tpd_i)->required();
  tpd->add_option("j", tpd_j)->required();
  tpd->add_option("mi", tpd_mi)->required();
  tpd->add_option("mj", tpd_mj)->required();
  tpd->add_option("exponent", tpd_e)->required();

  auto* repl = app.add_subcommand("replay", "outer-multiplicity replay of a triple config");
  repl->add_option("config", payload)->required();

  auto* theo = app.add_subcommand("theorem", "strict-comparison certificate");
  theo->add_option("diagram", diagram_name)->required();
  theo->add_option("spec", payload)->required();
  theo->add_option("--m", m_choice, "partner branch choice");

  // let global output flags appear after the subcommand as well
  for (CLI::App* sub : {roots, kost, dimt, clas, krlw, tens, repl, theo, tpa, tpd})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("qaffin");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(parse_diagram(diagram_name), opt, out);
    if (kost->parsed())
      return cmd_kostant(parse_diagram(diagram_name), parse_payload(payload), opt, out);
    if (dimt->parsed())
      return cmd_dimtable(parse_diagram(diagram_name), parse_payload(payload), opt, out);
    if (clas->parsed())
      return cmd_classify(parse_diagram(diagram_name), parse_payload(payload), opt, out);
    if (krlw->parsed())
      return cmd_kr_lweights(parse_diagram(diagram_name), node, shift, length, opt, out);
    if (tpa->parsed()) return cmd_tpa(tpa_n, tpa_lambda, tpa_s, tpa_eta, opt, out);
    if (tpd->parsed()) return cmd_tpd(tpd_n, tpd_i, tpd_j, tpd_mi, tpd_mj, tpd_e, opt, out);
    if (repl->parsed()) return cmd_replay(parse_payload(payload), opt, out);
    if (theo->parsed())
      return cmd_theorem(parse_diagram(diagram_name), parse_payload(payload), m_choice,
                         opt, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qaffin
