#include "qaffin/json_io.hpp"

#include <stdexcept>

namespace qaffin {

Json weight_to_json(const Weight& w) {
  Json j = Json::object();
  for (int i = 1; i <= w.rank(); ++i)
    if (w[i] != 0) j[std::to_string(i)] = w[i];
  return j;
}

Weight weight_from_json(const Diagram& d, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("weight must be a JSON object");
  Weight w(d.rank());
  for (const auto& [key, val] : j.items()) {
    int node = std::stoi(key);
    if (node < 1 || node > d.rank())
      throw std::invalid_argument("weight node out of range: " + key);
    w[node] = val.get<long long>();
  }
  return w;
}

Json rootvec_to_json(const RootVector& v) {
  Json j = Json::object();
  for (int i = 1; i <= v.rank(); ++i)
    if (v[i] != 0) j[std::to_string(i)] = v[i];
  return j;
}

RootVector rootvec_from_json(const Diagram& d, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("root vector must be a JSON object");
  RootVector v(d.rank());
  for (const auto& [key, val] : j.items()) {
    int node = std::stoi(key);
    if (node < 1 || node > d.rank())
      throw std::invalid_argument("root vector node out of range: " + key);
    v[node] = val.get<long long>();
  }
  return v;
}

Json spec_to_json(const DrinfeldSpec& s) {
  Json j = Json::array();
  for (const KRString& str : s.strings)
    j.push_back({{"node", str.node}, {"r", str.shift}, {"m", str.length}});
  return j;
}

DrinfeldSpec spec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("spec must be a JSON array");
  std::vector<KRString> strings;
  for (const auto& e : j)
    strings.push_back({e.at("node").get<int>(), e.at("r").get<int>(),
                       e.at("m").get<long long>()});
  return DrinfeldSpec::make(std::move(strings));
}

namespace {

std::string coherence_name(Coherence c) {
  switch (c) {
    case Coherence::Coherent: return "coherent";
    case Coherence::Incoherent: return "incoherent";
    case Coherence::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string mode_name(TripleMode m) {
  return m == TripleMode::Coherent ? "coherent" : "incoherent";
}

}  // namespace

Json classification_to_json(const Classification& c) {
  Json wm = Json::object();
  for (const auto& [i, v] : c.wing_minimal) wm[std::to_string(i)] = v;
  Json j{{"preminimal", c.preminimal},
         {"i_minimal", wm},
         {"mo", c.mo},
         {"coherence", coherence_name(c.coherence)}};
  if (c.failing_node != 0)
    j["failing_node"] = c.failing_node;
  else
    j["failing_node"] = nullptr;
  return j;
}

Json triple_config_to_json(const TripleConfig& c) {
  Json strings = Json::array();
  for (const auto& [i, s] : c.strings)
    strings.push_back({{"node", s.node}, {"r", s.shift}, {"m", s.length}});
  return Json{{"diagram", c.diagram.name()},
              {"k", c.k},
              {"mode", mode_name(c.mode)},
              {"strings", strings}};
}

TripleConfig triple_config_from_json(const Json& j) {
  auto d = Diagram::parse(j.at("diagram").get<std::string>());
  if (!d) throw std::invalid_argument("unknown diagram name");
  TripleMode mode;
  std::string ms = j.at("mode").get<std::string>();
  if (ms == "coherent")
    mode = TripleMode::Coherent;
  else if (ms == "incoherent")
    mode = TripleMode::Incoherent;
  else
    throw std::invalid_argument("mode must be coherent or incoherent");
  std::vector<KRString> strings;
  for (const auto& e : j.at("strings"))
    strings.push_back({e.at("node").get<int>(), e.at("r").get<int>(),
                       e.at("m").get<long long>()});
  return TripleConfig::make(*d, j.at("k").get<int>(), mode, std::move(strings));
}

Json replay_report_to_json(const ReplayReport& r) {
  Json dom = Json::array();
  for (const auto& nm : r.dominant)
    dom.push_back({{"name", nm.name}, {"monomial", nm.monomial.str()}});
  Json fdim = Json::object(), fmul = Json::object();
  for (const auto& [k, v] : r.factor_dim_nu) fdim[k] = v;
  for (const auto& [k, v] : r.factor_mult) fmul[k] = v;
  return Json{{"rank", r.n},
              {"mode", mode_name(r.mode)},
              {"k", r.k},
              {"dims",
               {{"dim_W_nu", r.dim_w_nu},
                {"dim_V_lambda_nu", r.dim_v_lambda_nu},
                {"dim_V_nuk_nu", r.dim_v_nuk_nu},
                {"dim_W_nuk", r.dim_w_nuk},
                {"dim_V_omega_nuk", r.dim_v_omega_nuk}}},
              {"dominant_lweights", dom},
              {"factor_dims_nu", fdim},
              {"factor_multiplicities", fmul},
              {"m_nuk", r.m_nuk},
              {"xi", r.xi},
              {"m_nu", r.m_nu},
              {"identity_ok", r.identity_ok}};
}

Json certificate_to_json(const Certificate& c) {
  Json windows = Json::array();
  for (const auto& w : c.windows) {
    Json jw{{"type", w.window_type},
            {"boundary_node", w.boundary_node},
            {"rank", w.rank},
            {"coherent_irreducible", w.coherent_irreducible},
            {"incoherent_irreducible", w.incoherent_irreducible}};
    if (w.window_type == "A") {
      jw["s_coherent"] = w.s_coherent;
      jw["s_incoherent"] = w.s_incoherent;
    } else {
      jw["e_coherent"] = w.e_coherent;
      jw["e_incoherent"] = w.e_incoherent;
    }
    windows.push_back(jw);
  }
  return Json{{"config",
               {{"hypothesis", c.hypothesis},
                {"k", c.k},
                {"m", c.m},
                {"l", c.l},
                {"k_anchor", c.k_anchor},
                {"l_anchor", c.l_anchor},
                {"spec", spec_to_json(c.spec)},
                {"partner", spec_to_json(c.partner)}}},
              {"dominant_lweights",
               {{"coherent", replay_report_to_json(c.coherent_replay)["dominant_lweights"]},
                {"incoherent",
                 replay_report_to_json(c.incoherent_replay)["dominant_lweights"]}}},
              {"dims",
               {{"coherent", replay_report_to_json(c.coherent_replay)["dims"]},
                {"incoherent", replay_report_to_json(c.incoherent_replay)["dims"]}}},
              {"xi",
               {{"coherent", c.coherent_replay.xi}, {"incoherent", c.incoherent_replay.xi}}},
              {"m_nu",
               {{"coherent", c.coherent_replay.m_nu},
                {"incoherent", c.incoherent_replay.m_nu}}},
              {"windows", windows},
              {"verdict", c.strictly_larger ? "strictly-larger" : "inconclusive"},
              {"citations", c.citations}};
}

}  // namespace qaffin
