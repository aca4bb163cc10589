// parconn: command-line front end. Every command prints one JSON report.
// Exit codes: 0 ok, 1 failed check or module error, 2 malformed input.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parconn/json_io.hpp"
#include "parconn/sweeps.hpp"

using namespace parconn;
using P = Poly<Q>;

namespace {

struct Config {
  SpectralData<Q> data = default_spectral_data();
  Weights weights = democratic_weights();
  std::uint64_t seed = 7;
  int n = 0;
  json raw;
};

json read_json(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"' || std::isdigit(static_cast<unsigned char>(arg[0])) || arg[0] == '-')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
}

Weights weights_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "democratic") return democratic_weights();
  if (j.is_string() && j.get<std::string>() == "central") return central_weights();
  if (!j.is_array() || j.size() != 5) throw Error(ErrorCode::ParseError, "weights: 'democratic', 'central' or five scalars");
  Weights w;
  for (size_t i = 0; i < 5; ++i) w[i] = q_from_json(j[i]);
  return w;
}

Config load_config(const std::string& path) {
  Config c;
  std::string p = path;
  if (p.empty()) {
    const char* env = std::getenv("PARCONN_CONFIG");
    if (env) p = env;
  }
  if (p.empty()) return c;
  c.raw = read_json(p);
  if (c.raw.contains("poles") || c.raw.contains("nu")) c.data = spectral_data_from_json(c.raw);
  if (c.raw.contains("weights")) c.weights = weights_from(c.raw.at("weights"));
  if (c.raw.contains("seed")) c.seed = c.raw.at("seed").get<std::uint64_t>();
  if (c.raw.contains("scalar") && c.raw.at("scalar") != "Q") throw Error(ErrorCode::ParseError, "only scalar mode \"Q\" is exposed");
  if (c.raw.contains("sweep") && c.raw.at("sweep").contains("n")) c.n = c.raw.at("sweep").at("n").get<int>();
  c.data.validate();
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}
  void input(const std::string& key, const json& v) { inputs_[key] = v; }
  void output(const std::string& key, const json& v) { outputs_[key] = v; }
  void check(const std::string& name, bool ok) {
    checks_.push_back(json{{"name", name}, {"pass", ok}});
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  json to_json(const Config& cfg) const {
    json in = inputs_;
    in["config"] = parconn::to_json(cfg.data);
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a(in.dump())));
    json j{{"command", command_}, {"inputs_digest", digest}, {"inputs", inputs_}, {"outputs", outputs_}, {"checks", checks_},
           {"ok", ok_}};
    if (timing_ >= 0) j["timing_seconds"] = timing_;
    return j;
  }
  double timing_ = -1;

 private:
  std::string command_;
  json inputs_ = json::object(), outputs_ = json::object(), checks_ = json::array();
  bool ok_ = true;
};

CyclicVector sigma_from(const std::string& arg, const EpsilonConnection<Q>& ec) {
  if (arg.empty()) return default_cyclic_vector(ec);
  json j = read_json(arg);
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "sigma must be [p1, p2]");
  return {poly_from_json(j[0]), poly_from_json(j[1])};
}

QuadDiff quad_from(const std::string& arg, const Config& cfg) {
  if (arg.empty()) return make_quad_diff(cfg.data.poles, Q(4), Q(-1));
  json j = read_json(arg);
  if (j.is_array()) return QuadDiff{cfg.data.poles, poly_from_json(j)};
  return quad_diff_from_json(j, cfg.data.poles);
}

void emit_plot(const std::string& path, const Config& cfg) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << "curve,plane,param,x0,x1,x2\n";
  auto row = [&](const std::string& curve, const char* plane, const Q& s, const ProjPoint& p) {
    out << curve << "," << plane << "," << s.str() << "," << p[0].str() << "," << p[1].str() << "," << p[2].str() << "\n";
  };
  for (int k = -20; k <= 20; ++k) {
    Q q(k, 4);
    auto g = gamma(q);
    row("Delta", "a", q, g.first);
    row("Pi", "b", q, g.second);
    row("Gamma", "a", q, g.first);
    row("Gamma", "b", q, g.second);
    for (int i = 0; i < 5; ++i) {
      const auto& t = cfg.data.poles[static_cast<size_t>(i)];
      if (t.is_inf()) continue;
      // Delta_i through the tangency point, Sigma fibre over D_i
      ProjPoint a(-t.value() - q * t.value() * t.value(), Q(1), q);
      row("Delta_" + std::to_string(i), "a", q, a);
      row("Sigma_over_D_" + std::to_string(i), "a", q, a);
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"parconn: parabolic connections, spectral curves and incidence geometry"};
  app.require_subcommand(1);
  std::string config_path, emit_plot_path;
  std::uint64_t seed = 0;
  int n = 0, indent = 2;
  bool seed_set = false, timing = false;
  app.add_option("--config", config_path, "config JSON (default: $PARCONN_CONFIG)");
  app.add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { seed = s, seed_set = true; }, "random seed");
  app.add_option("--n", n, "sweep size");
  app.add_option("--emit-plot", emit_plot_path, "write CSV point lists for Delta, Pi, Gamma, Sigma");
  app.add_option("--json-indent", indent, "JSON indentation (-1 for one line)");
  app.add_flag("--timing", timing, "add wall-clock time to the report (breaks byte-identity)");
  app.fallthrough();

  std::string conn_arg = "-", bundle_arg = "-", sigma_arg, weights_arg, s_arg, a_arg, b_arg, d_arg, elm_op = "minus", suite;
  std::string jac_op, bnr_op, inc_op = "check";
  int pole = 4, k_mul = 2;
  Q t_val(1, 2), c1(1), c2(0), u2(3);
  std::string t_str, c1_str, c2_str, u2_str, q_str;

  auto conn_opt = [&](CLI::App* sc) { sc->add_option("--conn", conn_arg, "connection JSON file, inline JSON or - for stdin"); };
  auto* validate_c = app.add_subcommand("validate", "run every connection check");
  conn_opt(validate_c);
  auto* residues_c = app.add_subcommand("residues", "residue matrices and eigenvalue data");
  conn_opt(residues_c);
  auto* app_c = app.add_subcommand("app", "apparent-singularity point in the a-plane");
  conn_opt(app_c);
  app_c->add_option("--sigma", sigma_arg, "cyclic vector [p1, p2]");
  auto* bun_c = app.add_subcommand("bun", "point of the b-plane for a chart bundle");
  bun_c->add_option("--bundle", bundle_arg, "bundle JSON");
  auto* appbun_c = app.add_subcommand("appbun", "App x Bun and the incidence pairing");
  conn_opt(appbun_c);
  appbun_c->add_option("--sigma", sigma_arg, "cyclic vector [p1, p2]");
  auto* stab_c = app.add_subcommand("stability", "weighted stability with witness");
  stab_c->add_option("--bundle", bundle_arg, "bundle JSON");
  stab_c->add_option("--weights", weights_arg, "democratic | central | JSON array");
  auto* classify_c = app.add_subcommand("classify", "odd-set label of an unstable bundle");
  classify_c->add_option("--bundle", bundle_arg, "bundle JSON");
  auto* elm_c = app.add_subcommand("elm", "elementary transformation at a pole");
  conn_opt(elm_c);
  elm_c->add_option("--op", elm_op, "minus | plus")->check(CLI::IsMember({"minus", "plus"}));
  elm_c->add_option("--pole", pole, "pole index")->check(CLI::Range(0, 4));
  auto* spec_c = app.add_subcommand("spectral", "spectral curve of a quadratic differential");
  spec_c->add_option("--s", s_arg, "quadratic differential: {\"P\": [...]} or coefficient array");
  auto* jac_c = app.add_subcommand("jac", "divisor arithmetic on the Jacobian");
  jac_c->add_option("op", jac_op, "add | neg | reduce | mul | torsion")->required()->check(CLI::IsMember({"add", "neg", "reduce", "mul", "torsion"}));
  jac_c->add_option("--s", s_arg, "quadratic differential");
  jac_c->add_option("--a", a_arg, "divisor {u, v, n_inf}");
  jac_c->add_option("--b", b_arg, "divisor {u, v, n_inf}");
  jac_c->add_option("--k", k_mul, "multiplier for mul");
  auto* bnr_c = app.add_subcommand("bnr", "spectral correspondence");
  bnr_c->add_option("op", bnr_op, "fwd | inv | roundtrip")->required()->check(CLI::IsMember({"fwd", "inv", "roundtrip"}));
  conn_opt(bnr_c);
  bnr_c->add_option("--s", s_arg, "quadratic differential");
  bnr_c->add_option("--D", d_arg, "divisor {u, v, n_inf}");
  auto* fam_c = app.add_subcommand("family", "connection of the one-parameter family");
  fam_c->add_option("--t", t_str, "parameter t");
  fam_c->add_option("--c1", c1_str);
  fam_c->add_option("--c2", c2_str);
  fam_c->add_option("--u2", u2_str);
  auto* lim_c = app.add_subcommand("family-limit", "limit of App as t -> 0");
  lim_c->add_option("--c1", c1_str);
  lim_c->add_option("--c2", c2_str);
  lim_c->add_option("--u2", u2_str);
  auto* sym_c = app.add_subcommand("sym2", "symmetric square connection on P^2");
  conn_opt(sym_c);
  auto* inc_c = app.add_subcommand("incidence", "predicates of the a- and b-planes");
  inc_c->add_option("op", inc_op, "check | gamma")->check(CLI::IsMember({"check", "gamma"}));
  inc_c->add_option("--a", a_arg, "point [a0, a1, a2]");
  inc_c->add_option("--b", b_arg, "point [b0, b1, b2]");
  inc_c->add_option("--q", q_str, "parameter for gamma");
  auto* sweep_c = app.add_subcommand("sweep", "randomized property sweep");
  sweep_c->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(sweep_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Config cfg = load_config(config_path);
  if (seed_set) cfg.seed = seed;
  if (n > 0) cfg.n = n;
  auto qarg = [](const std::string& s, const Q& def) { return s.empty() ? def : q_from_json(json(s)); };
  auto conn = [&]() { return connection_from_json(read_json(conn_arg), cfg.data); };

  auto* sc = app.get_subcommands().front();
  Report rep(sc->get_name());
  auto t0 = std::chrono::steady_clock::now();

  if (sc == validate_c) {
    auto ec = conn();
    rep.input("connection", to_json(ec));
    auto v = validate(ec);
    for (auto& [name, ok] : v.checks) rep.check(name, ok);
  } else if (sc == residues_c) {
    auto ec = conn();
    rep.input("connection", to_json(ec));
    json rs = json::array();
    Q trace_sum(0);
    for (int i = 0; i < 5; ++i) {
      Mat2<Q> R = residue_matrix(ec, i);
      trace_sum += R(0, 0) + R(1, 1);
      rs.push_back(json{{"pole", to_json(ec.data.poles[static_cast<size_t>(i)])}, {"residue", to_json(R)},
                        {"trace", to_json(R(0, 0) + R(1, 1))}, {"det", to_json(det2<Q>(R))},
                        {"expected_eigenvalues", json::array({to_json(ec.conn.eps * ec.nu_plus(i)), to_json(ec.conn.eps * ec.nu_minus(i))})}});
      Q a = ec.conn.eps * ec.nu_plus(i), b = ec.conn.eps * ec.nu_minus(i);
      rep.check("eigenvalues[" + std::to_string(i) + "]", R(0, 0) + R(1, 1) == a + b && det2<Q>(R) == a * b);
    }
    rep.output("residues", rs);
    rep.output("trace_sum", to_json(trace_sum));
    rep.check("fuchs", trace_sum == -ec.conn.eps * Q(ec.conn.d1 + ec.conn.d2));
  } else if (sc == app_c || sc == appbun_c) {
    auto ec = conn();
    rep.input("connection", to_json(ec));
    auto s = sigma_from(sigma_arg, ec);
    rep.input("sigma", json::array({to_json(s.p1), to_json(s.p2)}));
    ProjPoint a = parconn::app(ec, s);
    auto roots = app_roots(a);
    rep.output("app", to_json(a));
    json rj = json::array();
    for (auto& r : roots.roots) rj.push_back(to_json(r));
    rep.output("roots", roots.split ? rj : json("not split over Q"));
    if (sc == appbun_c) {
      auto [a2, b] = app_bun(ec, s);
      rep.output("bun", to_json(b));
      rep.output("pairing", to_json(dot(a2, b)));
      rep.output("on_sigma", on_sigma(a2, b));
    }
  } else if (sc == bun_c || sc == stab_c || sc == classify_c) {
    auto pb = bundle_from_json(read_json(bundle_arg), cfg.data.poles);
    rep.input("bundle", to_json(pb));
    if (sc == bun_c) {
      rep.output("bun", to_json(bun_map(pb)));
    } else if (sc == stab_c) {
      Weights w = weights_arg.empty() ? cfg.weights : weights_from(read_json(weights_arg.front() == '[' ? weights_arg : "\"" + weights_arg + "\""));
      json wj = json::array();
      for (auto& x : w) wj.push_back(to_json(x));
      rep.input("weights", wj);
      auto st = is_w_stable(pb, w);
      rep.output("stable", st.stable);
      rep.output("min_index", to_json(st.min_index));
      if (st.witness) rep.output("witness", json{{"e", st.witness->e}, {"p1", to_json(st.witness->p1)}, {"p2", to_json(st.witness->p2)}});
    } else {
      rep.output("classification", to_json(classify_unstable(pb)));
    }
  } else if (sc == elm_c) {
    auto ec = conn();
    rep.input("connection", to_json(ec));
    auto out = elm_op == "minus" ? elm_minus(ec, pole) : elm_plus(ec, pole);
    rep.output("connection", to_json(out));
    Mat2<Q> R = residue_matrix(out, pole);
    rep.output("residue", to_json(R));
    auto v = validate(out);
    for (auto& [name, ok] : v.checks) rep.check(name, ok);
  } else if (sc == spec_c) {
    auto s = quad_from(s_arg, cfg);
    rep.input("s", to_json(s));
    rep.output("curve", to_json(spectral_curve(s)));
  } else if (sc == jac_c) {
    auto s = quad_from(s_arg, cfg);
    rep.input("s", to_json(s));
    auto C = spectral_curve(s);
    auto div = [&](const std::string& arg, const char* name) {
      if (arg.empty()) throw Error(ErrorCode::ParseError, std::string("missing --") + name);
      auto D = divisor_from_json(read_json(arg));
      rep.input(name, to_json(D));
      if (!is_valid_divisor(D, C)) throw Error(ErrorCode::InvalidInput, std::string("--") + name + " is not a Mumford divisor on the curve");
      return D;
    };
    if (jac_op == "torsion") {
      json ts = json::array();
      for (auto& D : two_torsion(C)) ts.push_back(to_json(D));
      rep.output("count", ts.size());
      rep.output("classes", ts);
    } else if (jac_op == "add") {
      rep.output("sum", to_json(cantor_add(div(a_arg, "a"), div(b_arg, "b"), C)));
    } else if (jac_op == "neg") {
      rep.output("neg", to_json(cantor_neg(div(a_arg, "a"), C)));
    } else if (jac_op == "mul") {
      rep.output("product", to_json(cantor_mul(k_mul, div(a_arg, "a"), C)));
    } else {
      rep.output("reduced", to_json(cantor_reduce(div(a_arg, "a"), C)));
    }
  } else if (sc == bnr_c) {
    if (bnr_op == "fwd") {
      auto ec = conn();
      rep.input("connection", to_json(ec));
      auto fw = bnr_forward(ec);
      rep.output("s", to_json(fw.s));
      rep.output("D", to_json(fw.D));
    } else if (bnr_op == "inv") {
      auto s = quad_from(s_arg, cfg);
      if (d_arg.empty()) throw Error(ErrorCode::ParseError, "missing --D");
      auto D = divisor_from_json(read_json(d_arg));
      rep.input("s", to_json(s));
      rep.input("D", to_json(D));
      auto th = bnr_inverse(s, D, cfg.data);
      rep.output("connection", to_json(th));
      rep.check("det = s", det_higgs(th).s == s.s());
    } else {
      int cnt = cfg.n > 0 ? cfg.n : 20;
      auto r = sweep_bnr(cfg.seed, cnt);
      rep.input("seed", cfg.seed);
      rep.input("n", cnt);
      rep.output("detail", r.detail);
      rep.check("roundtrip", r.pass);
    }
  } else if (sc == fam_c || sc == lim_c) {
    FamilyParams fp{qarg(c1_str, c1), qarg(c2_str, c2), qarg(u2_str, u2)};
    rep.input("c1", to_json(fp.c1));
    rep.input("c2", to_json(fp.c2));
    rep.input("u2", to_json(fp.u2));
    if (sc == fam_c) {
      Q t = qarg(t_str, t_val);
      rep.input("t", to_json(t));
      auto ec = family_connection(t, fp, cfg.data);
      rep.output("connection", to_json(ec));
      for (auto& [name, ok] : validate(ec).checks) rep.check(name, ok);
    } else {
      auto [q1, q2] = family_limit_app(fp, cfg.data);
      Q closed = family_limit_closed_form(fp, cfg.data);
      rep.output("q1", to_json(q1));
      rep.output("q2", to_json(q2));
      rep.output("closed_form_q2", to_json(closed));
      rep.check("q1 = t1", q1 == cfg.data.poles[2].value());
      rep.check("q2 = closed form", q2 == closed);
    }
  } else if (sc == sym_c) {
    auto ec = normalize_connection(conn());
    rep.input("connection", to_json(ec));
    auto s2 = sym2(ec);
    rep.output("sym2", to_json(s2));
    rep.check("flat", is_flat(s2));
    Rng rng(cfg.seed);
    json res = json::array();
    for (int i = 0; i < 5; ++i) {
      auto r = residue_along_Zi(s2, i, rng);
      json cp = json::array();
      for (auto& c : r.charpoly) cp.push_back(to_json(c));
      res.push_back(cp);
      Q n2 = ec.data.nu[static_cast<size_t>(i)] * ec.data.nu[static_cast<size_t>(i)];
      rep.check("charpoly Z_" + std::to_string(i), r.charpoly == std::vector<Q>{n2 * n2, Q(0), Q(-2) * n2, Q(0), Q(1)});
    }
    rep.output("residue_charpolys", res);
  } else if (sc == inc_c) {
    if (inc_op == "gamma") {
      Q q = qarg(q_str, Q(0));
      auto g = gamma(q);
      rep.input("q", to_json(q));
      rep.output("a", to_json(g.first));
      rep.output("b", to_json(g.second));
      rep.check("gamma equations", on_gamma(g.first, g.second));
    } else {
      if (a_arg.empty() || b_arg.empty()) throw Error(ErrorCode::ParseError, "incidence check needs --a and --b");
      auto a = projpoint_from_json(read_json(a_arg), PlaneRole::A), b = projpoint_from_json(read_json(b_arg), PlaneRole::B);
      rep.input("a", to_json(a));
      rep.input("b", to_json(b));
      auto norm = normalize_poles(cfg.data.poles);
      ProjPoint an = norm.map_a(a), bn = norm.map_b(b);
      json table{{"on_delta", on_delta(a)}, {"on_pi", on_pi(b)}, {"on_sigma", on_sigma(a, b)}, {"on_gamma", on_gamma(a, b)}};
      json di = json::array(), dp = json::array(), pij = json::object();
      for (int i = 0; i < 5; ++i) {
        const Q& t = norm.poles[static_cast<size_t>(i)].value();
        di.push_back(on_delta_i(an, t));
        dp.push_back(bn == d_point(t));
        for (int j = i + 1; j < 5; ++j)
          pij[std::to_string(i) + "," + std::to_string(j)] =
              json{{"a_is_delta_ij", an == delta_ij(t, norm.poles[static_cast<size_t>(j)].value())},
                   {"on_pi_ij", on_pi_ij(bn, t, norm.poles[static_cast<size_t>(j)].value())}};
      }
      table["on_delta_i"] = di;
      table["b_is_D_i"] = dp;
      table["pairs"] = pij;
      if (!norm.identity) table["normalized_by"] = "w = 1/(z - " + norm.c.str() + ")";
      rep.output("predicates", table);
    }
  } else if (sc == sweep_c) {
    auto r = run_sweep(suite, cfg.seed, cfg.n);
    rep.input("suite", suite);
    rep.input("seed", cfg.seed);
    rep.input("n", cfg.n);
    rep.output("criterion", r.id);
    rep.output("detail", r.detail);
    rep.check(r.name, r.pass);
  }
  if (!emit_plot_path.empty()) {
    emit_plot(emit_plot_path, cfg);
    rep.output("plot", emit_plot_path);
  }
  if (timing) rep.timing_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << rep.to_json(cfg).dump(indent) << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    bool malformed = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidInput;
    json j{{"ok", false}, {"error", error_name(e.code())}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return malformed ? 2 : 1;
  } catch (const json::exception& e) {
    json j{{"ok", false}, {"error", "ParseError"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 2;
  }
}
