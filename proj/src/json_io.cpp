#include "parconn/json_io.hpp"

namespace parconn {

using P = Poly<Q>;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Q& x) { return x.str(); }

Q q_from_json(const json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) bad("scalar must be a string \"p/q\" or an integer");
  try {
    return Q::parse(j.get<std::string>());
  } catch (const Error&) {
    bad("bad scalar '" + j.get<std::string>() + "'");
  }
}

json to_json(const P1Point<Q>& t) {
  if (t.is_inf()) return json{{"inf", true}};
  return to_json(t.value());
}

P1Point<Q> point_from_json(const json& j) {
  if (j.is_object()) {
    if (j.value("inf", false)) return P1Point<Q>::infinity();
    bad("point object must be {\"inf\": true}");
  }
  if (j.is_string() && j.get<std::string>() == "inf") return P1Point<Q>::infinity();
  return P1Point<Q>(q_from_json(j));
}

json to_json(const P& p) {
  json a = json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(to_json(p.coeff(k)));
  return a;
}

P poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an ascending coefficient array");
  std::vector<Q> c;
  for (auto& x : j) c.push_back(q_from_json(x));
  return P(c);
}

json to_json(const RatFun<Q>& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatFun<Q> ratfun_from_json(const json& j) {
  if (j.is_array()) return RatFun<Q>(poly_from_json(j));
  if (j.is_object()) {
    P den = j.contains("den") ? poly_from_json(j.at("den")) : P(1);
    if (den.is_zero()) bad("zero denominator");
    return RatFun<Q>(poly_from_json(field(j, "num")), den);
  }
  return RatFun<Q>(P(q_from_json(j)));
}

json to_json(const Vec2<Q>& v) { return json::array({to_json(v(0)), to_json(v(1))}); }

Vec2<Q> vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("direction must be a pair");
  Vec2<Q> v(q_from_json(j[0]), q_from_json(j[1]));
  if (v(0).is_zero() && v(1).is_zero()) bad("zero direction");
  return v;
}

json to_json(const Mat2<Q>& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}), json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const ProjPoint& p) { return json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

ProjPoint projpoint_from_json(const json& j, PlaneRole role) {
  if (!j.is_array() || j.size() != 3) bad("projective point must have three coordinates");
  try {
    return ProjPoint(q_from_json(j[0]), q_from_json(j[1]), q_from_json(j[2]), role);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad("projective point with all coordinates zero");
  }
}

json to_json(const Poly2& p) { return p.str(); }

json to_json(const RatFun2& r) { return json{{"num", r.num().str()}, {"den", r.den().str()}}; }

json to_json(const SpectralData<Q>& d) {
  json poles = json::array(), nu = json::array();
  for (int i = 0; i < 5; ++i) {
    poles.push_back(to_json(d.poles[static_cast<size_t>(i)]));
    nu.push_back(to_json(d.nu[static_cast<size_t>(i)]));
  }
  return json{{"poles", poles}, {"nu", nu}};
}

SpectralData<Q> spectral_data_from_json(const json& j) {
  const json& poles = field(j, "poles");
  const json& nu = field(j, "nu");
  if (!poles.is_array() || poles.size() != 5 || !nu.is_array() || nu.size() != 5) bad("need five poles and five exponents");
  SpectralData<Q> d;
  for (size_t i = 0; i < 5; ++i) {
    d.poles[i] = point_from_json(poles[i]);
    d.nu[i] = q_from_json(nu[i]);
  }
  return d;
}

json to_json(const EpsilonConnection<Q>& ec) {
  json m = json::array();
  for (int i = 0; i < 2; ++i) m.push_back(json::array({to_json(ec.conn.A(i, 0)), to_json(ec.conn.A(i, 1))}));
  json dirs = json::array();
  for (auto& l : ec.dirs) dirs.push_back(to_json(l));
  json j = to_json(ec.data);
  j["splitting"] = json::array({ec.conn.d1, ec.conn.d2});
  j["epsilon"] = to_json(ec.conn.eps);
  j["degree"] = ec.degree;
  j["mod_index"] = ec.mod_index;
  j["matrix"] = m;
  j["directions"] = dirs;
  return j;
}

EpsilonConnection<Q> connection_from_json(const json& j, const SpectralData<Q>& data) {
  EpsilonConnection<Q> ec;
  ec.data = data;
  if (j.contains("poles") || j.contains("nu")) {
    json d = {{"poles", j.contains("poles") ? j.at("poles") : to_json(data)["poles"]},
              {"nu", j.contains("nu") ? j.at("nu") : to_json(data)["nu"]}};
    ec.data = spectral_data_from_json(d);
  }
  const json& sp = field(j, "splitting");
  if (!sp.is_array() || sp.size() != 2 || !sp[0].is_number_integer() || !sp[1].is_number_integer()) bad("splitting must be [d1, d2]");
  ec.conn.d1 = sp[0].get<int>();
  ec.conn.d2 = sp[1].get<int>();
  ec.conn.eps = j.contains("epsilon") ? q_from_json(j.at("epsilon")) : Q(1);
  ec.degree = j.value("degree", ec.conn.d1 + ec.conn.d2 == -1 ? -1 : 0);
  ec.mod_index = j.value("mod_index", 4);
  const json& m = field(j, "matrix");
  if (!m.is_array() || m.size() != 2) bad("matrix must be 2x2");
  for (size_t r = 0; r < 2; ++r) {
    if (!m[r].is_array() || m[r].size() != 2) bad("matrix must be 2x2");
    for (size_t c = 0; c < 2; ++c) ec.conn.A(static_cast<int>(r), static_cast<int>(c)) = ratfun_from_json(m[r][c]);
  }
  const json& dirs = field(j, "directions");
  if (!dirs.is_array() || dirs.size() != 5) bad("need five directions");
  for (size_t i = 0; i < 5; ++i) ec.dirs[i] = vec2_from_json(dirs[i]);
  return ec;
}

json to_json(const ParabolicBundle& pb) {
  json dirs = json::array(), poles = json::array();
  for (auto& l : pb.dirs) dirs.push_back(to_json(l));
  for (auto& t : pb.poles) poles.push_back(to_json(t));
  return json{{"splitting", json::array({pb.d1, pb.d2})}, {"degree", pb.degree}, {"poles", poles}, {"directions", dirs}};
}

ParabolicBundle bundle_from_json(const json& j, const std::array<P1Point<Q>, 5>& poles) {
  ParabolicBundle pb;
  pb.poles = poles;
  if (j.contains("poles")) {
    const json& p = j.at("poles");
    if (!p.is_array() || p.size() != 5) bad("need five poles");
    for (size_t i = 0; i < 5; ++i) pb.poles[i] = point_from_json(p[i]);
  }
  if (j.contains("splitting")) {
    const json& sp = j.at("splitting");
    if (!sp.is_array() || sp.size() != 2) bad("splitting must be [d1, d2]");
    pb.d1 = sp[0].get<int>();
    pb.d2 = sp[1].get<int>();
  }
  pb.degree = j.value("degree", pb.d1 + pb.d2);
  const json& dirs = field(j, "directions");
  if (!dirs.is_array() || dirs.size() != 5) bad("need five directions");
  for (size_t i = 0; i < 5; ++i) pb.dirs[i] = normalize_dir<Q>(vec2_from_json(dirs[i]));
  return pb;
}

json to_json(const Classification& c) {
  json j{{"class", c.str()}};
  if (c.kind == Classification::Odd) j["label"] = c.label;
  return j;
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (auto& [name, ok] : r.checks) checks.push_back(json{{"name", name}, {"pass", ok}});
  return json{{"ok", r.ok()}, {"checks", checks}};
}

json to_json(const QuadDiff& s) {
  json poles = json::array();
  for (auto& t : s.poles) poles.push_back(to_json(t));
  return json{{"poles", poles}, {"P", to_json(s.P)}};
}

QuadDiff quad_diff_from_json(const json& j, const std::array<P1Point<Q>, 5>& poles) {
  QuadDiff s{poles, P()};
  if (j.contains("poles")) {
    const json& p = j.at("poles");
    if (!p.is_array() || p.size() != 5) bad("need five poles");
    for (size_t i = 0; i < 5; ++i) s.poles[i] = point_from_json(p[i]);
  }
  s.P = poly_from_json(field(j, "P"));
  return s;
}

json to_json(const SpectralCurve& C) {
  json branch = json::array();
  for (auto& b : C.branch) branch.push_back(to_json(b));
  json j{{"f", to_json(C.f)}, {"branch", branch}, {"tau", to_json(C.tau)}, {"nodal", C.nodal}, {"genus", C.genus},
         {"geometric_genus", C.geometric_genus}};
  if (C.nodal) {
    json nb = json::array();
    for (auto& b : C.normalization_branch) nb.push_back(to_json(b));
    j["node_index"] = C.node_index;
    j["normalization_f"] = to_json(C.normalization_f);
    j["normalization_branch"] = nb;
    j["node_square"] = to_json(C.node_square);
  }
  return j;
}

json to_json(const MumfordDivisor& D) { return json{{"u", to_json(D.u)}, {"v", to_json(D.v)}, {"n_inf", D.n_inf}}; }

MumfordDivisor divisor_from_json(const json& j) {
  MumfordDivisor D;
  D.u = poly_from_json(field(j, "u"));
  D.v = j.contains("v") ? poly_from_json(j.at("v")) : P();
  const json& n = field(j, "n_inf");
  if (!n.is_number_integer()) bad("n_inf must be an integer");
  D.n_inf = n.get<int>();
  if (D.u.is_zero()) bad("u must be nonzero");
  return D;
}

json to_json(const Sym2Connection& sc) {
  json o1 = json::array(), o2 = json::array();
  for (int i = 0; i < 4; ++i) {
    json r1 = json::array(), r2 = json::array();
    for (int k = 0; k < 4; ++k) {
      r1.push_back(sc.n1(i, k).str());
      r2.push_back(sc.n2(i, k).str());
    }
    o1.push_back(r1);
    o2.push_back(r2);
  }
  return json{{"denominator", sc.den.str()}, {"omega1_numerators", o1}, {"omega2_numerators", o2}};
}

}  // namespace parconn
