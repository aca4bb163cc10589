#include "parconn/sweeps.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "parconn/apparent.hpp"
#include "parconn/incidence.hpp"
#include "parconn/spectral.hpp"
#include "parconn/symprod.hpp"

namespace parconn {

using P = Poly<Q>;
using RF = RatFun<Q>;

namespace {

using Body = std::function<bool(std::ostringstream&)>;

CriterionResult timed(int id, const char* name, double limit, const Body& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.limit_seconds = limit;
  std::ostringstream detail;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = body(detail);
  } catch (const Error& e) {
    r.pass = false;
    detail << " unexpected " << error_name(e.code()) << ": " << e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    detail << " unexpected exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > limit) {
    r.pass = false;
    detail << " (over the time limit)";
  }
  r.detail = detail.str();
  return r;
}

SpectralData<Q> sample_data(Rng& rng, int k) {
  if (k % 4 == 0) return default_spectral_data();
  return random_spectral_data<Q>(rng, k % 4 != 3);
}

// a . D(t): the quadric a vanishes at t
bool quad_vanishes(const ProjPoint& a, const P1Point<Q>& t) {
  if (t.is_inf()) return a[2].is_zero();
  return on_delta_i(a, t.value());
}

std::array<Q, 3> linear_form(const P1Point<Q>& t) {
  if (t.is_inf()) return {Q(1), Q(0), Q(0)};
  return {-t.value(), Q(1), Q(0)};
}

// quadric with roots t_i, t_j
ProjPoint pair_quadric(const P1Point<Q>& ti, const P1Point<Q>& tj) {
  auto a = linear_form(ti), b = linear_form(tj);
  return ProjPoint(a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]);
}

RMat2<Q> random_combination(Rng& rng, const std::vector<RMat2<Q>>& basis) {
  RMat2<Q> th = RMat2<Q>::Zero();
  for (auto& b : basis) th += b * RF(rng.nonzero_rational(5, 3));
  return th;
}

}  // namespace

// 1. App x Bun lands on the incidence variety for Higgs fields and off it for eps = 1
CriterionResult sweep_incidence(std::uint64_t seed, int n) {
  const int n_higgs = n > 0 ? n : 1000, n_conn = n > 0 ? std::max(1, n / 5) : 200;
  return timed(1, "incidence App x Bun on Higgs fields", 60, [&](std::ostringstream& out) {
    int on = 0, skipped = 0;
    for (int k = 0; k < n_higgs; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = sample_data(rng, k);
      auto pb = random_chart_bundle(rng, data.poles);
      auto basis = higgs_space(pb);
      if (basis.size() != 2) {
        out << "higgs space dim " << basis.size() << " at sample " << k;
        return false;
      }
      auto ec = higgs_connection(pb, data, random_combination(rng, basis));
      ProjPoint a;
      try {
        a = app(ec);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotCyclic) throw;
        ++skipped;
        continue;
      }
      ProjPoint b = bun_map(pb);
      if (!dot(a, b).is_zero()) {
        out << "a.b != 0 at sample " << k;
        return false;
      }
      ++on;
    }
    int off = 0, tried = 0;
    for (int k = 0; off < n_conn && k < 20 * n_conn; ++k) {
      Rng rng = Rng::child(seed ^ 0xe1e1u, static_cast<std::uint64_t>(k));
      auto data = sample_data(rng, k);
      auto m = elm_minus(random_fuchsian(data, Q(1), rng), 4);
      if (!in_w0_chart(underlying_bundle(m))) continue;
      ++tried;
      if (dot(app(m), bun_map(underlying_bundle(m))).is_zero()) {
        out << "eps = 1 sample " << k << " lies on the incidence";
        return false;
      }
      ++off;
    }
    out << on << " Higgs samples with a.b = 0 (" << skipped << " non-cyclic skipped); " << off << "/" << tried
        << " eps = 1 samples off";
    return on >= n_higgs - skipped && on >= (n > 0 ? 1 : 1000) && off >= n_conn;
  });
}

// 2. exact limit of App along the family against the closed form
CriterionResult sweep_family_limit(std::uint64_t seed, int n) {
  const int n_params = n > 0 ? n : 60;
  return timed(2, "family limit of App", 30, [&](std::ostringstream& out) {
    const int configs = 4;
    int ok = 0, degenerate = 0;
    for (int c = 0; c < configs; ++c) {
      Rng crng = Rng::child(seed, static_cast<std::uint64_t>(1000 + c));
      SpectralData<Q> data;
      for (;;) {
        data = random_spectral_data<Q>(crng, true);
        Q t1(crng.uniform_int(-9, 9), crng.uniform_int(1, 4)), t2(crng.uniform_int(-9, 9), crng.uniform_int(1, 4));
        if (t1 == t2 || t1 == Q(0) || t1 == Q(1) || t2 == Q(0) || t2 == Q(1)) continue;
        data.poles = {P1Point<Q>(Q(0)), P1Point<Q>(Q(1)), P1Point<Q>(t1), P1Point<Q>(t2), P1Point<Q>::infinity()};
        if (data.violations().empty()) break;
      }
      for (int k = 0; k < (n_params + configs - 1) / configs; ++k) {
        Rng rng = Rng::child(seed, static_cast<std::uint64_t>(c * 100000 + k));
        FamilyParams fp{rng.small_rational(7, 4), rng.small_rational(7, 4), rng.small_rational(7, 4)};
        Q closed;
        std::pair<Q, Q> lim;
        try {
          closed = family_limit_closed_form(fp, data);
          lim = family_limit_app(fp, data);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateLimit) throw;
          ++degenerate;
          continue;
        }
        if (lim.first != data.poles[2].value() || lim.second != closed) {
          out << "mismatch at config " << c << " sample " << k << ": q2 = " << lim.second.str() << " vs " << closed.str();
          return false;
        }
        ++ok;
      }
    }
    out << ok << " exact matches over " << configs << " pole sets (" << degenerate << " degenerate skipped)";
    return ok >= (n > 0 ? 1 : 50);
  });
}

// 3. spectral correspondence round trip
CriterionResult sweep_bnr(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 100;
  return timed(3, "BNR round trip", 120, [&](std::ostringstream& out) {
    int ok = 0, unstable = 0;
    for (int k = 0; k < count; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = k % 2 ? random_spectral_data<Q>(rng, true) : default_spectral_data();
      auto [s, D] = random_bnr_pair(rng, data.poles);
      auto C = spectral_curve(s);
      auto theta = bnr_inverse(s, D, data);
      if (theta.conn.d1 != 0) ++unstable;
      if (det_higgs(theta).s != s.s()) {
        out << "det mismatch at sample " << k;
        return false;
      }
      // det(y - Pi A) = y^2 - f
      P pi = s.finite_product();
      RF tr = theta.conn.A(0, 0) + theta.conn.A(1, 1);
      RF det = theta.conn.A(0, 0) * theta.conn.A(1, 1) - theta.conn.A(0, 1) * theta.conn.A(1, 0);
      if (!tr.is_zero() || det * RF(pi * pi) != RF(-C.f)) {
        out << "characteristic polynomial mismatch at sample " << k;
        return false;
      }
      auto fw = bnr_forward(theta);
      if (fw.D != cantor_reduce(D, C) || fw.s.P != s.P) {
        out << "round trip mismatch at sample " << k << ": " << fw.D.str() << " vs " << D.str();
        return false;
      }
      ++ok;
    }
    out << ok << " classes round-tripped (" << unstable << " with O(1) + O(-2))";
    return ok == count;
  });
}

// 4. Jacobian group law
CriterionResult sweep_jacobian(std::uint64_t seed, int n) {
  const int pairs = n > 0 ? n : 500, triples = n > 0 ? n : 500, oracle_min = n > 0 ? std::max(1, n / 10) : 50;
  return timed(4, "Jacobian group law", 120, [&](std::ostringstream& out) {
    auto poles = default_spectral_data().poles;
    const int curves = 10;
    std::vector<TestCurve> tcs;
    for (int c = 0; c < curves; ++c) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(50000 + c));
      tcs.push_back(jacobian_test_curve(rng, c % 2 ? random_spectral_data<Q>(rng, true).poles : poles));
    }
    for (int k = 0; k < pairs; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      const auto& tc = tcs[static_cast<size_t>(k % curves)];
      auto a = random_class(rng, tc), b = random_class(rng, tc);
      auto O = identity_divisor(0);
      if (cantor_add(a, O, tc.C) != a || cantor_add(a, cantor_neg(a, tc.C), tc.C) != O ||
          cantor_add(a, b, tc.C) != cantor_add(b, a, tc.C)) {
        out << "pair law fails at sample " << k;
        return false;
      }
    }
    int compared = 0;
    std::map<std::string, int> skips;
    for (int k = 0; k < triples; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(100000 + k));
      const auto& tc = tcs[static_cast<size_t>(k % curves)];
      auto a = random_class(rng, tc), b = random_class(rng, tc), c = random_class(rng, tc);
      auto left = cantor_add(cantor_add(a, b, tc.C), c, tc.C);
      if (left != cantor_add(a, cantor_add(b, c, tc.C), tc.C)) {
        out << "associativity fails at sample " << k;
        return false;
      }
      auto r = oracle_sum3(a, b, c, tc.C);
      if (!r.ok) {
        ++skips[r.skip_reason];
        continue;
      }
      if (r.sum != left) {
        out << "oracle disagrees at sample " << k;
        return false;
      }
      ++compared;
    }
    auto C = spectral_curve(make_quad_diff(poles, Q(4), Q(-1)));
    auto T = two_torsion(C);
    std::set<std::string> keys;
    for (auto& t : T) keys.insert(t.str());
    bool group = T.size() == 16 && keys.size() == 16;
    for (auto& x : T) {
      if (cantor_add(x, x, C) != identity_divisor(0)) group = false;
      for (auto& y : T)
        if (!keys.count(cantor_add(x, y, C).str())) group = false;
    }
    out << pairs << " pairs, " << triples << " triples, " << compared << " oracle checks";
    for (auto& [why, cnt] : skips) out << ", " << cnt << " skipped (" << why << ")";
    out << "; two-torsion " << T.size() << (group ? " classes forming (Z/2)^4" : " classes, group check failed");
    return compared >= oracle_min && group;
  });
}

// 5. the sixteen odd unstable shapes
CriterionResult sweep_taxonomy(std::uint64_t seed, int n) {
  (void)seed;
  const int configs = n > 0 ? n : 3;
  return timed(5, "unstable taxonomy", 60, [&](std::ostringstream& out) {
    for (int c = 0; c < configs; ++c) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(c));
      auto poles = c == 0 ? default_spectral_data().poles : random_spectral_data<Q>(rng, c % 2 == 1).poles;
      auto data = default_spectral_data();
      data.poles = poles;
      std::set<std::vector<int>> labels;
      for (auto& pb : direction_patterns(poles)) {
        auto cls = classify_unstable(pb);
        if (cls.kind != Classification::Odd) continue;
        if (!labels.insert(cls.label).second) {
          out << "label " << cls.str() << " seen twice";
          return false;
        }
        auto basis = higgs_space(pb);
        auto st = is_w_stable(pb, central_weights());
        if (basis.empty() || st.stable || !(st.min_index < Q(0)) || !st.witness ||
            !(stability_index(pb, *st.witness, central_weights()) < Q(0))) {
          out << "class " << cls.str() << ": no Higgs field or no destabilizing witness";
          return false;
        }
        // a cyclic Higgs field for sigma = e1
        RMat2<Q> th = RMat2<Q>::Zero();
        for (auto& b : basis) th += b * RF(rng.nonzero_rational(5, 3));
        if (th(1, 0).is_zero()) {
          out << "class " << cls.str() << ": no cyclic Higgs field";
          return false;
        }
        ProjPoint a = app(higgs_connection(pb, data, th), {P(1), P()});
        bool ok;
        const auto& L = cls.label;
        if (L.size() == 1) {
          ok = quad_vanishes(a, poles[static_cast<size_t>(L[0])]);
        } else if (L.size() == 3) {
          std::vector<int> rest;
          for (int i = 0; i < 5; ++i)
            if (std::find(L.begin(), L.end(), i) == L.end()) rest.push_back(i);
          ok = a == pair_quadric(poles[static_cast<size_t>(rest[0])], poles[static_cast<size_t>(rest[1])]);
        } else {
          ok = on_delta(a);
        }
        if (!ok) {
          out << "class " << cls.str() << ": App " << a.str() << " violates the constraint";
          return false;
        }
      }
      if (labels.size() != 16) {
        out << "found " << labels.size() << " odd classes at config " << c;
        return false;
      }
    }
    out << "16 odd classes with Higgs fields, witnesses and App constraints on " << configs << " pole sets";
    return true;
  });
}

// 6. residues, Fuchs relation and elementary transformations
CriterionResult sweep_residues(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 100;
  return timed(6, "residue bookkeeping and elementary transformations", 30, [&](std::ostringstream& out) {
    for (int k = 0; k < count; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = sample_data(rng, k);
      Q eps = k % 3 == 0 ? Q(1) : rng.nonzero_rational(5, 3);
      auto ec = random_fuchsian(data, eps, rng);
      if (!validate(ec).ok()) {
        out << "validation failed at sample " << k;
        return false;
      }
      Mat2<Q> sum = Mat2<Q>::Zero();
      for (int i = 0; i < 5; ++i) {
        Mat2<Q> R = residue_matrix(ec, i);
        const Q& nu = data.nu[static_cast<size_t>(i)];
        if (!(R(0, 0) + R(1, 1)).is_zero() || det2<Q>(R) != -(eps * nu) * (eps * nu)) {
          out << "residue eigenvalues wrong at sample " << k << " pole " << i;
          return false;
        }
        sum += R;
      }
      if (!(sum(0, 0) + sum(1, 1)).is_zero()) {
        out << "Fuchs relation fails at sample " << k;
        return false;
      }
      int i = k % 5;
      auto m = elm_minus(ec, i);
      Mat2<Q> R = residue_matrix(m, i);
      const Q& nu = data.nu[static_cast<size_t>(i)];
      // eigenvalues eps nu and eps (1 - nu)
      if (R(0, 0) + R(1, 1) != eps || det2<Q>(R) != eps * eps * nu * (Q(1) - nu) || !validate(m).ok()) {
        out << "elm_minus eigenvalues wrong at sample " << k;
        return false;
      }
      Q fuchs(0);
      for (int j = 0; j < 5; ++j) {
        Mat2<Q> Rj = residue_matrix(m, j);
        fuchs += Rj(0, 0) + Rj(1, 1);
      }
      if (fuchs != -eps * Q(m.conn.d1 + m.conn.d2)) {
        out << "Fuchs relation fails after elm_minus at sample " << k;
        return false;
      }
      if (!gauge_equivalent(ec, elm_plus(m, i))) {
        out << "elm_plus o elm_minus not gauge trivial at sample " << k;
        return false;
      }
    }
    out << count << " connections: residues, Fuchs sums, elm eigenvalues and elm round trips exact";
    return true;
  });
}

// 7. irreducible iff det theta != 0
CriterionResult sweep_irreducibility(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 200;
  return timed(7, "Higgs irreducibility criterion", 30, [&](std::ostringstream& out) {
    int red = 0, irr = 0;
    for (int k = 0; k < count; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = sample_data(rng, k / 2);
      bool reducible = k % 2 == 0;
      auto ec = random_trivial_higgs(data, reducible, rng);
      bool irreducible = is_irreducible(ec);
      bool det_nonzero = !det_higgs(ec).s.is_zero();
      if (irreducible != det_nonzero || irreducible == reducible) {
        out << "criterion fails at sample " << k;
        return false;
      }
      (irreducible ? irr : red)++;
    }
    out << red << " reducible and " << irr << " irreducible samples agree with det";
    return true;
  });
}

// 8. symmetric square: flat, residues +-nu_i twice
CriterionResult sweep_sym2(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 20;
  return timed(8, "symmetric square flatness and residues", 120, [&](std::ostringstream& out) {
    for (int k = 0; k < count; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = sample_data(rng, k);
      auto ec = normalize_connection(random_fuchsian(data, Q(1), rng));
      auto sc = sym2(ec);
      if (!is_flat(sc)) {
        out << "curvature nonzero at sample " << k;
        return false;
      }
      for (int i = 0; i < 5; ++i) {
        Q n2 = data.nu[static_cast<size_t>(i)] * data.nu[static_cast<size_t>(i)];
        std::vector<Q> want{n2 * n2, Q(0), Q(-2) * n2, Q(0), Q(1)};
        if (residue_along_Zi(sc, i, rng).charpoly != want) {
          out << "residue along Z_" << i << " wrong at sample " << k;
          return false;
        }
      }
    }
    out << count << " connections: zero curvature, char poly (x^2 - nu_i^2)^2 along every Z_i";
    return true;
  });
}

// 9. identities in the two planes
CriterionResult sweep_plane(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 200;
  return timed(9, "incidence-plane identities", 10, [&](std::ostringstream& out) {
    Rng rng(seed);
    int checked = 0;
    for (int k = 0; k < count; ++k) {
      Q t = rng.small_rational(12, 5), u = rng.small_rational(12, 5), q = rng.small_rational(12, 5);
      Q lam = rng.small_rational(9, 4);
      if (t == u) continue;
      ProjPoint a = delta_tangency(t);
      // tangency of multiplicity two, at the right point
      auto tr = tangency_restriction(t);
      const P& r = tr.restricted;
      bool tangent = on_delta(a) && on_delta_i(a, t) &&
                     (r.coeff(1) * r.coeff(1) - Q(4) * r.coeff(0) * r.coeff(2)).is_zero() && !r.is_zero();
      if (tangent && r.degree() == 2) {
        Q l0 = -r.coeff(1) / (Q(2) * r.coeff(2));
        tangent = ProjPoint(tr.p[0] + l0 * tr.r[0], tr.p[1] + l0 * tr.r[1], tr.p[2] + l0 * tr.r[2]) == a.with_role(PlaneRole::Untagged);
      }
      ProjPoint dij = delta_ij(t, u);
      bool pts = on_delta_i(dij, t) && on_delta_i(dij, u) && on_pi(d_point(t)) && on_pi_ij(d_point(t), t, u) &&
                 on_pi_ij(d_point(u), t, u);
      // duality: Delta_t = {a : a . D_t = 0}, Pi_tu = {b : b . Delta_tu = 0}; sample points on each line
      ProjPoint on_line(-t - lam * t * t, Q(1), lam);
      ProjPoint b_line(Q(1), lam, (t + u) * lam - t * u);
      bool dual = on_delta_i(on_line, t) && on_sigma(on_line, d_point(t)) && on_pi_ij(b_line, t, u) && on_sigma(dij, b_line);
      auto g = gamma(q);
      bool gam = on_gamma(g.first, g.second) && on_sigma(g.first, g.second) && on_delta(g.first) &&
                 (g.first[0] * g.second[0] == g.first[2] * g.second[2]) &&
                 (Q(2) * g.first[2] * g.second[2] + g.first[1] * g.second[1]).is_zero();
      if (!(tangent && pts && dual && gam)) {
        out << "identity fails at t = " << t.str() << ", u = " << u.str() << ", q = " << q.str();
        return false;
      }
      ++checked;
    }
    auto g0 = gamma(Q(0));
    bool base = g0.first == ProjPoint(Q(0), Q(0), Q(1)) && g0.second == ProjPoint(Q(1), Q(0), Q(0));
    out << checked << " parameter samples: tangency, Delta_ij, Pi, D_i, Pi_ij, Gamma and Sigma exact";
    return base && checked > 0;
  });
}

// 10. branch points and nodes of spectral curves
CriterionResult sweep_spectral(std::uint64_t seed, int n) {
  const int count = n > 0 ? n : 200;
  return timed(10, "spectral-curve branch locus and nodes", 10, [&](std::ostringstream& out) {
    auto def = spectral_curve(make_quad_diff(default_spectral_data().poles, Q(4), Q(-1)));
    P expect(1);
    for (int r = 0; r <= 4; ++r) expect = expect * P::linear_root(Q(r));
    if (def.f != expect) {
      out << "default curve is " << def.f.str();
      return false;
    }
    int nodal = 0, smooth = 0;
    std::set<int> nodal_poles;
    auto key = [](const P1Point<Q>& p) { return p.str(); };
    for (int k = 0; k < count + 5; ++k) {
      Rng rng = Rng::child(seed, static_cast<std::uint64_t>(k));
      auto data = k % 3 == 0 ? default_spectral_data() : random_spectral_data<Q>(rng, k % 3 == 1);
      QuadDiff s{data.poles, P()};
      if (k < 5) {
        // tau on pole k
        const auto& t = data.poles[static_cast<size_t>(k)];
        s.P = t.is_inf() ? P(rng.nonzero_rational(5, 3)) : P::linear_root(t.value()) * P(rng.nonzero_rational(5, 3));
      } else {
        do {
          s.P = P(std::vector<Q>{rng.small_rational(6, 3), rng.small_rational(6, 3)});
        } while (s.P.is_zero());
      }
      auto C = spectral_curve(s);
      std::multiset<std::string> want, got;
      for (auto& t : data.poles) want.insert(key(t));
      want.insert(key(C.tau));
      for (auto& b : C.branch) got.insert(key(b));
      bool tau_in_D = false;
      for (auto& t : data.poles) tau_in_D = tau_in_D || t == C.tau;
      if (want != got || C.nodal != tau_in_D) {
        out << "branch law fails at sample " << k;
        return false;
      }
      if (C.nodal) {
        ++nodal;
        nodal_poles.insert(C.node_index);
      } else {
        ++smooth;
      }
    }
    out << "default curve z(z-1)(z-2)(z-3)(z-4); " << smooth << " smooth and " << nodal << " nodal curves, nodes at "
        << nodal_poles.size() << " distinct marked points";
    return nodal_poles.size() == 5;
  });
}

std::vector<std::string> sweep_names() {
  return {"incidence", "family-limit", "bnr", "jacobian", "taxonomy", "residues", "irreducibility", "sym2", "plane", "spectral"};
}

CriterionResult run_sweep(const std::string& suite, std::uint64_t seed, int n) {
  static const std::map<std::string, CriterionResult (*)(std::uint64_t, int)> table{
      {"incidence", sweep_incidence}, {"family-limit", sweep_family_limit}, {"bnr", sweep_bnr},
      {"jacobian", sweep_jacobian},   {"taxonomy", sweep_taxonomy},         {"residues", sweep_residues},
      {"irreducibility", sweep_irreducibility}, {"sym2", sweep_sym2},       {"plane", sweep_plane},
      {"spectral", sweep_spectral}};
  auto it = table.find(suite);
  if (it == table.end()) throw Error(ErrorCode::InvalidInput, "unknown sweep suite '" + suite + "'");
  return it->second(seed, n);
}

}  // namespace parconn
