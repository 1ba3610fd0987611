// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "skewnet/cohomology.hpp"
#include "skewnet/fixture.hpp"
#include "skewnet/pipeline.hpp"
#include "skewnet/point_search.hpp"
#include "skewnet/verify.hpp"

using namespace skewnet;
using skewnet::testing::smooth_net;

namespace {

constexpr int kFixtures = 5;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "FAILED: " << what << "; ";
    ok = ok && cond;
  }
};

ExactMatrix random_skew(const Field& f, std::mt19937_64& rng, long bound) {
  ExactMatrix m(f, 6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      m(i, j) = bound ? f.from_int(static_cast<long>(rng() % (2 * bound + 1)) - bound) : f.random(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

void ac1(Outcome& o) {
  std::mt19937_64 rng(1);
  const Field F = Field::prime(32003), Q = Field::rationals();
  int n = 0;
  for (int i = 0; i < 1000; ++i, ++n) {
    const auto m = random_skew(F, rng, 0);
    const auto pf = pfaffian_scalar(m);
    o.require(pf * pf == determinant(m), "Pf^2 = det over GF(32003)");
  }
  for (int i = 0; i < 100; ++i, ++n) {
    const auto m = random_skew(Q, rng, 9);
    const auto pf = pfaffian_scalar(m);
    o.require(pf * pf == determinant(m), "Pf^2 = det over QQ");
  }
  for (int i = 0; i < 200; ++i) {
    const auto m = random_skew(F, rng, 0);
    ExactMatrix P(F, 6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) P(r, c) = F.random(rng);
    o.require(pfaffian_scalar(P.transpose() * m * P) == determinant(P) * pfaffian_scalar(m), "Pf(P^T m P) = det(P) Pf(m)");
  }
  o.detail << n << " Pf^2 = det identities, 200 congruences";
}

void ac2(Outcome& o) {
  for (int s = 1; s <= kFixtures; ++s) {
    const ANet& net = smooth_net(s);
    const auto pf = pfaffian_hypersurface(net);
    const auto q = q_quartic_routes(net);
    std::size_t routes = 0;
    for (const auto& r : q.routes) routes += !r.is_zero() && r.normalized() == q.q;
    o.require(y_smooth(net).value == Tri::Yes, "fixture smooth");
    o.require(pf.is_homogeneous() && pf.degree() == 3, "Pf cubic");
    o.require(q.q.is_homogeneous() && q.q.degree() == 4, "Q quartic");
    o.require(q.consistent && routes == 6, "six division routes agree");
  }
  o.detail << kFixtures << " fixtures: deg Pf = 3, deg Q = 4, 6/6 routes";
}

void ac3(Outcome& o) {
  for (int s = 1; s <= kFixtures; ++s) {
    const auto t = charge2_instanton_table(smooth_net(s));
    o.require(t.verdict() == Status::Pass && t.at(0, 1).value == 6 && t.at(3, -3).value == 6, "charge-2 pattern");
    for (int p = 0; p <= 3; ++p)
      for (int tw = -3; tw <= 1; ++tw)
        if (!((p == 0 && tw == 1) || (p == 3 && tw == -3))) o.require(t.at(p, tw).value == 0, "zero cells");
  }
  for (std::size_t n : {4u, 5u, 6u}) {
    const ANet net = random_regular_net(1, 3, n, 6).net;
    const auto t = theta_table(net, -static_cast<int>(n), 1);
    o.require(t.verdict() == Status::Pass, "theta pattern at n = " + std::to_string(n));
  }
  o.detail << "charge-2 grid on " << kFixtures << " fixtures; theta pattern at (4,6), (5,6), (6,6)";
}

void ac4(Outcome& o) {
  for (int s = 1; s <= kFixtures; ++s) {
    const auto ideal = c_ideal(smooth_net(s));
    for (std::uint32_t p : {32003u, 32009u}) {
      Options opts;
      opts.prime = p;
      const auto h = fit_hilbert_polynomial(ideal, 1, opts);
      o.require(h.polynomial_text() == "25*t - 25" && h.degree == 25 && h.arithmetic_genus == 26,
                "HF = 25t - 25 over GF(" + std::to_string(p) + ")");
    }
  }
  o.detail << kFixtures << " fixtures x 2 primes: HP = 25*t - 25, deg 25, p_a 26";
}

void ac5(Outcome& o) {
  for (int s = 1; s <= kFixtures; ++s)
    for (std::uint32_t q : {2u, 3u}) {
      const Field f = Field::prime(q);
      const auto fc = check_field_consistency(smooth_net(s).reduce_to(f), f);
      o.require(fc.sets_equal && fc.sing_x.empty() && fc.kappa_y_on_x.empty(), "smooth fixture: both sets empty");
    }
  const ANet& deg = skewnet::testing::degenerate();
  std::size_t sizes = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::prime(q);
    const auto fc = check_field_consistency(deg.reduce_to(f), f);
    o.require(fc.sets_equal && !fc.sing_x.empty(), "degenerate: sets equal and nonempty");
    sizes += fc.sing_x.size();
  }
  o.detail << kFixtures << " smooth fixtures empty over GF(2), GF(3); degenerate net " << sizes << " singular points, all in X cap kappa(Y)";
}

void ac6(Outcome& o) {
  for (int s = 1; s <= kFixtures; ++s) {
    const ANet n7 = smooth_net(s).reduce_to(Field::prime(7));
    const NetCodes nc(n7);
    std::size_t lo = 6;
    const auto count = for_each_projective_point(6, *nc.F, [&](const std::vector<std::uint32_t>& v) {
      lo = std::min(lo, fq_rank(*nc.F, nc.fv(v)));
    });
    o.require(count == 19608 && lo >= 3, "rank f_v >= 3 on P^5(GF(7))");
    o.require(is_empty_projective(rank2_ideal(smooth_net(s))).state == Emptiness::Empty, "rank <= 2 ideal empty");
  }
  o.detail << kFixtures << " fixtures: min rank >= 3 on 19608 points, rank <= 2 ideal empty";
}

void ac7(Outcome& o) {
  std::size_t cps = 0, lines = 0, mc = 0;
  for (int s = 1; s <= kFixtures; ++s) {
    const auto found = search_c_points(smooth_net(s));
    o.require(!found.points.empty(), "C-point found");
    for (const auto& c : found.points) {
      ++cps;
      const ANet net = smooth_net(s).reduce_to(c.field);
      const auto phi = phi_fiber(net, c.c);
      o.require(phi.line.has_value(), "phi fiber is a line");
      if (phi.line) {
        const auto xi = x_ideal(net);
        for (const auto& [a, b] : p1_points(c.field, 3)) o.require(xi.vanishes_at(phi.line->point_at(a, b).coords), "L_c on X");
      }
      const auto ker = psi_fiber(net, c.c);
      o.require(ker.size() == 2, "psi fiber is a line");
      if (ker.size() != 2) continue;
      const auto pf = pfaffian_hypersurface(net);
      for (const auto& [a, b] : p1_points(c.field, 4)) {
        Vector pt(5, c.field.zero());
        for (std::size_t i = 0; i < 5; ++i) pt[i] = a * ker[0][i] + b * ker[1][i];
        o.require(pf.evaluate(pt).is_zero(), "M_c on Y");
      }
      const auto sp = splitting_type_on_line(net, ker[0], ker[1]);
      o.require(sp.d1 == 1 && sp.d2 == 3, "M_c of type (1,3)");
    }
    const ANet n3 = smooth_net(s).reduce_to(Field::prime(3));
    if (is_regular(n3).verdict.value != Tri::Yes || y_smooth(n3).value != Tri::Yes) continue;
    for (const auto& l : lines_on_y(n3).lines) {
      ++lines;
      mc += l.is_mc;
      if (l.is_mc) o.require(l.split.d1 == 1 && l.split.d2 == 3, "M_c line (1,3)");
      else o.require(l.split.d1 == 2 && l.split.d2 == 2, "other line (2,2)");
    }
  }
  o.detail << cps << " C-points with L_c on X, M_c on Y of type (1,3); " << lines << " lines on Y over GF(3), " << mc
           << " of them M_c";
}

void ac8(Outcome& o) {
  const auto ex = exceptional_pair_check_y();
  o.require(ex.status == Status::Pass, "exceptional pair");
  std::size_t checked = 0;
  for (int s = 1; s <= kFixtures; ++s) {
    const auto found = search_c_points(smooth_net(s));
    for (const auto& c : found.points) {
      const ANet net = smooth_net(s).reduce_to(c.field);
      const auto ker = psi_fiber(net, c.c);
      if (ker.size() != 2) continue;
      const auto r = line_ideal_membership(net, ker[0], ker[1]);
      o.require(r.verdict.status == Status::Pass, "I_M cohomology vanishes: " + r.verdict.witness);
      ++checked;
    }
    o.require(charge2_instanton_table(smooth_net(s)).verdict() == Status::Pass, "charge-2 table");
  }
  o.detail << ex.witness << "; line ideal on " << checked << " M_c";
}

void ac9(Outcome& o) {
  std::uint64_t random = 0, exhaustive_w = 0;
  for (int s = 1; s <= kFixtures; ++s) {
    SamplePlan plan;
    plan.samples = 1000;
    const auto a = jw_pointwise(smooth_net(s), plan);
    const auto b = jw1_section_check(smooth_net(s), plan);
    o.require(a.verdict.status == Status::Pass, "jw: " + a.verdict.witness);
    o.require(b.verdict.status == Status::Pass, "jw1: " + b.verdict.witness);
    o.require(a.exhaustive.checked > 0 && a.exhaustive.on_w > 0, "GF(3) W-points enumerated");
    random += a.random.checked;
    exhaustive_w += a.exhaustive.on_w;
  }
  o.detail << random << " random pairs and " << exhaustive_w << " GF(3) W-points over " << kFixtures << " fixtures";
}

void ac10(Outcome& o) {
  Options opts;
  const ANet& net = smooth_net(1);
  const auto first = run_pipeline(net, opts).to_json().dump(2);
  const auto second = run_pipeline(net, opts).to_json().dump(2);
  opts.workers = 4;
  const auto threaded = run_pipeline(net, opts).to_json().dump(2);
  o.require(first == second, "two runs byte-identical");
  o.require(first == threaded, "workers = 1 and 4 byte-identical");
  o.detail << "3 reports of " << first.size() << " bytes, sha256 " << sha256_hex(first).substr(0, 16);
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all = {
      {"AC1", "Pfaffian identities", 10, ac1},
      {"AC2", "cubic and quartic degrees", 60 * kFixtures, ac2},
      {"AC3", "theta and charge-2 cohomology tables", 60, ac3},
      {"AC4", "Hilbert polynomial of C", 600, ac4},
      {"AC5", "sing(X) = X cap kappa(Y) by enumeration", 120, ac5},
      {"AC6", "rank f_v >= 3", 120, ac6},
      {"AC7", "line correspondences and splitting types", 300, ac7},
      {"AC8", "exceptional pair and line ideals", 60, ac8},
      {"AC9", "resolution fiber checks", 120, ac9},
      {"AC10", "deterministic reports", 600, ac10},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.detail << "; over the " << c.limit_seconds << " s bound";
    }
    failures += !o.ok;
    std::cout << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.title << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s) " << o.detail.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion(s) failed" : std::string("acceptance: all criteria pass"))
            << std::endl;
  return failures ? 1 : 0;
}
