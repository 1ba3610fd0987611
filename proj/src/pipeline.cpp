#include "skewnet/pipeline.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "skewnet/cohomology.hpp"
#include "skewnet/correspondence.hpp"
#include "skewnet/fixture.hpp"
#include "skewnet/point_search.hpp"
#include "skewnet/verify.hpp"

namespace skewnet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].to_string();
  return s + ")";
}

std::string term_text(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  return MultiPoly::monomial(p.field(), p.nvars(), p.leading_exponent(), p.leading_coefficient()).to_string(var);
}

ordered_json poly_json(const MultiPoly& p, const std::string& var) {
  ordered_json j;
  j["degree"] = p.degree();
  j["terms"] = p.size();
  j["leading_term"] = term_text(p, var);
  j["text"] = p.to_string(var);
  return j;
}

ordered_json table_json(const CohomologyTable& t) {
  ordered_json j;
  j["name"] = t.name;
  j["t_min"] = t.t_min;
  j["t_max"] = t.t_max;
  ordered_json rows = ordered_json::array();
  for (int p = 0; p <= t.p_max; ++p) {
    ordered_json cells = ordered_json::array();
    for (int tw = t.t_min; tw <= t.t_max; ++tw) {
      const auto& c = t.at(p, tw);
      ordered_json cj;
      cj["t"] = tw;
      cj["value"] = c.value ? json(*c.value) : json(nullptr);
      cj["expected"] = c.expected ? json(*c.expected) : json(nullptr);
      cj["kind"] = to_string(c.kind);
      cj["provenance"] = c.provenance;
      cj["verdict"] = to_string(c.verdict);
      cells.push_back(std::move(cj));
    }
    rows.push_back({{"p", p}, {"cells", std::move(cells)}});
  }
  j["rows"] = std::move(rows);
  j["notes"] = t.notes;
  j["verdict"] = to_string(t.verdict());
  return j;
}

Status tri_status(Tri t) { return t == Tri::Yes ? Status::Pass : t == Tri::No ? Status::Fail : Status::Inconclusive; }

// Polynomial evaluation on element codes.
struct CodePoly {
  const Fq* F;
  std::vector<std::pair<Exponent, std::uint32_t>> terms;
  unsigned nvars, degree;

  explicit CodePoly(const MultiPoly& p) : F(&Fq::of(p.field())), nvars(p.nvars()), degree(static_cast<unsigned>(std::max(0, p.degree()))) {
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, F->encode(c));
  }
  std::uint32_t operator()(const std::vector<std::uint32_t>& x) const {
    std::vector<std::vector<std::uint32_t>> pw(nvars, std::vector<std::uint32_t>(degree + 1, 1));
    for (unsigned i = 0; i < nvars; ++i)
      for (unsigned k = 1; k <= degree; ++k) pw[i][k] = F->mul(pw[i][k - 1], x[i]);
    std::uint32_t s = 0;
    for (const auto& [e, c] : terms) {
      std::uint32_t m = c;
      for (unsigned i = 0; i < nvars && m; ++i)
        if (e[i]) m = F->mul(m, pw[i][e[i]]);
      s = F->add(s, m);
    }
    return s;
  }
};

class Context {
 public:
  Context(const ANet& net, const Options& opts) : net(net), opts(opts) {}

  const ANet& net;
  Options opts;

  const RegularityResult& regular() {
    if (!reg_) reg_ = is_regular(net, opts);
    return *reg_;
  }
  const NetClassification& classification() {
    if (!cls_) {
      cls_ = classify(net, opts);
      reg_ = cls_->regular;
    }
    return *cls_;
  }
  bool shape56() const { return net.n() == 5 && net.two_m() == 6; }
  // empty when the net is smooth, else the reason it is not known to be
  std::string smooth_blocker() {
    if (regular().verdict.value != Tri::Yes) return "requires a regular net";
    const auto& c = classification();
    if (c.y_smooth.value == Tri::No) return "requires a smooth net (Y singular: " + c.y_smooth.witness + ")";
    if (c.y_smooth.value == Tri::Unknown) return "requires a smooth net (smoothness of Y unknown)";
    return {};
  }
  const MultiPoly& pfaffian() {
    if (!pf_) pf_ = pfaffian_hypersurface(net);
    return *pf_;
  }
  const QuarticResult& quartic() {
    if (!q_) q_ = q_quartic_routes(net);
    return *q_;
  }
  const CPointSearch& c_points() {
    if (!cps_) cps_ = search_c_points(net, opts);
    return *cps_;
  }
  const CohomologyTable& charge2() {
    if (!charge2_) charge2_ = charge2_instanton_table(net, opts);
    return *charge2_;
  }
  // net reduced to a small field of order q with good reduction
  std::optional<ANet> small_field_net(std::uint64_t q, std::string& why) {
    const auto f = enumeration_field(net, q);
    if (!f) {
      why = "no map to GF(" + std::to_string(q) + ")";
      return std::nullopt;
    }
    try {
      ANet r = net.field() == *f ? net : net.reduce_to(*f);
      if (!r.independent() || min_rank_point(r, opts.enumeration_limit).first + 2 < r.two_m()) {
        why = "bad reduction over " + f->name();
        return std::nullopt;
      }
      return r;
    } catch (const std::domain_error& e) {
      why = e.what();
      return std::nullopt;
    }
  }
  // large prime field for sampling
  std::optional<ANet> large_field_net() {
    const Field& f = net.field();
    if (f.kind() == Field::Kind::Prime && f.characteristic() > 1000) return net;
    if (!f.is_rational()) return std::nullopt;
    for (std::uint32_t p = opts.prime;; p = next_prime(p)) {
      try {
        return net.reduce_to(Field::prime(p));
      } catch (const std::domain_error&) {
      }
    }
  }
  // rank histogram of f_v over P^5(GF(7)) and agreement of Q with rank <= 4
  struct FvProfile {
    std::string field;
    std::vector<std::uint64_t> histogram;
    std::uint64_t q_mismatch = 0, points = 0;
    bool quartic_matches_reduction = false;
    std::string skipped;
  };
  const FvProfile& fv_profile() {
    if (fv_) return *fv_;
    fv_.emplace();
    std::optional<ANet> r;
    std::uint64_t q = 0;
    for (std::uint64_t cand : {7, 5, 3}) {
      std::string why;
      r = small_field_net(cand, why);
      if (r) {
        q = cand;
        break;
      }
      fv_->skipped += (fv_->skipped.empty() ? "" : "; ") + why;
    }
    if (!r) return *fv_;
    fv_->skipped.clear();
    fv_->field = r->field().name();
    MultiPoly qr;
    try {
      qr = q_quartic(*r);
      const MultiPoly from_big = quartic().q.reduce_to(r->field()).normalized();
      fv_->quartic_matches_reduction = from_big == qr;
    } catch (const std::exception& e) {
      fv_->skipped = std::string("quartic over ") + fv_->field + ": " + e.what();
      return *fv_;
    }
    (void)q;
    const NetCodes nc(*r);
    const CodePoly Q(qr);
    fv_->histogram.assign(nc.dim + 1, 0);
    for_each_projective_point(
        nc.dim, *nc.F,
        [&](const std::vector<std::uint32_t>& v) {
          const std::size_t rk = fq_rank(*nc.F, nc.fv(v));
          ++fv_->histogram[rk];
          ++fv_->points;
          if ((Q(v) == 0) != (rk <= 4)) ++fv_->q_mismatch;
        },
        opts.enumeration_limit);
    return *fv_;
  }

 private:
  std::optional<RegularityResult> reg_;
  std::optional<NetClassification> cls_;
  std::optional<MultiPoly> pf_;
  std::optional<QuarticResult> q_;
  std::optional<CPointSearch> cps_;
  std::optional<CohomologyTable> charge2_;
  std::optional<FvProfile> fv_;
};

using CheckFn = std::function<void(Context&, CheckResult&)>;

struct CheckEntry {
  std::string name;
  bool needs_smooth;
  bool needs_56;
  CheckFn fn;
};

void check_regularity(Context& ctx, CheckResult& r) {
  const auto& reg = ctx.regular();
  r.status = tri_status(reg.verdict.value);
  r.witness = reg.verdict.witness;
  r.data["regular"] = to_string(reg.verdict.value);
  r.data["emptiness"] = to_string(reg.emptiness.state);
  r.data["witness_degree"] = reg.emptiness.witness_degree;
  r.data["hilbert_values"] = reg.emptiness.values;
  r.data["bad_point"] = reg.bad_point ? json(vec_text(*reg.bad_point)) : json(nullptr);
}

void check_classify(Context& ctx, CheckResult& r) {
  const auto& c = ctx.classification();
  r.data["regular"] = to_string(c.regular.verdict.value);
  r.data["y_smooth"] = {{"value", to_string(c.y_smooth.value)}, {"witness", c.y_smooth.witness}};
  r.data["x_smooth"] = {{"value", to_string(c.x_smooth.value)}, {"witness", c.x_smooth.witness}};
  ordered_json fields = ordered_json::array();
  std::vector<Status> st;
  std::size_t decided = 0;
  for (const auto& fc : c.consistency) {
    ordered_json fj;
    fj["field"] = fc.field;
    fj["status"] = fc.status;
    fj["note"] = fc.note;
    fj["x_points"] = fc.x_points;
    fj["y_points"] = fc.y_points;
    ordered_json sing = ordered_json::array(), kap = ordered_json::array();
    for (const auto& U : fc.sing_x) sing.push_back(U.to_string());
    for (const auto& U : fc.kappa_y_on_x) kap.push_back(U.to_string());
    fj["sing_x"] = std::move(sing);
    fj["kappa_y_on_x"] = std::move(kap);
    fj["sets_equal"] = fc.sets_equal;
    fields.push_back(std::move(fj));
    if (fc.status == "fail") st.push_back(Status::Fail);
    if (fc.status != "inconclusive") ++decided;
  }
  r.data["fields"] = std::move(fields);
  if (c.regular.verdict.value != Tri::Yes) {
    r.status = tri_status(c.regular.verdict.value);
    r.witness = "not regular: " + c.regular.verdict.witness;
    return;
  }
  if (c.y_smooth.value != Tri::Unknown && c.x_smooth.value != Tri::Unknown && c.y_smooth.value != c.x_smooth.value)
    st.push_back(Status::Fail);
  if (!decided) st.push_back(Status::Inconclusive);
  r.status = combine(st);
  r.witness = std::string("regular; Y smooth: ") + to_string(c.y_smooth.value) + "; X smooth: " + to_string(c.x_smooth.value) +
              "; sing(X) = X cap kappa(Y) over " + std::to_string(decided) + " field(s)";
}

void check_pfaffian(Context& ctx, CheckResult& r) {
  const MultiPoly& pf = ctx.pfaffian();
  r.data["polynomial"] = poly_json(pf, "a");
  const bool ok = pf.is_homogeneous() && pf.degree() == static_cast<int>(ctx.net.two_m() / 2);
  r.status = ok ? Status::Pass : Status::Fail;
  r.witness = "Pf(f(a)) homogeneous of degree " + std::to_string(pf.degree()) + " with " + std::to_string(pf.size()) + " terms";
}

void check_x_ideal(Context& ctx, CheckResult& r) {
  const auto ideal = x_ideal(ctx.net);
  const std::size_t dim = ctx.net.two_m();
  const std::size_t quadrics = subsets(dim, 4).size();
  r.data["generators"] = ideal.generators().size();
  r.data["quadrics"] = quadrics;
  r.data["linear_forms"] = ctx.net.n();
  std::vector<Status> st;
  if (!ctx.net.independent()) st.push_back(Status::Fail);
  std::string why;
  auto small = ctx.small_field_net(2, why);
  if (!small) {
    r.data["gf2"] = why;
    st.push_back(Status::Inconclusive);
  } else {
    const auto fiber = x_points(*small, ctx.opts.enumeration_limit);
    const auto grass = x_points_by_grassmannian(*small, ctx.opts.enumeration_limit);
    const auto red = x_ideal(*small);
    std::uint64_t zeros = 0;
    enumerate_grassmannian(
        dim, small->field(), [&](const PluckerPoint& p) { zeros += red.vanishes_at(p.coords) ? 1 : 0; }, ctx.opts.enumeration_limit);
    r.data["gf2"] = {{"fiber_method", fiber.size()}, {"grassmannian_filter", grass.size()}, {"ideal_zeros", zeros}};
    if (fiber != grass || zeros != fiber.size()) st.push_back(Status::Fail);
  }
  r.status = combine(st);
  r.witness = std::to_string(quadrics) + " Plucker quadrics + " + std::to_string(ctx.net.n()) + " independent linear forms";
  if (small) r.witness += "; #X(GF(2)) = " + std::to_string(r.data["gf2"]["fiber_method"].get<std::size_t>()) + " by three routes";
}

void check_kappa(Context& ctx, CheckResult& r) {
  std::vector<Status> st;
  ordered_json fields = ordered_json::array();
  std::string wit;
  for (std::uint64_t q : {3, 7}) {
    std::string why;
    auto small = ctx.small_field_net(q, why);
    if (!small) {
      fields.push_back({{"field", "GF(" + std::to_string(q) + ")"}, {"skipped", why}});
      continue;
    }
    const auto ys = y_points(*small, ctx.opts.enumeration_limit);
    std::set<std::string> images;
    std::uint64_t bad_quadrics = 0, on_x = 0;
    for (const auto& a : ys) {
      const auto k = kappa(*small, a);
      if (!k.satisfies_quadrics()) ++bad_quadrics;
      if (skewnet::on_x(*small, k)) ++on_x;
      images.insert(canonical_plane(*k.basis).to_string());
    }
    const bool injective = images.size() == ys.size();
    fields.push_back({{"field", small->field().name()},
                      {"y_points", ys.size()},
                      {"distinct_images", images.size()},
                      {"quadric_failures", bad_quadrics},
                      {"images_on_x", on_x}});
    if (bad_quadrics || !injective) st.push_back(Status::Fail);
    wit += (wit.empty() ? "" : "; ") + small->field().name() + ": " + std::to_string(ys.size()) + " points, " +
           std::to_string(images.size()) + " distinct decomposable kernels";
  }
  r.data["fields"] = std::move(fields);
  if (wit.empty()) st.push_back(Status::Inconclusive);
  r.status = combine(st);
  r.witness = wit.empty() ? "no usable field" : wit;
}

void check_tangent(Context& ctx, CheckResult& r) {
  std::string why;
  auto small = ctx.small_field_net(3, why);
  if (!small) {
    r.status = Status::Inconclusive;
    r.witness = why;
    return;
  }
  const auto xs = x_points(*small, ctx.opts.enumeration_limit);
  ordered_json sing = ordered_json::array();
  for (const auto& U : xs)
    if (tangent_test_x(*small, U)) sing.push_back(U.to_string());
  const auto fc = check_field_consistency(*small, small->field(), ctx.opts);
  r.data["field"] = small->field().name();
  r.data["x_points"] = xs.size();
  r.data["singular"] = sing;
  const auto& cls = ctx.classification();
  std::vector<Status> st{fc.sets_equal ? Status::Pass : Status::Fail};
  if (cls.y_smooth.value == Tri::Yes && !sing.empty()) st.push_back(Status::Fail);
  r.status = combine(st);
  r.witness = std::to_string(sing.size()) + " singular of " + std::to_string(xs.size()) + " points of X(" +
              small->field().name() + "), each of the form kappa(a)";
}

void check_count_points(Context& ctx, CheckResult& r) {
  std::vector<Status> st;
  ordered_json fields = ordered_json::array();
  std::string wit;
  for (std::uint64_t q : {2, 3}) {
    std::string why;
    auto small = ctx.small_field_net(q, why);
    if (!small) {
      fields.push_back({{"field", "GF(" + std::to_string(q) + ")"}, {"skipped", why}});
      continue;
    }
    const HomogeneousIdeal y(ctx.net.field(), static_cast<unsigned>(ctx.net.n()), {ctx.pfaffian()});
    const std::uint64_t by_equation = count_points(y, small->field(), ctx.opts.enumeration_limit);
    const auto ys = y_points(*small, ctx.opts.enumeration_limit);
    std::uint64_t wrong_rank = 0;
    for (const auto& a : ys)
      if (rank(small->at(a)) + 2 != small->two_m()) ++wrong_rank;
    fields.push_back({{"field", small->field().name()},
                      {"by_equation", by_equation},
                      {"by_rank", ys.size()},
                      {"rank_below_2m_minus_2", wrong_rank}});
    if (by_equation != ys.size() || wrong_rank) st.push_back(Status::Fail);
    wit += (wit.empty() ? "" : "; ") + std::string("#Y(") + small->field().name() + ") = " + std::to_string(by_equation);
  }
  r.data["fields"] = std::move(fields);
  if (wit.empty()) st.push_back(Status::Inconclusive);
  r.status = combine(st);
  r.witness = wit.empty() ? "no usable field" : wit + ", equation and rank counts agree";
}

void check_quartic(Context& ctx, CheckResult& r) {
  const auto& q = ctx.quartic();
  r.data["polynomial"] = poly_json(q.q, "v");
  std::size_t nonzero = 0;
  for (const auto& route : q.routes) nonzero += route.is_zero() ? 0 : 1;
  r.data["routes_nonzero"] = nonzero;
  r.data["routes_consistent"] = q.consistent;
  const auto& prof = ctx.fv_profile();
  std::vector<Status> st;
  if (q.q.degree() != 4 || !q.q.is_homogeneous() || !q.consistent || nonzero != ctx.net.two_m()) st.push_back(Status::Fail);
  if (prof.field.empty()) {
    r.data["enumeration"] = prof.skipped;
    st.push_back(Status::Inconclusive);
  } else {
    r.data["enumeration"] = {{"field", prof.field},
                             {"points", prof.points},
                             {"q_rank_mismatches", prof.q_mismatch},
                             {"reduction_matches", prof.quartic_matches_reduction}};
    if (prof.q_mismatch || !prof.quartic_matches_reduction) st.push_back(Status::Fail);
  }
  r.status = combine(st);
  r.witness = "quartic with " + std::to_string(q.q.size()) + " terms, " + std::to_string(nonzero) + " division routes agree";
  if (!prof.field.empty())
    r.witness += "; Q = 0 iff rank f_v <= 4 on all " + std::to_string(prof.points) + " points of P^5(" + prof.field + ")";
}

void check_rank_fv(Context& ctx, CheckResult& r) {
  const auto& prof = ctx.fv_profile();
  const auto empt = is_empty_projective(rank2_ideal(ctx.net), ctx.opts);
  r.data["rank2_ideal"] = {{"state", to_string(empt.state)}, {"witness_degree", empt.witness_degree}, {"reason", empt.reason}};
  std::vector<Status> st;
  if (empt.state == Emptiness::NonEmpty) st.push_back(Status::Fail);
  if (empt.state == Emptiness::Inconclusive) st.push_back(Status::Inconclusive);
  if (prof.field.empty()) {
    r.data["enumeration"] = prof.skipped;
    st.push_back(Status::Inconclusive);
  } else {
    r.data["enumeration"] = {{"field", prof.field}, {"points", prof.points}, {"rank_histogram", prof.histogram}};
    for (std::size_t k = 0; k < 3 && k < prof.histogram.size(); ++k)
      if (prof.histogram[k]) st.push_back(Status::Fail);
  }
  r.status = combine(st);
  r.witness = "rank <= 2 ideal " + std::string(to_string(empt.state)) + " (" + empt.reason + ")";
  if (!prof.field.empty()) {
    std::size_t lo = 0;
    while (lo < prof.histogram.size() && !prof.histogram[lo]) ++lo;
    r.witness += "; min rank " + std::to_string(lo) + " over " + std::to_string(prof.points) + " points of P^5(" + prof.field + ")";
  }
}

void check_hilbert_c(Context& ctx, CheckResult& r) {
  const auto ideal = c_ideal(ctx.net);
  r.data["generators"] = ideal.generators().size();
  std::vector<std::uint32_t> primes;
  if (ctx.net.field().is_rational()) {
    primes = {ctx.opts.prime, ctx.opts.second_prime == ctx.opts.prime ? next_prime(ctx.opts.prime) : ctx.opts.second_prime};
  } else {
    primes = {0};
  }
  ordered_json fits = ordered_json::array();
  std::vector<Status> st;
  std::string wit;
  for (auto p : primes) {
    Options o = ctx.opts;
    if (p) o.prime = p;
    try {
      const auto h = fit_hilbert_polynomial(ideal, 1, o);
      const bool ok = h.polynomial && h.polynomial->size() == 2 && (*h.polynomial)[1] == 25 && (*h.polynomial)[0] == -25;
      fits.push_back({{"field", h.field},
                      {"values", h.values},
                      {"fit_start", h.fit_start},
                      {"polynomial", h.polynomial_text()},
                      {"degree", h.degree.get_str()},
                      {"arithmetic_genus", h.arithmetic_genus.get_str()}});
      if (!ok) st.push_back(Status::Fail);
      wit += (wit.empty() ? "" : "; ") + h.field + ": HF = " + h.polynomial_text() + " from t = " + std::to_string(h.fit_start) +
             " (deg " + h.degree.get_str() + ", p_a " + h.arithmetic_genus.get_str() + ")";
    } catch (const std::runtime_error& e) {
      fits.push_back({{"prime", p}, {"error", e.what()}});
      st.push_back(Status::Inconclusive);
      wit += (wit.empty() ? "" : "; ") + std::string(e.what());
    }
  }
  r.data["fits"] = std::move(fits);
  r.data["expected"] = "25*t - 25";
  r.status = combine(st);
  r.witness = wit;
}

void check_theta(Context& ctx, CheckResult& r) {
  const int n = static_cast<int>(ctx.net.n());
  const auto tab = theta_table(ctx.net, -n, 1, ctx.opts);
  r.data = table_json(tab);
  r.text = tab.to_string();
  r.status = tab.verdict();
  r.witness = "h^0(E) = " + std::to_string(*tab.at(0, 0).value) + ", h^" + std::to_string(n - 2) + "(E(" + std::to_string(1 - n) +
              ")) = " + std::to_string(*tab.at(n - 2, 1 - n).value) + ", zero elsewhere on [" + std::to_string(1 - n) + ", 0]";
}

void check_charge2(Context& ctx, CheckResult& r) {
  const auto& tab = ctx.charge2();
  r.data = table_json(tab);
  r.text = tab.to_string();
  r.status = tab.verdict();
  r.witness = "h^0(E(1)) = " + std::to_string(*tab.at(0, 1).value) + ", h^3(E(-3)) = " + std::to_string(*tab.at(3, -3).value) +
              ", other cells " + (r.status == Status::Pass ? "zero" : "not all zero");
}

void check_expected_instanton(Context& ctx, CheckResult& r) {
  const auto tab = expected_instanton_table(3, 2);
  r.data = table_json(tab);
  r.text = tab.to_string();
  if (!ctx.shape56() || !ctx.smooth_blocker().empty()) {
    r.status = Status::Pass;
    r.witness = "expected grid only";
    return;
  }
  const auto& computed = ctx.charge2();
  std::size_t matched = 0, cells = 0;
  for (int p = 0; p <= 3; ++p)
    for (int t = -3; t <= 1; ++t) {
      const auto& e = tab.at(p, t);
      if (e.kind != CohomologyCell::Kind::Exact) continue;
      ++cells;
      if (computed.at(p, t).value == e.expected) ++matched;
    }
  r.status = matched == cells ? Status::Pass : Status::Fail;
  r.witness = std::to_string(matched) + " of " + std::to_string(cells) + " equality cells match the computed charge-2 table";
}

void check_exceptional(Context& ctx, CheckResult& r) {
  const auto v = exceptional_pair_check_y(static_cast<int>(ctx.net.two_m() / 2), static_cast<int>(ctx.net.n()));
  r.status = v.status;
  r.witness = v.witness;
}

void check_c_points(Context& ctx, CheckResult& r) {
  const auto& cps = ctx.c_points();
  r.data["log"] = cps.log;
  ordered_json pts = ordered_json::array();
  for (const auto& c : cps.points) pts.push_back({{"field", c.field.name()}, {"c", vec_text(c.c)}, {"method", c.method}});
  r.data["points"] = std::move(pts);
  r.status = cps.points.empty() ? Status::Inconclusive : Status::Pass;
  r.witness = std::to_string(cps.points.size()) + " C-point(s)";
  if (!cps.points.empty()) r.witness += " over " + cps.points.front().field.name() + " by " + cps.points.front().method;
}

// the C-points must exist for the line checks
bool need_c_points(Context& ctx, CheckResult& r) {
  if (!ctx.c_points().points.empty()) return true;
  r.status = Status::Inconclusive;
  r.witness = "no C-point found";
  return false;
}

void check_phi(Context& ctx, CheckResult& r) {
  if (!need_c_points(ctx, r)) return;
  std::vector<Status> st;
  ordered_json lines = ordered_json::array();
  for (const auto& c : ctx.c_points().points) {
    const ANet nq = ctx.net.reduce_to(c.field);
    const auto fib = phi_fiber(nq, c.c);
    if (!fib.line) {
      st.push_back(Status::Fail);
      lines.push_back({{"c", vec_text(c.c)}, {"line", false}});
      continue;
    }
    const auto ideal = x_ideal(nq);
    std::size_t good = 0;
    const auto params = p1_points(c.field, 3);
    for (const auto& [s, t] : params) good += ideal.vanishes_at(fib.line->point_at(s, t).coords) ? 1 : 0;
    lines.push_back({{"c", vec_text(c.c)}, {"line", true}, {"parameter_points", params.size()}, {"on_x", good == params.size()}});
    if (good != params.size()) st.push_back(Status::Fail);
  }
  // points of Q - C over the large field map to single points of X
  std::size_t singles = 0;
  if (auto big = ctx.large_field_net()) {
    LargeFieldSampler s(*big, ctx.opts.seed);
    const auto ideal = x_ideal(*big);
    for (int i = 0; i < 10; ++i) {
      Vector v;
      do v = s.q_point();
      while (rank(big->fv_at(v)) != 4);
      const auto fib = phi_fiber(*big, v);
      if (fib.point && ideal.vanishes_at(fib.point->coords)) ++singles;
      else st.push_back(Status::Fail);
    }
    r.data["q_minus_c_samples"] = {{"field", big->field().name()}, {"single_points_on_x", singles}};
  }
  r.data["lines"] = std::move(lines);
  r.status = combine(st);
  r.witness = "L_c is a line on X for all " + std::to_string(ctx.c_points().points.size()) +
              " C-points (x-ideal vanishes at 3 parameters); " + std::to_string(singles) + " rank-4 samples give single points of X";
  if (r.status != Status::Pass) r.witness = "failure: " + r.witness;
}

void check_psi(Context& ctx, CheckResult& r) {
  if (!need_c_points(ctx, r)) return;
  std::vector<Status> st;
  ordered_json lines = ordered_json::array();
  for (const auto& c : ctx.c_points().points) {
    const ANet nq = ctx.net.reduce_to(c.field);
    const auto ker = psi_fiber(nq, c.c);
    const MultiPoly pf = ctx.pfaffian().reduce_to(c.field);
    std::size_t zeros = 0;
    const auto params = p1_points(c.field, 4);
    for (const auto& [s, t] : params) {
      Vector a(nq.n(), c.field.zero());
      if (ker.size() == 2)
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = s * ker[0][i] + t * ker[1][i];
      zeros += pf.evaluate(a).is_zero() ? 1 : 0;
    }
    const bool ok = ker.size() == 2 && zeros == params.size();
    lines.push_back({{"c", vec_text(c.c)}, {"kernel_dim", ker.size()}, {"cubic_zeros", zeros}});
    if (!ok) st.push_back(Status::Fail);
  }
  std::size_t singles = 0;
  if (auto big = ctx.large_field_net()) {
    LargeFieldSampler s(*big, ctx.opts.seed + 1);
    const MultiPoly pf = ctx.pfaffian().reduce_to(big->field());
    for (int i = 0; i < 10; ++i) {
      Vector v;
      do v = s.q_point();
      while (rank(big->fv_at(v)) != 4);
      const auto ker = psi_fiber(*big, v);
      if (ker.size() == 1 && pf.evaluate(ker[0]).is_zero()) ++singles;
      else st.push_back(Status::Fail);
    }
    r.data["q_minus_c_samples"] = {{"field", big->field().name()}, {"single_points_on_y", singles}};
  }
  r.data["lines"] = std::move(lines);
  r.status = combine(st);
  r.witness = "M_c is a line on Y for all " + std::to_string(ctx.c_points().points.size()) +
              " C-points (cubic vanishes at 4 parameters); " + std::to_string(singles) + " rank-4 samples give single points of Y";
  if (r.status != Status::Pass) r.witness = "failure: " + r.witness;
}

void check_splitting(Context& ctx, CheckResult& r) {
  if (!need_c_points(ctx, r)) return;
  std::vector<Status> st;
  ordered_json types = ordered_json::array();
  for (const auto& c : ctx.c_points().points) {
    const ANet nq = ctx.net.reduce_to(c.field);
    const auto ker = psi_fiber(nq, c.c);
    const auto sp = splitting_type_on_line(nq, ker.at(0), ker.at(1));
    types.push_back({{"c", vec_text(c.c)}, {"d1", sp.d1}, {"d2", sp.d2}, {"h0", sp.h0}});
    if (sp.d1 != 1 || sp.d2 != 3) st.push_back(Status::Fail);
  }
  r.data["types"] = std::move(types);
  r.status = combine(st);
  r.witness = r.status == Status::Pass ? "every M_c has type (1,3)" : "some M_c is not of type (1,3)";
}

void check_line_ideal(Context& ctx, CheckResult& r) {
  if (!need_c_points(ctx, r)) return;
  std::vector<Status> st;
  ordered_json rows = ordered_json::array();
  for (const auto& c : ctx.c_points().points) {
    const ANet nq = ctx.net.reduce_to(c.field);
    const auto ker = psi_fiber(nq, c.c);
    const auto li = line_ideal_membership(nq, ker.at(0), ker.at(1), ctx.opts);
    rows.push_back({{"c", vec_text(c.c)}, {"status", to_string(li.verdict.status)}, {"witness", li.verdict.witness}});
    st.push_back(li.verdict.status);
  }
  r.data["lines"] = std::move(rows);
  r.status = combine(st);
  r.witness = r.status == Status::Pass ? "H^p(Y, I_M(t)) = 0 for t in {0,-1} on every M_c" : "nonzero cohomology on some M_c";
}

void check_lines_y(Context& ctx, CheckResult& r) {
  std::string why;
  auto small = ctx.small_field_net(3, why);
  if (small && small->field().characteristic() != 2) {
    const ANet p = ctx.net.field().is_rational() ? ctx.net.reduce_to(Field::prime(3)) : *small;
    if (is_regular(p, ctx.opts).verdict.value != Tri::Yes || y_smooth(p, ctx.opts).value != Tri::Yes) {
      why = "bad reduction over GF(3)";
      small.reset();
    }
  }
  if (!small) {
    r.status = Status::Inconclusive;
    r.witness = why;
    return;
  }
  const auto lines = lines_on_y(*small, ctx.opts.enumeration_limit);
  std::size_t mc = 0, jumping_ok = 0, generic_ok = 0, degree_ok = 0;
  for (const auto& l : lines.lines) {
    if (l.is_mc) {
      ++mc;
      jumping_ok += (l.split.d1 == 1 && l.split.d2 == 3) ? 1 : 0;
    } else {
      generic_ok += (l.split.d1 == 2 && l.split.d2 == 2) ? 1 : 0;
    }
    degree_ok += l.split.d1 + l.split.d2 == 4 ? 1 : 0;
  }
  const std::size_t other = lines.lines.size() - mc;
  r.data = {{"field", lines.field},
            {"lines_checked", lines.lines_checked},
            {"lines_on_y", lines.lines.size()},
            {"m_c_lines", mc},
            {"m_c_type_1_3", jumping_ok},
            {"other_lines", other},
            {"other_type_2_2", generic_ok},
            {"degree_4", degree_ok}};
  const bool ok = jumping_ok == mc && generic_ok == other && degree_ok == lines.lines.size();
  r.status = ok ? Status::Pass : Status::Fail;
  r.witness = std::to_string(lines.lines.size()) + " of " + std::to_string(lines.lines_checked) + " lines of P^4(" + lines.field +
              ") lie on Y: " + std::to_string(mc) + " of the form M_c with type (1,3), " + std::to_string(other) + " others of type (2,2)";
}

SamplePlan sample_plan(Context& ctx) {
  SamplePlan plan;
  plan.samples = ctx.opts.samples;
  plan.seed = ctx.opts.seed;
  plan.workers = ctx.opts.workers;
  if (auto big = ctx.large_field_net()) plan.field = big->field();
  else plan.samples = 0;
  return plan;
}

ordered_json counts_json(const SampleCounts& c) {
  return {{"checked", c.checked}, {"on_w", c.on_w}, {"off_w", c.off_w}, {"failures", c.failures}, {"first_failure", c.first_failure}};
}

void fill_jw(const JwReport& rep, const SamplePlan& plan, CheckResult& r) {
  r.status = rep.verdict.status;
  r.witness = rep.verdict.witness;
  r.data["field"] = plan.field.name();
  r.data["random"] = counts_json(rep.random);
  r.data["w_samples"] = counts_json(rep.w_samples);
  r.data["exhaustive_field"] = rep.exhaustive_field;
  r.data["exhaustive"] = counts_json(rep.exhaustive);
}

void check_jw(Context& ctx, CheckResult& r) {
  const auto plan = sample_plan(ctx);
  fill_jw(jw_pointwise(ctx.net, plan), plan, r);
}

void check_jw1(Context& ctx, CheckResult& r) {
  const auto plan = sample_plan(ctx);
  fill_jw(jw1_section_check(ctx.net, plan), plan, r);
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"regularity", false, false, check_regularity},
      {"classify", false, false, check_classify},
      {"pfaffian-cubic", false, false, check_pfaffian},
      {"x-ideal", false, false, check_x_ideal},
      {"kappa", false, false, check_kappa},
      {"tangent-x", false, false, check_tangent},
      {"count-points", false, false, check_count_points},
      {"q-quartic", true, true, check_quartic},
      {"rank-fv", true, true, check_rank_fv},
      {"hilbert-C", true, true, check_hilbert_c},
      {"theta-table", false, false, check_theta},
      {"charge2-table", true, true, check_charge2},
      {"expected-instanton", false, false, check_expected_instanton},
      {"exceptional-pair", false, false, check_exceptional},
      {"c-points", true, true, check_c_points},
      {"phi-fiber", true, true, check_phi},
      {"psi-fiber", true, true, check_psi},
      {"splitting", true, true, check_splitting},
      {"line-ideal", true, true, check_line_ideal},
      {"lines-y", true, true, check_lines_y},
      {"jw", true, true, check_jw},
      {"jw1", true, true, check_jw1},
  };
  return entries;
}

CheckResult run_in(Context& ctx, const CheckEntry& entry) {
  CheckResult r;
  r.name = entry.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (entry.name != "regularity" && entry.name != "classify" && entry.name != "expected-instanton" &&
        entry.name != "exceptional-pair" && ctx.regular().verdict.value != Tri::Yes) {
      r.status = Status::Inconclusive;
      r.witness = "requires a regular net";
    } else if (entry.needs_56 && !ctx.shape56()) {
      r.status = Status::Inconclusive;
      r.witness = "requires (n, 2m) = (5, 6)";
    } else if (entry.needs_smooth && !ctx.smooth_blocker().empty()) {
      r.status = Status::Inconclusive;
      r.witness = ctx.smooth_blocker();
    } else {
      entry.fn(ctx, r);
    }
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

ordered_json options_json(const Options& opts) {
  return {{"fields", opts.fields},   {"prime", opts.prime}, {"second_prime", opts.second_prime},
          {"degree_cap", opts.degree_cap}, {"samples", opts.samples}, {"seed", opts.seed}};
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const ANet& net, const Options& opts) {
  for (const auto& entry : registry())
    if (entry.name == name) {
      Context ctx(net, opts);
      return run_in(ctx, entry);
    }
  throw std::invalid_argument("unknown check \"" + name + "\"");
}

PipelineReport run_pipeline(const ANet& net, const Options& opts) {
  PipelineReport rep;
  rep.fingerprint = fingerprint(net);
  rep.options = options_json(opts);
  Context ctx(net, opts);
  std::vector<Status> all;
  for (const auto& entry : registry()) {
    rep.checks.push_back(run_in(ctx, entry));
    all.push_back(rep.checks.back().status);
    if (entry.name == "regularity" && rep.checks.back().status != Status::Pass) {
      rep.stopped_after = entry.name;
      break;
    }
  }
  rep.overall = combine(all);
  return rep;
}

ordered_json PipelineReport::to_json(bool timings) const {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["fingerprint"] = fingerprint;
  j["options"] = options;
  j["overall"] = to_string(overall);
  if (!stopped_after.empty()) j["stopped_after"] = stopped_after;
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
  ordered_json cj = ordered_json::array();
  for (const auto& c : checks) {
    ++counts[to_string(c.status)];
    ordered_json x;
    x["name"] = c.name;
    x["status"] = to_string(c.status);
    x["witness"] = c.witness;
    x["data"] = c.data;
    if (timings) x["seconds"] = c.seconds;
    cj.push_back(std::move(x));
  }
  j["summary"] = {{"pass", counts["pass"]}, {"fail", counts["fail"]}, {"inconclusive", counts["inconclusive"]}};
  j["checks"] = std::move(cj);
  return j;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

namespace {

void diff_into(const json& a, const json& b, const std::string& path, std::vector<std::string>& out) {
  if (a.type() != b.type()) {
    out.push_back(path + ": " + a.dump() + " != " + b.dump());
    return;
  }
  if (a.is_object()) {
    std::set<std::string> keys;
    for (auto it = a.begin(); it != a.end(); ++it) keys.insert(it.key());
    for (auto it = b.begin(); it != b.end(); ++it) keys.insert(it.key());
    for (const auto& k : keys) {
      if (k == "seconds" || k == "timings") continue;
      const std::string p = path + "/" + k;
      if (!a.contains(k)) out.push_back(p + ": missing on the left");
      else if (!b.contains(k)) out.push_back(p + ": missing on the right");
      else diff_into(a[k], b[k], p, out);
    }
    return;
  }
  if (a.is_array()) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::string p = path + "/" + std::to_string(i);
      if (i >= a.size()) out.push_back(p + ": missing on the left");
      else if (i >= b.size()) out.push_back(p + ": missing on the right");
      else diff_into(a[i], b[i], p, out);
    }
    return;
  }
  if (a != b) out.push_back(path + ": " + a.dump() + " != " + b.dump());
}

}  // namespace

ReportDiff diff_reports(const json& a, const json& b) {
  ReportDiff d;
  diff_into(a, b, "", d.differences);
  return d;
}

}  // namespace skewnet
