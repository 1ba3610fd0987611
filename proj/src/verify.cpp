#include "skewnet/verify.hpp"

#include <atomic>
#include <thread>

#include "skewnet/correspondence.hpp"
#include "skewnet/point_search.hpp"

namespace skewnet {

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, count))));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (w == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < w; ++k) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 of the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + i + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<Vector> complement(const ExactMatrix& U) {
  const Field& f = U.field();
  std::vector<Vector> basis{U.row(0), U.row(1)}, out;
  for (std::size_t e = 0; e < U.cols() && out.size() + 2 < U.cols(); ++e) {
    Vector w(U.cols(), f.zero());
    w[e] = f.one();
    auto trial = basis;
    trial.push_back(w);
    if (rank(ExactMatrix::from_rows(f, trial)) == trial.size()) {
      basis = std::move(trial);
      out.push_back(std::move(w));
    }
  }
  return out;
}

FieldElement pairing(const ExactMatrix& m, const Vector& x, const Vector& y) { return dot(x, m * y); }

// the map V/U -> U*, rows indexed by the complement
ExactMatrix second_map(const ExactMatrix& fa, const ExactMatrix& U, const std::vector<Vector>& comp) {
  ExactMatrix B(fa.field(), comp.size(), 2);
  for (std::size_t l = 0; l < comp.size(); ++l)
    for (std::size_t j = 0; j < 2; ++j) B(l, j) = pairing(fa, comp[l], U.row(j));
  return B;
}

void record(SampleCounts& c, const JwFiber& fib, const std::string& where) {
  ++c.checked;
  if (fib.intersection_dim > 0) ++c.on_w;
  else ++c.off_w;
  if (!fib.ok) {
    if (!c.failures) c.first_failure = where + ": " + fib.why;
    ++c.failures;
  }
}

std::string point_text(const Vector& a, const ExactMatrix& U) {
  std::string s = "a = (";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ":" : "") + a[i].to_string();
  return s + "), U = " + U.to_string();
}

Status status_of(const std::vector<const SampleCounts*>& all) {
  std::uint64_t checked = 0;
  for (auto* c : all) {
    if (c->failures) return Status::Fail;
    checked += c->checked;
  }
  return checked ? Status::Pass : Status::Inconclusive;
}

struct PairSource {
  std::optional<ANet> big;  // net over plan.field
  std::optional<LargeFieldSampler> sampler;
  std::optional<ANet> small;  // net over plan.exhaustive
  std::vector<Vector> ys;
  std::vector<ExactMatrix> xs;
  std::string skipped;
};

PairSource prepare(const ANet& net, const SamplePlan& plan) {
  PairSource src;
  if (plan.samples) {
    src.big = net.field() == plan.field ? net : net.reduce_to(plan.field);
    src.sampler.emplace(*src.big, plan.seed);
  }
  if (plan.exhaustive) {
    const auto f = enumeration_field(net, plan.exhaustive->order());
    if (!f) {
      src.skipped = "no reduction to " + plan.exhaustive->name();
      return src;
    }
    ANet small = net.field() == *f ? net : net.reduce_to(*f);
    if (!small.independent() || min_rank_point(small).first + 2 < small.two_m()) {
      src.skipped = "bad reduction over " + f->name();
      return src;
    }
    src.ys = y_points(small);
    src.xs = x_points(small);
    src.small = std::move(small);
  }
  return src;
}

}  // namespace

WMembership w_membership(const ANet& net, const Vector& a, const ExactMatrix& U) {
  const auto rk = rank_kernel(net.at(a));
  std::vector<Vector> rows = rk.kernel;
  rows.push_back(U.row(0));
  rows.push_back(U.row(1));
  const std::size_t r = rank(ExactMatrix::from_rows(net.field(), rows));
  WMembership w;
  w.intersection_dim = rows.size() - r;
  if (w.intersection_dim == 1) {
    // v = x U with f(a) v = 0
    const ExactMatrix fa = net.at(a);
    const ExactMatrix B = fa * U.transpose();
    const auto ker = rank_kernel(B).kernel;
    if (ker.size() == 1) {
      Vector v(U.cols(), net.field().zero());
      for (std::size_t c = 0; c < U.cols(); ++c) v[c] = ker[0][0] * U(0, c) + ker[0][1] * U(1, c);
      w.witness = normalize_projective(v);
    }
  }
  return w;
}

JwFiber jw_fiber(const ANet& net, const Vector& a, const ExactMatrix& U) {
  JwFiber fib;
  const ExactMatrix fa = net.at(a);
  const auto rk = rank_kernel(fa);
  if (rk.rank + 2 != net.two_m()) {
    fib.why = "rank f(a) = " + std::to_string(rk.rank);
    return fib;
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!pairing(fa, U.row(i), U.row(j)).is_zero()) {
        fib.why = "U is not isotropic for f(a)";
        return fib;
      }
  std::vector<Vector> rows = rk.kernel;
  rows.push_back(U.row(0));
  rows.push_back(U.row(1));
  fib.first_rank = rank(ExactMatrix::from_rows(net.field(), rows)) - 2;
  fib.intersection_dim = 2 - fib.first_rank;
  fib.composition_zero = true;
  for (const auto& k : rk.kernel)
    for (std::size_t j = 0; j < 2; ++j) fib.composition_zero = fib.composition_zero && pairing(fa, k, U.row(j)).is_zero();
  fib.second_rank = rank(second_map(fa, U, complement(U)));
  if (!fib.composition_zero) fib.why = "composition nonzero";
  else if (fib.intersection_dim == 0 && (fib.first_rank != 2 || fib.second_rank != 2))
    fib.why = "not exact off W: ranks " + std::to_string(fib.first_rank) + ", " + std::to_string(fib.second_rank);
  else if (fib.intersection_dim == 1 && (fib.first_rank != 1 || fib.second_rank != 1))
    fib.why = "corank on W: ranks " + std::to_string(fib.first_rank) + ", " + std::to_string(fib.second_rank);
  else if (fib.intersection_dim == 2)
    fib.why = "U = Ker f(a)";
  else
    fib.ok = true;
  return fib;
}

JwReport jw_pointwise(const ANet& net, const SamplePlan& plan) {
  JwReport rep;
  PairSource src = prepare(net, plan);
  const std::size_t nw = plan.samples ? std::max<std::size_t>(1, plan.samples / 10) : 0;
  std::vector<JwFiber> fibers(plan.samples + nw);
  std::vector<std::string> where(fibers.size());
  if (!fibers.empty()) {
    parallel_for(fibers.size(), plan.workers, [&](std::size_t i) {
      LargeFieldSampler s = *src.sampler;
      s.reseed(sample_seed(plan.seed, i));
      Vector a;
      ExactMatrix U;
      if (i < plan.samples) {
        a = s.y_point();
        U = s.x_point();
      } else {
        std::tie(a, U) = s.w_point();
      }
      fibers[i] = jw_fiber(*src.big, a, U);
      if (!fibers[i].ok) where[i] = point_text(a, U);
    });
    for (std::size_t i = 0; i < fibers.size(); ++i) record(i < plan.samples ? rep.random : rep.w_samples, fibers[i], where[i]);
    if (rep.w_samples.on_w != rep.w_samples.checked && !rep.w_samples.failures) {
      rep.w_samples.failures = rep.w_samples.checked - rep.w_samples.on_w;
      rep.w_samples.first_failure = "constructed W-pair off W";
    }
  }
  if (src.small) {
    rep.exhaustive_field = src.small->field().name();
    for (const auto& a : src.ys)
      for (const auto& U : src.xs) record(rep.exhaustive, jw_fiber(*src.small, a, U), point_text(a, U));
  }
  rep.verdict.status = status_of({&rep.random, &rep.w_samples, &rep.exhaustive});
  if (!src.skipped.empty() && rep.verdict.status == Status::Pass) rep.verdict.status = Status::Inconclusive;
  rep.verdict.witness = std::to_string(rep.random.checked) + " random pairs (" + std::to_string(rep.random.on_w) + " on W), " +
                        std::to_string(rep.w_samples.checked) + " constructed W-pairs, " + std::to_string(rep.exhaustive.checked) +
                        " exhaustive pairs (" + std::to_string(rep.exhaustive.on_w) + " on W)" +
                        (src.skipped.empty() ? "" : "; " + src.skipped);
  for (const auto* c : {&rep.random, &rep.w_samples, &rep.exhaustive})
    if (c->failures) rep.verdict.witness += "; " + c->first_failure;
  return rep;
}

Vector hf_section(const ANet& net, const Vector& a, const ExactMatrix& U, const Vector& v) {
  const ExactMatrix fa = net.at(a);
  Vector out;
  for (const auto& w : complement(U)) out.push_back(pairing(fa, w, v));
  return out;
}

namespace {

// One pair: agreement of hf with kernel membership at each v, and of the
// existence of a zero of hf with the kernel-intersection predicate.
bool jw1_pair(const ANet& net, const Vector& a, const ExactMatrix& U, const std::vector<Vector>& vs, SampleCounts& c,
              std::string& why) {
  const ExactMatrix fa = net.at(a);
  const auto comp = complement(U);
  const WMembership w = w_membership(net, a, U);
  bool ok = true;
  std::vector<Vector> probe = vs;
  if (w.on_w()) probe.push_back(w.witness);
  for (const auto& v : probe) {
    Vector hf;
    for (const auto& x : comp) hf.push_back(pairing(fa, x, v));
    const bool zero = is_zero_vector(hf), in_kernel = is_zero_vector(fa * v);
    ++c.checked;
    if (zero) ++c.on_w;
    else ++c.off_w;
    if (zero != in_kernel) {
      ok = false;
      why = "hf and Ker f(a) disagree";
    }
  }
  // U -> (V/U)* has a kernel iff the pair is on W
  const bool degenerate = rank(second_map(fa, U, comp)) < 2;
  if (degenerate != w.on_w()) {
    ok = false;
    why = "section zero locus and kernel intersection disagree";
  }
  if (w.on_w() && !w.witness.empty() && !is_zero_vector(fa * w.witness)) {
    ok = false;
    why = "intersection witness not in Ker f(a)";
  }
  return ok;
}

std::vector<Vector> points_of_plane(const ExactMatrix& U) {
  const Field& f = U.field();
  std::vector<Vector> out;
  for (const auto& [s, t] : p1_points(f, f.order() + 1)) {
    Vector v(U.cols(), f.zero());
    for (std::size_t c = 0; c < U.cols(); ++c) v[c] = s * U(0, c) + t * U(1, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

JwReport jw1_section_check(const ANet& net, const SamplePlan& plan) {
  JwReport rep;
  PairSource src = prepare(net, plan);
  const std::size_t nw = plan.samples ? std::max<std::size_t>(1, plan.samples / 10) : 0;
  const std::size_t total = plan.samples + nw;
  std::vector<SampleCounts> slots(total);
  std::vector<std::string> whys(total);
  std::vector<char> oks(total, 1);
  parallel_for(total, plan.workers, [&](std::size_t i) {
    LargeFieldSampler s = *src.sampler;
    s.reseed(sample_seed(plan.seed ^ 0x5eed, i));
    Vector a;
    ExactMatrix U;
    if (i < plan.samples) {
      a = s.y_point();
      U = s.x_point();
    } else {
      std::tie(a, U) = s.w_point();
    }
    // a random v in U
    const Field& f = U.field();
    const FieldElement x = f.from_int(static_cast<std::int64_t>(sample_seed(i, 7) % f.characteristic()));
    Vector v(U.cols(), f.zero());
    for (std::size_t c = 0; c < U.cols(); ++c) v[c] = x * U(0, c) + U(1, c);
    std::string why;
    oks[i] = jw1_pair(*src.big, a, U, {v}, slots[i], why);
    if (!oks[i]) whys[i] = point_text(a, U) + ": " + why;
  });
  for (std::size_t i = 0; i < total; ++i) {
    SampleCounts& dst = i < plan.samples ? rep.random : rep.w_samples;
    dst.checked += slots[i].checked;
    dst.on_w += slots[i].on_w;
    dst.off_w += slots[i].off_w;
    if (!oks[i]) {
      if (!dst.failures) dst.first_failure = whys[i];
      ++dst.failures;
    }
  }
  if (src.small) {
    rep.exhaustive_field = src.small->field().name();
    for (const auto& a : src.ys)
      for (const auto& U : src.xs) {
        std::string why;
        if (!jw1_pair(*src.small, a, U, points_of_plane(U), rep.exhaustive, why)) {
          if (!rep.exhaustive.failures) rep.exhaustive.first_failure = point_text(a, U) + ": " + why;
          ++rep.exhaustive.failures;
        }
      }
  }
  rep.verdict.status = status_of({&rep.random, &rep.w_samples, &rep.exhaustive});
  if (!src.skipped.empty() && rep.verdict.status == Status::Pass) rep.verdict.status = Status::Inconclusive;
  rep.verdict.witness = std::to_string(rep.random.checked) + " random triples, " + std::to_string(rep.w_samples.checked) +
                        " triples at W-pairs, " + std::to_string(rep.exhaustive.checked) + " exhaustive triples (" +
                        std::to_string(rep.exhaustive.on_w) + " with hf = 0)" + (src.skipped.empty() ? "" : "; " + src.skipped);
  for (const auto* c : {&rep.random, &rep.w_samples, &rep.exhaustive})
    if (c->failures) rep.verdict.witness += "; " + c->first_failure;
  return rep;
}

std::uint64_t count_points(const HomogeneousIdeal& ideal, const Field& field, std::uint64_t limit) {
  if (!field.is_finite()) throw std::invalid_argument("count_points needs a finite field");
  const HomogeneousIdeal red = ideal.field() == field ? ideal : ideal.reduce_to(field);
  const Fq& F = Fq::of(field);
  std::uint64_t count = 0;
  Vector x(red.nvars(), field.zero());
  for_each_projective_point(
      red.nvars(), F,
      [&](const std::vector<std::uint32_t>& c) {
        for (std::size_t i = 0; i < c.size(); ++i) x[i] = F.decode(c[i]);
        if (red.vanishes_at(x)) ++count;
      },
      limit);
  return count;
}

}  // namespace skewnet
