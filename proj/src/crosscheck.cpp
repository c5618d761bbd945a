#include "helgason/crosscheck.hpp"

#include <algorithm>
#include <thread>

#include "helgason/closedform.hpp"

namespace helgason {

namespace {

using K = SphericityVerdict::Kind;

std::uint64_t box_size(std::size_t dim, int max_coeff) {
  std::uint64_t n = 1;
  const auto side = static_cast<std::uint64_t>(2 * max_coeff + 1);
  for (std::size_t i = 0; i < dim; ++i) n *= side;
  return n;
}

// Index -> weight with the first coordinate most significant, so index order
// is lexicographic order.
Weight box_point(std::uint64_t index, std::size_t dim, int max_coeff) {
  Weight w(dim);
  const auto side = static_cast<std::uint64_t>(2 * max_coeff + 1);
  for (std::size_t i = dim; i-- > 0;) {
    w[i] = Scalar(static_cast<std::int64_t>(index % side) - max_coeff);
    index /= side;
  }
  return w;
}

unsigned thread_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work / 64)));
}

// Runs body(begin, end, slot) over contiguous chunks, one per thread.
template <class Body>
void parallel_chunks(std::uint64_t total, unsigned threads, Body&& body) {
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, t * chunk), end = std::min(total, begin + chunk);
    pool.emplace_back([&, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CrosscheckReport crosscheck(const SphericityPlan& plan, std::size_t dim, int max_coeff, const Oracle& oracle,
                            unsigned threads, std::size_t max_samples) {
  if (max_coeff < 0) throw Error(ErrorKind::Precondition, "max_coeff must be nonnegative");
  const std::uint64_t total = box_size(dim, max_coeff);
  const unsigned nt = thread_count(threads, total);
  std::vector<CrosscheckReport> parts(nt);
  std::vector<std::exception_ptr> errors(nt);

  parallel_chunks(total, nt, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
    try {
      CrosscheckReport& r = parts[slot];
      for (std::uint64_t i = begin; i < end; ++i) {
        const Weight w = box_point(i, dim, max_coeff);
        const K kind = plan.classify(w);
        const bool expected = oracle(w);
        ++r.total;
        if (kind == K::Undetermined) {
          ++r.undetermined;
          if (r.undetermined_samples.size() < max_samples) r.undetermined_samples.push_back({w, kind, expected});
        } else if ((kind == K::Spherical) != expected) {
          ++r.disagreements;
          if (r.disagreement_samples.size() < max_samples) r.disagreement_samples.push_back({w, kind, expected});
        } else if (expected) {
          ++r.agree_spherical;
        } else {
          ++r.agree_not;
        }
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Chunks are in index order, so concatenating keeps samples lexicographic.
  CrosscheckReport out;
  out.max_coeff = max_coeff;
  for (auto& p : parts) {
    out.total += p.total;
    out.agree_spherical += p.agree_spherical;
    out.agree_not += p.agree_not;
    out.disagreements += p.disagreements;
    out.undetermined += p.undetermined;
    for (auto& s : p.disagreement_samples)
      if (out.disagreement_samples.size() < max_samples) out.disagreement_samples.push_back(std::move(s));
    for (auto& s : p.undetermined_samples)
      if (out.undetermined_samples.size() < max_samples) out.undetermined_samples.push_back(std::move(s));
  }
  return out;
}

CrosscheckReport crosscheck(const CatalogEntry& entry, int max_coeff, const std::string& variant, unsigned threads,
                            std::size_t max_samples) {
  const SphericityPlan plan(entry.system, entry.default_base);
  const PairSpec spec = entry.spec;
  auto report = crosscheck(
      plan, entry.system.dim(), max_coeff, [&](const Weight& w) { return closed_form(spec, w, variant); }, threads,
      max_samples);
  report.pair = entry.spec.family;
  report.variant = variant;
  return report;
}

std::vector<Weight> enumerate_spherical(const SphericityPlan& plan, std::size_t dim, int max_coeff,
                                        unsigned threads) {
  if (max_coeff < 0) throw Error(ErrorKind::Precondition, "max_coeff must be nonnegative");
  const std::uint64_t total = box_size(dim, max_coeff);
  const unsigned nt = thread_count(threads, total);
  std::vector<std::vector<Weight>> parts(nt);
  std::vector<std::exception_ptr> errors(nt);
  parallel_chunks(total, nt, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        Weight w = box_point(i, dim, max_coeff);
        if (plan.classify(w) == K::Spherical) parts[slot].push_back(std::move(w));
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Weight> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

}  // namespace helgason
