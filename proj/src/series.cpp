#include "lppqs/series.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

using Counts = std::map<Exponents, std::uint64_t>;

/// Depth-first enumeration of fillings in square order. Every square lies on
/// some polymer to the terminal set, so lpp_time <= bound iff every partial
/// last-passage value is <= bound.
class SeriesEnumerator {
 public:
  SeriesEnumerator(const Geometry& g, int bound, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : g_(g), bound_(bound), budget_(budget), nodes_(nodes), dp_(g.size(), 0), exps_(g.n(), 0) {}

  /// Enumerates with square 0 fixed to `first`.
  void run_from(int first, Counts& out) {
    out_ = &out;
    assign(0, first);
  }

  void run_all(Counts& out) {
    for (int v = 0; v <= bound_; ++v) run_from(v, out);
  }

 private:
  int ceiling(std::size_t idx) const {
    const auto [left, down] = g_.predecessors(idx);
    int prev = 0;
    if (left >= 0) prev = dp_[static_cast<std::size_t>(left)];
    if (down >= 0) prev = std::max(prev, dp_[static_cast<std::size_t>(down)]);
    return prev;
  }

  void assign(std::size_t idx, int value) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("generating series enumeration exceeded the node budget of " +
                           std::to_string(budget_));
    dp_[idx] = ceiling(idx) + value;
    const auto& vars = g_.weight_variables(idx);
    for (std::size_t v : vars) exps_[v - 1] += value;
    if (idx + 1 == g_.size()) {
      (*out_)[exps_] += 1;
    } else {
      const int room = bound_ - ceiling(idx + 1);
      for (int next = 0; next <= room; ++next) assign(idx + 1, next);
    }
    for (std::size_t v : vars) exps_[v - 1] -= value;
  }

  const Geometry& g_;
  int bound_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<int> dp_;
  Exponents exps_;
  Counts* out_ = nullptr;
};

LaurentPolynomial to_polynomial(const Counts& counts, std::size_t n) {
  LaurentPolynomial p(n);
  for (const auto& [e, c] : counts) p.add_term(e, BigInt(c));
  return p;
}

void check_bound(int bound) {
  if (bound < 0) throw DomainError("generating series bound must be non-negative");
}

}  // namespace

LaurentPolynomial generating_series_serial(const Geometry& geometry, int bound,
                                           const SeriesOptions& options) {
  check_bound(bound);
  std::atomic<std::uint64_t> nodes{0};
  Counts counts;
  SeriesEnumerator(geometry, bound, options.node_budget, nodes).run_all(counts);
  return to_polynomial(counts, geometry.n());
}

LaurentPolynomial generating_series(const Geometry& geometry, int bound, const SeriesOptions& options) {
  check_bound(bound);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<Counts> partial(static_cast<std::size_t>(bound) + 1);
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first <= bound; ++first) {
    if (failed.load()) continue;
    try {
      SeriesEnumerator(geometry, bound, options.node_budget, nodes)
          .run_from(first, partial[static_cast<std::size_t>(first)]);
    } catch (...) {
#pragma omp critical(lppqs_series_failure)
      if (!failure) failure = std::current_exception();
      failed.store(true);
    }
  }
  if (failure) std::rethrow_exception(failure);

  Counts merged;
  for (const auto& part : partial)
    for (const auto& [e, c] : part) merged[e] += c;
  return to_polynomial(merged, geometry.n());
}

}  // namespace lppqs
