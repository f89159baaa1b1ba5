#include "mmpair/verdict.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace mmpair {

namespace {

std::vector<std::size_t> decode(std::size_t index, std::size_t arity, std::size_t dim) {
  std::vector<std::size_t> t(arity);
  for (std::size_t p = arity; p-- > 0;) {
    t[p] = index % dim;
    index /= dim;
  }
  return t;
}

void run_chunk(std::size_t begin, std::size_t end, std::size_t arity, std::size_t dim, const TupleCheck& check,
               std::size_t limit, std::vector<Witness>& out) {
  for (std::size_t idx = begin; idx < end; ++idx) {
    if (limit != 0 && out.size() >= limit) return;
    const auto tuple = decode(idx, arity, dim);
    if (auto w = check(tuple)) {
      w->tuple = tuple;
      out.push_back(std::move(*w));
    }
  }
}

} // namespace

Verdict sweep(std::size_t arity, std::size_t dim, const TupleCheck& check, const SweepOptions& opts) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= dim;

  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(total, 1));
  std::vector<std::vector<Witness>> found(jobs);

  if (jobs == 1) {
    run_chunk(0, total, arity, dim, check, opts.witness_limit, found[0]);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const std::size_t step = (total + jobs - 1) / jobs;
    for (std::size_t w = 0; w < jobs; ++w) {
      const std::size_t begin = std::min(total, w * step);
      const std::size_t end = std::min(total, begin + step);
      workers.emplace_back([&, w, begin, end] {
        try {
          run_chunk(begin, end, arity, dim, check, opts.witness_limit, found[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Verdict v;
  for (auto& chunk : found)
    for (auto& w : chunk) {
      if (opts.witness_limit != 0 && v.failures.size() >= opts.witness_limit) break;
      v.failures.push_back(std::move(w));
    }
  v.pass = v.failures.empty();
  return v;
}

} // namespace mmpair
