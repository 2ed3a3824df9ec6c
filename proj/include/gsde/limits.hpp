#pragma once

// Limit detection for measure sequences. A sequence that recurs exactly
// (same supports and the same rational weights) is eventually periodic and
// its limit behaviour is captured by the average over one period. Sequences
// whose weights never recur fall back to a running Cesaro average and are
// reported as not converged; callers with more structure (see sde.hpp) use
// exact support dynamics instead.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsde/measure.hpp"

namespace gsde {

struct CesaroDiagnostics {
  bool exact_period = false;
  int preperiod = 0;   // first index (0-based) of the detected cycle
  int period = 0;      // cycle length; 0 when no cycle was found
  int terms_used = 0;
  std::string note;
};

struct CesaroResult {
  RationalMeasure average;
  CesaroDiagnostics diagnostics;
  std::optional<RationalMeasure> last_iterate;
};

// Average of measures[first, first+count).
inline RationalMeasure measure_mean(const std::vector<RationalMeasure>& seq,
                                    std::size_t first, std::size_t count) {
  const auto& g = seq.at(first).group();
  std::vector<Rational> w(g->order(), Rational(0));
  for (std::size_t i = first; i < first + count; ++i)
    for (Element x = 0; x < g->order(); ++x) w[x] += seq[i].at(x);
  const Rational n(count);
  for (auto& v : w) v /= n;
  return RationalMeasure(g, std::move(w));
}

inline CesaroResult cesaro_limit(
    const std::function<RationalMeasure(int)>& term, int max_terms,
    int window) {
  if (max_terms < 1) throw NotConverged("max_terms must be >= 1");
  std::vector<RationalMeasure> seq;
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < max_terms; ++i) {
    seq.push_back(term(i));
    const std::string k = seq.back().key();
    auto [it, fresh] = seen.emplace(k, i);
    if (!fresh) {
      const int start = it->second;
      const int period = i - start;
      CesaroDiagnostics d;
      d.exact_period = true;
      d.preperiod = start;
      d.period = period;
      d.terms_used = i + 1;
      d.note = "state recurred exactly";
      return CesaroResult{measure_mean(seq, start, period), d, seq.back()};
    }
  }
  const int w = std::min<int>(window, static_cast<int>(seq.size()));
  CesaroDiagnostics d;
  d.exact_period = false;
  d.period = 0;
  d.terms_used = max_terms;
  d.note = "no exact recurrence within " + std::to_string(max_terms) +
           " terms; returning Cesaro average of last " + std::to_string(w);
  RationalMeasure avg = measure_mean(seq, seq.size() - w, w);
  // oscillation report: TV distance between the last two iterates
  if (seq.size() >= 2) {
    d.note += "; last-step tv = " +
              to_string(tv_distance(seq[seq.size() - 1], seq[seq.size() - 2]));
  }
  return CesaroResult{std::move(avg), d, seq.back()};
}

// Convenience wrapper for callers that require an exact answer.
inline RationalMeasure require_converged(const CesaroResult& r) {
  if (!r.diagnostics.exact_period)
    throw NotConverged(r.diagnostics.note);
  return r.average;
}

}  // namespace gsde
