#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "spantree/checkers.hpp"
#include "spantree/enumerate.hpp"

namespace spantree {

/// 12 significant digits; non-finite values become null.
inline std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace detail {

inline std::string json_opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("null");
}

inline std::string json_scalar(const HypothesisScalar& v) {
  if (std::holds_alternative<double>(v)) return format_real(std::get<double>(v));
  if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
  return "null";
}

}  // namespace detail

/// One JSON object, fixed field order, no trailing newline.
inline std::string to_jsonl(const VerificationRecord& rec) {
  std::string out = "{\"graph6\":" + json_string(rec.graph6);
  out += ",\"theorem\":" + json_string(to_string(rec.theorem));
  out += ",\"k\":" + detail::json_opt(rec.k);
  out += ",\"r\":" + detail::json_opt(rec.r);
  out += ",\"t\":" + detail::json_opt(rec.t);
  out += ",\"hypothesis\":{";
  for (std::size_t i = 0; i < rec.hypothesis.size(); ++i) {
    if (i) out += ',';
    out += json_string(rec.hypothesis[i].name) + ":" + detail::json_scalar(rec.hypothesis[i].value);
  }
  out += "},\"hypothesis_holds\":";
  switch (rec.hypothesis_holds) {
    case Tri::kTrue: out += "true"; break;
    case Tri::kFalse: out += "false"; break;
    case Tri::kBoundary: out += "\"boundary\""; break;
  }
  out += ",\"conclusion_holds\":";
  out += rec.conclusion_holds ? "true" : "false";
  out += ",\"verdict\":" + json_string(to_string(rec.verdict)) + "}";
  return out;
}

struct RunSummary {
  std::string theorem;
  std::string family;
  int n = 0;
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t pass = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t boundary = 0;
  std::uint64_t counterexample = 0;
  double seconds = 0;
  std::optional<double> min_pass_margin;

  void add(const VerificationRecord& rec) {
    ++total;
    switch (rec.verdict) {
      case Verdict::kPass:
        ++pass;
        if (rec.margin && (!min_pass_margin || *rec.margin < *min_pass_margin)) min_pass_margin = rec.margin;
        break;
      case Verdict::kVacuous: ++vacuous; break;
      case Verdict::kBoundary: ++boundary; break;
      case Verdict::kCounterexample: ++counterexample; break;
    }
  }
};

inline std::string csv_header() {
  return "theorem,family,n,k,total,pass,vacuous,boundary,counterexample,seconds";
}

inline std::string csv_row(const RunSummary& s) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", s.seconds);
  return s.theorem + "," + s.family + "," + std::to_string(s.n) + "," + std::to_string(s.k) + "," +
         std::to_string(s.total) + "," + std::to_string(s.pass) + "," + std::to_string(s.vacuous) +
         "," + std::to_string(s.boundary) + "," + std::to_string(s.counterexample) + "," + secs;
}

struct RunOptions {
  int workers = 1;
  std::size_t batch_size = 4096;
};

/// Streams the family through the checker. Each batch is split into contiguous shards,
/// one per worker, and shard outputs are written back in shard order, so the report is
/// byte-identical for every worker count.
inline RunSummary run_verification(const FamilySpec& spec, TheoremId theorem, const CheckParams& params,
                                   std::ostream* report, const RunOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  RunSummary summary;
  summary.theorem = to_string(theorem);
  summary.family = spec.label();
  summary.n = spec.n;
  summary.k = params.k;

  auto stream = generate(spec);
  const int workers = std::max(1, opts.workers);
  std::vector<Graph> batch;
  std::vector<VerificationRecord> records;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < opts.batch_size) {
      auto g = stream->next();
      if (!g) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;
    records.assign(batch.size(), {});

    const std::size_t shard = (batch.size() + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
      try {
        const std::size_t lo = static_cast<std::size_t>(w) * shard;
        const std::size_t hi = std::min(batch.size(), lo + shard);
        for (std::size_t i = lo; i < hi; ++i) records[i] = check(batch[i], theorem, params);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    for (const auto& rec : records) {
      summary.add(rec);
      if (report) *report << to_jsonl(rec) << '\n';
    }
  }
  if (report && !*report) throw GraphError("failed writing report");
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace spantree
