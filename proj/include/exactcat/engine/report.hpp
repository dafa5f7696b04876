#pragma once

#include "exactcat/engine/verdict.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace exactcat::engine {

struct Violation {
  std::string kind;
  std::size_t index = 0;
  json diagram;

  [[nodiscard]] json to_json() const { return json{{"kind", kind}, {"case", index}, {"diagram", diagram}}; }
};

/// Outcome of one sampled case of a suite.
struct CaseResult {
  std::vector<Violation> violations;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  std::vector<json> witnesses;
  std::optional<json> contradiction;

  void tally(const Verdict& v) {
    if (v.is_yes()) ++yes;
    else if (v.is_no()) ++no;
    else ++unknown;
  }
  void violate(std::string kind, std::size_t index, json diagram) {
    violations.push_back({std::move(kind), index, std::move(diagram)});
  }
};

struct Report {
  std::string suite;
  std::string category;
  ProbeConfig config;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  std::size_t unknown = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::vector<json> witnesses;
  /// Set when a rule-based Yes met a probe-based No.
  std::optional<std::string> aborted;
  json summary = json::object();

  [[nodiscard]] bool clean() const { return violations.empty() && !aborted; }

  [[nodiscard]] json to_json() const {
    json v = json::array();
    for (const auto& x : violations) v.push_back(x.to_json());
    json cfg = config.to_json();
    cfg["category"] = category;
    json j{{"suite", suite},
           {"config", cfg},
           {"cases", cases},
           {"violations", v},
           {"unknown", unknown},
           {"verdicts", json{{"yes", yes}, {"no", no}, {"unknown", unknown}}},
           {"witnesses", witnesses},
           {"summary", summary}};
    if (aborted) j["aborted"] = *aborted;
    return j;
  }
};

/// Sorted keys (nlohmann's default object is an ordered map), canonical
/// rational strings, two-space indentation.
inline std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

namespace detail {

inline void print_matrix(std::ostringstream& out, const json& rows, const std::string& indent) {
  if (!rows.is_array() || rows.empty()) {
    out << indent << "[]\n";
    return;
  }
  for (const auto& row : rows) {
    out << indent << "[";
    bool first = true;
    for (const auto& v : row) {
      out << (first ? "" : " ") << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    out << "]\n";
  }
}

/// Any morphism-shaped member of a diagram is printed as a labeled matrix.
inline void print_diagram(std::ostringstream& out, const json& d, const std::string& indent) {
  if (!d.is_object()) {
    out << indent << d.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : d.items()) {
    if (value.is_object() && value.contains("matrix") && value.contains("dom")) {
      out << indent << key << ": " << value["dom"].dump() << " -> " << value["cod"].dump() << "\n";
      print_matrix(out, value["matrix"], indent + "  ");
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      print_diagram(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace detail

/// Text form of a single-result document; morphisms print as labeled matrices.
inline std::string render_document(const json& doc) {
  std::ostringstream out;
  detail::print_diagram(out, doc, "");
  return out.str();
}

inline std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " on " << r.category << " (seed " << r.config.seed << ", samples " << r.config.samples
      << ", max_dim " << r.config.max_dim << ", max_entry " << r.config.max_entry << ")\n";
  out << r.cases << " cases, " << r.violations.size() << " violations";
  if (r.unknown) out << ", " << r.unknown << " unknown";
  out << "\n";
  if (r.aborted) out << "ABORTED: " << *r.aborted << "\n";
  if (!r.summary.empty()) detail::print_diagram(out, r.summary, "  ");
  for (const auto& v : r.violations) {
    out << "violation " << v.kind << " at case " << v.index << "\n";
    detail::print_diagram(out, v.diagram, "  ");
  }
  for (const auto& w : r.witnesses) {
    out << "witness\n";
    detail::print_diagram(out, w, "  ");
  }
  return out.str();
}

/// Evaluates body(i) for i in [0, n) on a pool of workers and returns the
/// results in index order, so the outcome is independent of scheduling.
/// The first exception by index is rethrown.
template <class Body>
std::vector<CaseResult> run_cases(std::size_t n, unsigned threads, Body&& body) {
  std::vector<CaseResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

inline void merge(Report& r, std::vector<CaseResult>&& results) {
  for (auto& cr : results) {
    ++r.cases;
    r.yes += cr.yes;
    r.no += cr.no;
    r.unknown += cr.unknown;
    for (auto& v : cr.violations) r.violations.push_back(std::move(v));
    for (auto& w : cr.witnesses) r.witnesses.push_back(std::move(w));
    if (cr.contradiction && !r.aborted) {
      r.aborted = "RuleContradiction";
      r.witnesses.push_back(std::move(*cr.contradiction));
    }
  }
}

}  // namespace exactcat::engine
