#pragma once

#include "exactcat/core/serialize.hpp"
#include "exactcat/instances/sampling.hpp"

#include <cstdint>
#include <string>

namespace exactcat::engine {

struct ProbeConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  std::size_t max_dim = 3;
  std::int64_t max_entry = 3;
  /// Worker count for suites; 0 means one per hardware thread. Not part of
  /// the report, results never depend on it.
  unsigned threads = 1;

  [[nodiscard]] SamplerConfig sampler() const { return {max_dim, max_entry, seed, 20}; }

  [[nodiscard]] json to_json() const {
    return json{{"seed", seed}, {"samples", samples}, {"max_dim", max_dim}, {"max_entry", max_entry}};
  }
};

enum class Outcome { Yes, No, Unknown };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes:
      return "Yes";
    case Outcome::No:
      return "No";
    case Outcome::Unknown:
      return "Unknown";
  }
  return "?";
}

/// Three-valued answer to a universally quantified claim. Yes carries the
/// rule that justified it, No a reason and (for semi-stability) the failing
/// square, Unknown the number of probes spent.
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string reason;
  json witness;
  std::size_t budget = 0;

  static Verdict yes(std::string why) { return {Outcome::Yes, std::move(why), nullptr, 0}; }
  static Verdict no(std::string why, json witness = nullptr) { return {Outcome::No, std::move(why), std::move(witness), 0}; }
  static Verdict unknown(std::size_t budget) { return {Outcome::Unknown, "probe budget exhausted", nullptr, budget}; }

  [[nodiscard]] bool is_yes() const { return outcome == Outcome::Yes; }
  [[nodiscard]] bool is_no() const { return outcome == Outcome::No; }
  [[nodiscard]] bool is_unknown() const { return outcome == Outcome::Unknown; }

  [[nodiscard]] json to_json() const {
    json j{{"outcome", to_string(outcome)}, {"reason", reason}};
    if (outcome == Outcome::Unknown) j["budget"] = budget;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

/// Stream keys so that different suites and probe kinds never share
/// randomness for the same (seed, index).
enum class Stream : std::uint64_t {
  ProbeCokernel = 1,
  ProbeKernel,
  Axioms,
  Kelly,
  Theorem,
  Structure,
  Transport,
  Universal,
  Maximality,
  Coherence,
  Sampler,
};

inline Rng case_rng(std::uint64_t seed, Stream stream, std::size_t index) {
  return Rng(seed, (static_cast<std::uint64_t>(stream) << 40) ^ index);
}

}  // namespace exactcat::engine
