#pragma once

#include "barneskit/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace barneskit {

enum class CheckMode { ExactRational, ExactPoly, Numeric, Report };
enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckMode m);
std::string to_string(CheckStatus s);

// One identity at one parameter point.
struct IdentityCase {
  std::string id;
  nlohmann::json params;
  CheckMode mode = CheckMode::ExactRational;
  double tolerance = 0.0;
};

struct CheckReport {
  IdentityCase item;
  CheckStatus status = CheckStatus::Skip;
  std::string lhs;
  std::string rhs;
  std::string detail;
  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
};

nlohmann::json to_json(const CheckReport& r);

// Parameter ranges like "n=3..6,m=1..15"; single values allowed ("n=4").
struct SweepRanges {
  std::map<std::string, std::pair<long, long>> ranges;
  static SweepRanges parse(std::string_view text);
  bool has(const std::string& key) const { return ranges.count(key) != 0; }
  long lo(const std::string& key, long fallback) const;
  long hi(const std::string& key, long fallback) const;
};

struct IdentityEntry {
  std::string id;
  std::string statement;  // what the check asserts, in words
  std::string mode_text;
  std::function<std::vector<IdentityCase>(const SweepRanges&, std::uint64_t)> make_cases;
  std::function<CheckReport(const IdentityCase&)> run;
};

class IdentityRegistry {
 public:
  static const IdentityRegistry& instance();

  std::vector<std::string> ids() const;  // sorted
  bool contains(const std::string& id) const;
  const IdentityEntry& entry(const std::string& id) const;  // throws on unknown id

  // Evaluates one case; precondition violations come back as Skip, internal
  // evaluation errors as Fail with the message in `detail`.
  CheckReport check(const IdentityCase& c) const;

  // Deterministic in (id, ranges, seed); failures are listed first.
  std::vector<CheckReport> sweep(const std::string& id, const SweepRanges& ranges,
                                 std::uint64_t seed) const;

  // Default sweep of every identity, ids in sorted order.
  std::vector<CheckReport> run_all(std::uint64_t seed) const;

 private:
  IdentityRegistry();
  std::vector<IdentityEntry> entries_;
};

// BARNESKIT_SEED environment override, else 12345.
std::uint64_t default_seed();

}  // namespace barneskit
