#pragma once

#include "hgspec/hypergraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgspec::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInconclusive = 2, // solver did not converge, or a campaign was inconclusive
  kOddUniformity = 3,
  kUsage = 64,       // bad arguments, unknown suite, malformed family spec
  kDataError = 65,   // unreadable or malformed input file
  kInternal = 70,
};

inline constexpr std::string_view kToolName = "hgspec";
inline constexpr std::string_view kToolVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A family of hypergraphs named on the command line, e.g.
///   hypertrees:m=3,k=4
///   Tm:complete:5:4,m=2
///   Tm:edge:4,m=1
///   Tm:hyperstar:2:4,m=1
///   Tm:cycle-blowup:3:4,m=2
///   Tm:file:host.json,m=2
struct FamilySpec {
  std::string text;
  std::vector<Hypergraph> members;
  /// Hypergraphs the extremal result names as minimiser.
  std::vector<Hypergraph> expected;
  std::string expected_name;
  /// Files read while building the family (for the manifest).
  std::vector<std::string> input_files;
};

/// Throws UsageError on a malformed spec.
FamilySpec parse_family(const std::string &spec);

/// Parses "0-1,1-2,2-3" into simple edges. Throws UsageError.
std::vector<std::pair<Vertex, Vertex>> parse_simple_edges(const std::string &s);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Runs the tool on `args` (without the program name). Never throws.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace hgspec::cli
