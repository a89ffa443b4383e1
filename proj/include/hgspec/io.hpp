#pragma once

#include "hgspec/hypergraph.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/verification.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

namespace hgspec {

/// Hypergraph file format: a JSON object with exactly the keys "k", "n"
/// and "edges" (array of integer arrays). Vertices are 0-based. Edges may
/// be listed in any internal order; they are stored sorted.
///
/// write_hypergraph emits one edge per line so that parse + write is
/// byte-identical on its own output:
///
///   {
///     "k": 4,
///     "n": 7,
///     "edges": [
///       [0, 1, 2, 3],
///       [0, 4, 5, 6]
///     ]
///   }
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(const std::filesystem::path &path);
std::string format_hypergraph(const Hypergraph &g);
void write_hypergraph(const std::filesystem::path &path, const Hypergraph &g);

/// Version tag embedded in every JSON report.
inline constexpr std::string_view kReportSchema = "hgspec.report/1";
/// Version line heading every CSV eigenvalue table.
inline constexpr std::string_view kTableSchema = "# hgspec.table/1";

nlohmann::ordered_json to_json(const Hypergraph &g);
nlohmann::ordered_json to_json(const EigenResult &r);
nlohmann::ordered_json to_json(const SolverConfig &cfg);
nlohmann::ordered_json to_json(const SearchReport &report);
nlohmann::ordered_json to_json(const MinimizerCheck &check);
nlohmann::ordered_json to_json(const RelocationRecord &rec);
nlohmann::ordered_json to_json(const CoalescenceRecord &rec);
nlohmann::ordered_json to_json(const OddBipartiteRecord &rec);

/// One row per family member: index, n, m, lambda, residual, converged,
/// oracle value, minimiser flag.
void write_eigen_table(std::ostream &os, const SearchReport &report);

} // namespace hgspec
