#include "hgspec/errors.hpp"
#include "hgspec/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace hgspec;
using namespace hgspec::testing;

namespace {

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST(Io, DataFilesRoundTripByteForByte) {
  int files = 0;
  for (const auto &entry : std::filesystem::directory_iterator(data_dir())) {
    const std::string text = slurp(entry.path());
    EXPECT_EQ(format_hypergraph(parse_hypergraph(text)), text)
        << entry.path();
    ++files;
  }
  EXPECT_GE(files, 10);
}

TEST(Io, FormatIsStableUnderReparse) {
  for (const auto &[name, g] : corpus()) {
    const std::string once = format_hypergraph(g);
    EXPECT_EQ(format_hypergraph(parse_hypergraph(once)), once) << name;
    EXPECT_EQ(parse_hypergraph(once), g) << name;
  }
}

TEST(Io, EmptyEdgeList) {
  Hypergraph g(3, 2);
  EXPECT_EQ(format_hypergraph(g), "{\n  \"k\": 2,\n  \"n\": 3,\n  \"edges\": []\n}\n");
  EXPECT_EQ(parse_hypergraph(format_hypergraph(g)), g);
}

TEST(Io, AcceptsUnsortedEdgesAndAnyKeyOrder) {
  Hypergraph g = parse_hypergraph(R"({"edges": [[3, 1, 0, 2]], "n": 4, "k": 4})");
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 2, 3}));
}

TEST(Io, RejectsMalformedDocuments) {
  const char *bad[] = {
      "",
      "[1, 2]",
      R"({"k": 4, "n": 4})",
      R"({"k": 4, "edges": []})",
      R"({"k": 4, "n": 4, "edges": [], "m": 0})",
      R"({"k": -4, "n": 4, "edges": []})",
      R"({"k": 4.0, "n": 4, "edges": []})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, 2]]})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, 2, 4]]})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, 2, 2]]})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, 2, 3], [3, 2, 1, 0]]})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, "2", 3]]})",
      R"({"k": 4, "n": 4, "edges": [0, 1, 2, 3]})",
      R"({"k": 4, "n": 4, "edges": {}})",
      R"({"k": 4, "n": 4, "edges": [[0, 1, 2, -3]]})",
      R"({"k": 1, "n": 4, "edges": []})",
  };
  for (const char *text : bad)
    EXPECT_THROW(parse_hypergraph(text), FormatError) << text;
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "hgspec_io_test.json";
  Hypergraph g = blowup_power(cycle_graph(5), 4);
  write_hypergraph(path, g);
  EXPECT_EQ(read_hypergraph(path), g);
  EXPECT_EQ(slurp(path), format_hypergraph(g));
  std::filesystem::remove(path);
  EXPECT_THROW(read_hypergraph(path), FormatError);
}

TEST(Io, EigenResultJson) {
  EigenResult r = least_h_eigenvalue(hyperstar(1, 4).graph);
  auto j = to_json(r);
  for (const char *key : {"lambda", "vector", "residual", "converged", "restarts_used"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["vector"].size(), 4u);
  EXPECT_EQ(to_json(SolverConfig{})["step_rule"], "armijo-bb");
}

TEST(Io, EigenTableHasVersionedHeader) {
  SearchReport report = find_minimizer(enumerate_hypertrees(3, 4), SolverConfig{});
  std::ostringstream os;
  write_eigen_table(os, report);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kTableSchema);
  std::getline(in, line);
  EXPECT_EQ(line, "index,n,m,lambda,residual,converged,oracle_lambda,minimizer");
  int rows = 0;
  while (std::getline(in, line))
    ++rows;
  EXPECT_EQ(rows, 2);
  EXPECT_EQ(to_json(report)["minimizers"].size(), 1u);
}
