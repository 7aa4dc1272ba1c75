#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace endgraph::cli {

/// Exit codes: 0 success or pass, 1 verified failure (witness printed),
/// 2 usage or input error.
enum Exit : int { ok = 0, failed = 1, usage = 2 };

struct RunConfig {
  std::string family;
  std::string input;
  std::map<std::string, std::string> params;
  long depth = 12;
  long threshold = 5;
  std::string format = "text";
  std::string seq;
  std::string depths;  // "a..b" sweep
  std::string end;
  std::string sources;
  std::string targets;
  std::string mode = "vertex";
  std::string side = "target";  // which minimum separator menger reports
  std::string check;
  std::string output;
  bool no_coverage = false;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endgraph::cli
