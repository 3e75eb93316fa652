#pragma once

#include <cstdint>
#include <string>

namespace ellipuc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadConfig = 2;

struct RunConfig {
  std::string family = "cn";  // cn | dn | hyperbolic | magnus | custom
  double k = 0.6;
  std::string w_text;         // empty: family default
  double w = 0.0;
  int nmax = 20;
  int trunc = 0;              // 0: derive from tail
  double tail = 1e-14;
  double tol = 1e-9;
  std::string out = "-";
  std::string format;         // csv | json; empty: command default
  std::uint64_t seed = 20240601;
  int polygon_N = 5;
  std::string profile_path;
  std::string inject_fault;   // "a1" corrupts a_1 before the three-term check
  bool extended = true;       // ELLIPUC_PRECISION != "double"
};

// Checks ranges and fills derived fields (w, defaults). Throws
// std::invalid_argument naming the offending field.
void validate(RunConfig& cfg);

int cmd_table(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_measure(const RunConfig& cfg);
int cmd_dgt(const RunConfig& cfg);
int cmd_polygon(const RunConfig& cfg);

int run(int argc, char** argv);

}  // namespace ellipuc::cli
