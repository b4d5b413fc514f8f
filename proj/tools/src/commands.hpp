#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcmt::cli {

struct CheckConfig {
  std::uint32_t max_arity = 3;
  std::uint32_t max_nesting = 2;
  std::uint64_t max_cells_per_frame = 10000;
  std::uint64_t seed = 0;
  bool parallel = false;
  std::string format = "human";  // human | machine
};

/// Exit codes: 0 pass, 1 law violation (every witness reported), 2 malformed
/// input or I/O failure.
int cmd_check(const std::string& path, const CheckConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_bim(const std::string& path, const CheckConfig& cfg, std::ostream& out,
            std::ostream& err);
int cmd_derive_bim(const std::string& path, const CheckConfig& cfg, std::ostream& out,
                   std::ostream& err);
int cmd_demo(const std::string& name, const std::string& dir, const CheckConfig& cfg,
             std::ostream& out, std::ostream& err);
int cmd_compose_span(const std::string& path, const std::vector<std::string>& spans,
                     const std::string& anchor, const CheckConfig& cfg, std::ostream& out,
                     std::ostream& err);

/// The whole command surface; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcmt::cli
