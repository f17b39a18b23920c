#pragma once

#include <string>
#include <vector>

#include "frwt/io.hpp"

namespace frwt {

struct VerifyCheck {
  std::string group;
  std::string name;
  bool pass = false;
  bool gating = true;  // informational checks never change the exit code
  double value = 0.0;  // headline measurement, compared against `threshold`
  double threshold = 0.0;
  Json details = Json::object();
};

struct VerifyOptions {
  std::vector<std::string> only;  // empty: every group
  double perturb = 0.0;           // reconstruction uses C (1 + perturb)
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  double perturb = 0.0;

  bool all_pass() const noexcept;
  Json to_json() const;
};

/// frft, wavelet, cfrwt, identities, spaces.
const std::vector<std::string>& verify_groups();

/// Built-in desk-scale suite over fixed test signals. Throws Format for an
/// unknown group name.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace frwt
