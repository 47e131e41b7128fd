#pragma once

#include <string>
#include <vector>

namespace twistkit {

enum class Status { pass, fail, flagged };

std::string status_name(Status s);

/// One line of a verification report.
struct ReportEntry {
  std::string id;        // stable identifier, e.g. "ybe.mybe.r_kappa"
  std::string title;     // what was checked
  Status status = Status::pass;
  std::string orders;    // truncation orders used
  std::string residual;  // rendered residual (empty when zero)
  std::string expected;  // reference form when it differs from the computed one
  std::string computed;
  std::string note;
  double seconds = 0;
};

using Report = std::vector<ReportEntry>;

inline Status worst(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::flagged || b == Status::flagged) return Status::flagged;
  return Status::pass;
}

}  // namespace twistkit
