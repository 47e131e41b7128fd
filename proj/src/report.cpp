#include "twistkit/report.hpp"

namespace twistkit {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "fail";
}

}  // namespace twistkit
