#include "skewnet/verdict.hpp"

namespace skewnet {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

Status combine(const std::vector<Status>& all) {
  Status s = Status::Pass;
  for (auto x : all) s = combine(s, x);
  return s;
}

}  // namespace skewnet
