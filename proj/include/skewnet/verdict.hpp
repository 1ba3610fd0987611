#pragma once

#include <string>
#include <vector>

namespace skewnet {

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct Verdict {
  Status status = Status::Inconclusive;
  std::string witness;
};

/// Fail beats inconclusive beats pass.
Status combine(Status a, Status b);
Status combine(const std::vector<Status>& all);

}  // namespace skewnet
